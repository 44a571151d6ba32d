#include "slimlat/poset.hpp"

#include <algorithm>
#include <string>

#include "slimlat/error.hpp"

namespace slimlat {

Poset Poset::from_covers(int n, std::vector<CoverPair> covers) {
  if (n < 0) fail(ErrorKind::invalid_input, "poset size must be non-negative");
  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto [lo, hi] = covers[i];
    if (lo < 0 || hi < 0 || lo >= n || hi >= n)
      fail(ErrorKind::invalid_input, "cover pair (" + std::to_string(lo) + "," + std::to_string(hi) + ") out of range");
    if (lo == hi) fail(ErrorKind::invalid_input, "cycle detected: self-cover at " + std::to_string(lo));
    if (i > 0 && covers[i - 1] == covers[i])
      fail(ErrorKind::invalid_input, "duplicate cover pair (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
  }

  std::vector<std::vector<Element>> up(static_cast<std::size_t>(n));
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (const auto& [lo, hi] : covers) {
    up[lo].push_back(hi);
    ++indegree[hi];
  }

  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<Element> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x)
    if (indegree[x] == 0) order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Element y : up[order[head]])
      if (--indegree[y] == 0) order.push_back(y);
  if (static_cast<int>(order.size()) != n) fail(ErrorKind::invalid_input, "cycle detected in cover relation");

  Poset p;
  p.n_ = n;
  p.leq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element x = *it;
    p.leq_[p.index(x, x)] = 1;
    for (Element y : up[x])
      for (Element z = 0; z < n; ++z)
        if (p.leq_[p.index(y, z)]) p.leq_[p.index(x, z)] = 1;
  }

  for (const auto& [lo, hi] : covers)
    for (Element mid : up[lo])
      if (mid != hi && p.leq(mid, hi))
        fail(ErrorKind::invalid_input, "non-reduced cover pair (" + std::to_string(lo) + "," + std::to_string(hi) +
                                           ") is implied via " + std::to_string(mid));

  p.covers_ = std::move(covers);
  p.derive_adjacency();
  return p;
}

Poset Poset::from_order(int n, std::vector<std::uint8_t> leq) {
  if (n < 0 || leq.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    fail(ErrorKind::invalid_input, "order matrix has the wrong shape");
  Poset p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  for (Element a = 0; a < n; ++a) {
    if (!p.leq(a, a)) fail(ErrorKind::invalid_input, "order relation is not reflexive");
    for (Element b = a + 1; b < n; ++b)
      if (p.leq(a, b) && p.leq(b, a)) fail(ErrorKind::invalid_input, "order relation is not antisymmetric");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool is_cover = true;
      for (Element c = 0; c < n && is_cover; ++c)
        if (p.less(a, c) && p.less(c, b)) is_cover = false;
      if (is_cover) p.covers_.emplace_back(a, b);
    }
  p.derive_adjacency();
  return p;
}

void Poset::derive_adjacency() {
  cover_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  up_.assign(static_cast<std::size_t>(n_), {});
  down_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& [lo, hi] : covers_) {
    cover_[index(lo, hi)] = 1;
    up_[lo].push_back(hi);
    down_[hi].push_back(lo);
  }
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x)
    if (down_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < n_; ++x)
    if (up_[x].empty()) out.push_back(x);
  return out;
}

Poset Poset::induced(std::span<const Element> keep) const {
  const int m = static_cast<int>(keep.size());
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) rel[static_cast<std::size_t>(i) * m + j] = leq(keep[i], keep[j]) ? 1 : 0;
  return from_order(m, std::move(rel));
}

}  // namespace slimlat
