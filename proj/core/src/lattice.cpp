#include "slimlat/lattice.hpp"

#include <string>

#include "slimlat/error.hpp"

namespace slimlat {

FiniteLattice FiniteLattice::from_poset(Poset p) {
  const int n = p.size();
  if (n == 0) fail(ErrorKind::validation, "the empty poset is not a lattice");

  FiniteLattice l;
  l.poset_ = std::move(p);
  const Poset& order = l.poset_;
  l.bottom_ = -1;
  l.top_ = -1;
  for (Element x = 0; x < n; ++x) {
    bool below_all = true;
    bool above_all = true;
    for (Element y = 0; y < n; ++y) {
      below_all = below_all && order.leq(x, y);
      above_all = above_all && order.leq(y, x);
    }
    if (below_all) l.bottom_ = x;
    if (above_all) l.top_ = x;
  }
  if (l.bottom_ < 0) fail(ErrorKind::validation, "poset has no least element");
  if (l.top_ < 0) fail(ErrorKind::validation, "poset has no greatest element");

  // Heights along a topological order (covers of a valid Poset are acyclic).
  l.height_.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> pending(static_cast<std::size_t>(n));
  std::vector<Element> queue{l.bottom_};
  for (Element x = 0; x < n; ++x) pending[x] = static_cast<int>(order.lower_covers(x).size());
  l.height_[l.bottom_] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element y : order.upper_covers(x)) {
      l.height_[y] = std::max(l.height_[y], l.height_[x] + 1);
      if (--pending[y] == 0) queue.push_back(y);
    }
  }

  l.meet_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  l.join_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      Element glb = -1;
      Element lub = -1;
      for (Element c = 0; c < n; ++c) {
        if (order.leq(c, a) && order.leq(c, b) && (glb < 0 || l.height_[c] > l.height_[glb])) glb = c;
        if (order.leq(a, c) && order.leq(b, c) && (lub < 0 || l.height_[c] < l.height_[lub])) lub = c;
      }
      for (Element c = 0; c < n; ++c) {
        if (order.leq(c, a) && order.leq(c, b) && !order.leq(c, glb))
          fail(ErrorKind::validation, "elements " + std::to_string(a) + " and " + std::to_string(b) + " have no meet");
        if (order.leq(a, c) && order.leq(b, c) && !order.leq(lub, c))
          fail(ErrorKind::validation, "elements " + std::to_string(a) + " and " + std::to_string(b) + " have no join");
      }
      l.meet_[l.idx(a, b)] = l.meet_[l.idx(b, a)] = glb;
      l.join_[l.idx(a, b)] = l.join_[l.idx(b, a)] = lub;
    }
  return l;
}

bool is_semimodular(const FiniteLattice& l) {
  const int n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (l.covers(l.meet(x, y), x) && !l.covers(y, l.join(x, y))) return false;
  return true;
}

std::vector<Element> jir(const FiniteLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.poset().lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<Element> mir(const FiniteLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.poset().upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

bool is_slim(const FiniteLattice& l) {
  const auto j = jir(l);
  const auto& p = l.poset();
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = a + 1; b < j.size(); ++b) {
      if (p.comparable(j[a], j[b])) continue;
      for (std::size_t c = b + 1; c < j.size(); ++c)
        if (!p.comparable(j[a], j[c]) && !p.comparable(j[b], j[c])) return false;
    }
  return true;
}

bool is_distributive_ideal_grid(const FiniteLattice& l, Element x) {
  const auto& p = l.poset();
  std::vector<Element> ideal;
  for (Element y = 0; y < l.size(); ++y)
    if (p.leq(y, x)) ideal.push_back(y);

  // Join-irreducibles of the ideal are those of L lying below x.
  std::vector<Element> irreducibles;
  for (Element y : ideal)
    if (p.lower_covers(y).size() == 1) irreducibles.push_back(y);

  // They must split into at most two chains with no comparabilities across.
  std::vector<int> side(irreducibles.size(), -1);
  std::vector<std::size_t> chain_size(2, 0);
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    if (side[i] >= 0) continue;
    int chosen = -1;
    for (int s = 0; s < 2 && chosen < 0; ++s)
      if (chain_size[s] == 0) chosen = s;
    if (chosen < 0) return false;
    std::vector<std::size_t> stack{i};
    side[i] = chosen;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      ++chain_size[chosen];
      for (std::size_t b = 0; b < irreducibles.size(); ++b)
        if (side[b] < 0 && p.comparable(irreducibles[a], irreducibles[b])) {
          side[b] = chosen;
          stack.push_back(b);
        }
    }
  }
  for (std::size_t a = 0; a < irreducibles.size(); ++a)
    for (std::size_t b = a + 1; b < irreducibles.size(); ++b)
      if (side[a] == side[b] && !p.comparable(irreducibles[a], irreducibles[b])) return false;
  return ideal.size() == (chain_size[0] + 1) * (chain_size[1] + 1);
}

}  // namespace slimlat
