#include "slimlat/congruence.hpp"

#include <algorithm>
#include <unordered_map>

#include "slimlat/disjoint_set.hpp"
#include "slimlat/error.hpp"

namespace slimlat {

namespace {

Congruence from_disjoint_set(DisjointSet& ds, int n) {
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) block[x] = ds.find(x);
  return Congruence(std::move(block));
}

}  // namespace

Congruence::Congruence(std::vector<int> block_of) : block_(std::move(block_of)) {
  std::unordered_map<int, int> renumber;
  for (int& b : block_) {
    auto [it, inserted] = renumber.emplace(b, static_cast<int>(renumber.size()));
    b = it->second;
  }
  blocks_ = static_cast<int>(renumber.size());
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out(static_cast<std::size_t>(blocks_));
  for (Element x = 0; x < size(); ++x) out[block_[x]].push_back(x);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  std::vector<int> image(static_cast<std::size_t>(blocks_), -1);
  for (Element x = 0; x < size(); ++x) {
    int& target = image[block_[x]];
    if (target < 0) target = other.block_[x];
    else if (target != other.block_[x]) return false;
  }
  return true;
}

Congruence identity_congruence(int n) {
  std::vector<int> block(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) block[x] = x;
  return Congruence(std::move(block));
}

Congruence principal_congruence(const FiniteLattice& l, Element a, Element b) {
  const int n = l.size();
  DisjointSet ds(n);
  ds.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      const Element r = ds.find(x);
      if (r == x) continue;
      for (Element z = 0; z < n; ++z) {
        changed |= ds.unite(l.meet(x, z), l.meet(r, z));
        changed |= ds.unite(l.join(x, z), l.join(r, z));
      }
    }
  }
  return from_disjoint_set(ds, n);
}

Congruence congruence_join(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size()) fail(ErrorKind::invalid_input, "congruences over different carriers");
  const int n = a.size();
  DisjointSet ds(n);
  std::vector<Element> first_a(static_cast<std::size_t>(a.block_count()), -1);
  std::vector<Element> first_b(static_cast<std::size_t>(b.block_count()), -1);
  for (Element x = 0; x < n; ++x) {
    Element& fa = first_a[a.block(x)];
    if (fa < 0) fa = x; else ds.unite(fa, x);
    Element& fb = first_b[b.block(x)];
    if (fb < 0) fb = x; else ds.unite(fb, x);
  }
  return from_disjoint_set(ds, n);
}

bool is_compatible(const FiniteLattice& l, const Congruence& c) {
  const int n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (!c.same(l.meet(x, z), l.meet(y, z)) || !c.same(l.join(x, z), l.join(y, z))) return false;
    }
  return true;
}

bool has_convex_blocks(const FiniteLattice& l, const Congruence& c) {
  const int n = l.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!c.same(x, y) || !l.leq(x, y)) continue;
      for (Element z = 0; z < n; ++z)
        if (l.leq(x, z) && l.leq(z, y) && !c.same(x, z)) return false;
    }
  return true;
}

CongruenceLattice congruence_lattice(const FiniteLattice& l) {
  CongruenceLattice out;
  for (const auto& [lo, hi] : l.poset().covers()) {
    Congruence c = principal_congruence(l, lo, hi);
    if (std::find(out.jir.begin(), out.jir.end(), c) != out.jir.end()) continue;
    out.jir.push_back(std::move(c));
    out.generators.emplace_back(lo, hi);
  }
  const int m = static_cast<int>(out.jir.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[static_cast<std::size_t>(i * m + j)] = out.jir[i].refines(out.jir[j]) ? 1 : 0;
  out.order = Poset::from_order(m, std::move(leq));
  out.size = count_down_sets(out.order);
  return out;
}

int find_congruence(const CongruenceLattice& cl, const Congruence& c) {
  for (std::size_t i = 0; i < cl.jir.size(); ++i)
    if (cl.jir[i] == c) return static_cast<int>(i);
  return -1;
}

namespace {

std::uint64_t count_down_sets_in(std::uint64_t mask, const std::vector<std::uint64_t>& below,
                                 const std::vector<std::uint64_t>& above,
                                 std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (mask == 0) return 1;
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  const int x = __builtin_ctzll(mask);
  // Down-sets avoiding x avoid its up-set; those containing x contain its down-set.
  const std::uint64_t result = count_down_sets_in(mask & ~above[x], below, above, memo) +
                               count_down_sets_in(mask & ~below[x], below, above, memo);
  memo.emplace(mask, result);
  return result;
}

}  // namespace

std::uint64_t count_down_sets(const Poset& p) {
  const int n = p.size();
  if (n > 64) fail(ErrorKind::budget, "down-set counting supports at most 64 elements");
  std::vector<std::uint64_t> below(static_cast<std::size_t>(n), 0);
  std::vector<std::uint64_t> above(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (p.leq(y, x)) below[x] |= std::uint64_t{1} << y;
      if (p.leq(x, y)) above[x] |= std::uint64_t{1} << y;
    }
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return count_down_sets_in(full, below, above, memo);
}

}  // namespace slimlat
