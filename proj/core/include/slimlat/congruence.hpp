#pragma once

#include <cstdint>
#include <vector>

#include "slimlat/lattice.hpp"
#include "slimlat/poset.hpp"

namespace slimlat {

/// A partition of the lattice carrier; block ids are normalized so that block
/// numbers appear in increasing order of their smallest element.
class Congruence {
 public:
  Congruence() = default;
  explicit Congruence(std::vector<int> block_of);

  int size() const { return static_cast<int>(block_.size()); }
  int block_count() const { return blocks_; }
  int block(Element x) const { return block_[x]; }
  bool same(Element x, Element y) const { return block_[x] == block_[y]; }
  std::vector<std::vector<Element>> blocks() const;

  /// Every block of *this lies inside a block of other.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.block_ == b.block_; }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.block_ < b.block_; }

 private:
  std::vector<int> block_;
  int blocks_ = 0;
};

Congruence identity_congruence(int n);

/// Smallest congruence identifying a and b (partition closure to a fixpoint).
Congruence principal_congruence(const FiniteLattice& l, Element a, Element b);

/// Join in Con L: transitive closure of the union.
Congruence congruence_join(const Congruence& a, const Congruence& b);

/// x ~ y implies x^z ~ y^z and xvz ~ yvz for all z.
bool is_compatible(const FiniteLattice& l, const Congruence& c);

/// Every block is an interval of the order (order-convex).
bool has_convex_blocks(const FiniteLattice& l, const Congruence& c);

struct CongruenceLattice {
  /// Distinct con(a,b) over covering pairs a < b.
  std::vector<Congruence> jir;
  /// One generating prime interval per entry of jir.
  std::vector<CoverPair> generators;
  /// Containment order on jir (i <= j iff jir[i] refines jir[j]).
  Poset order;
  /// Number of down-sets of `order`, i.e. |Con L|.
  std::uint64_t size = 0;
};

CongruenceLattice congruence_lattice(const FiniteLattice& l);

/// Index into cl.jir of a congruence equal to c, or -1.
int find_congruence(const CongruenceLattice& cl, const Congruence& c);

/// Number of down-sets (order ideals, including the empty one); |p| <= 64.
std::uint64_t count_down_sets(const Poset& p);

}  // namespace slimlat
