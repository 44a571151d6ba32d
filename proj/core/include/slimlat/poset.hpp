#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace slimlat {

/// Element ids are dense integers 0..n-1.
using Element = int;
using CoverPair = std::pair<Element, Element>;

/// A finite poset given by its cover relation, with the order closure cached.
///
/// Instances are immutable; every accessor is const and safe to share across
/// threads.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from (lower, upper) cover pairs. Throws Error(invalid_input)
  /// on out-of-range ids, cycles, duplicate pairs, or pairs implied by others.
  static Poset from_covers(int n, std::vector<CoverPair> covers);

  /// Builds a poset from a reflexive, antisymmetric, transitive relation given
  /// as a row-major n*n 0/1 matrix. Antisymmetry and reflexivity are checked.
  static Poset from_order(int n, std::vector<std::uint8_t> leq);

  int size() const { return n_; }
  const std::vector<CoverPair>& covers() const { return covers_; }

  bool leq(Element a, Element b) const { return leq_[index(a, b)] != 0; }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  bool covers(Element lower, Element upper) const { return cover_[index(lower, upper)] != 0; }

  const std::vector<Element>& upper_covers(Element x) const { return up_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return down_[x]; }

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Elements of `keep` become 0..keep.size()-1 in the given order.
  Poset induced(std::span<const Element> keep) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.leq_ == b.leq_; }

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }
  void derive_adjacency();

  int n_ = 0;
  std::vector<CoverPair> covers_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint8_t> cover_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
};

}  // namespace slimlat
