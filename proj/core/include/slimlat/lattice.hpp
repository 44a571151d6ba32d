#pragma once

#include <vector>

#include "slimlat/poset.hpp"

namespace slimlat {

/// A finite lattice: a poset together with its meet and join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Throws Error(validation) when the poset lacks a 0, a 1, or some glb/lub.
  static FiniteLattice from_poset(Poset p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  Element meet(Element a, Element b) const { return meet_[idx(a, b)]; }
  Element join(Element a, Element b) const { return join_[idx(a, b)]; }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }
  bool covers(Element lower, Element upper) const { return poset_.covers(lower, upper); }

  /// Length of the longest chain from 0 to x.
  int height(Element x) const { return height_[x]; }
  int length() const { return height_.empty() ? 0 : height_[top_]; }

 private:
  std::size_t idx(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size()) + static_cast<std::size_t>(b);
  }

  Poset poset_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  std::vector<int> height_;
};

/// x ^ y < x implies y < x v y, for all x, y.
bool is_semimodular(const FiniteLattice& l);

/// Elements with exactly one lower cover (0 excluded).
std::vector<Element> jir(const FiniteLattice& l);
/// Elements with exactly one upper cover (1 excluded).
std::vector<Element> mir(const FiniteLattice& l);

/// Jir L is a union of two chains, i.e. has no 3-element antichain.
bool is_slim(const FiniteLattice& l);

/// The principal ideal of x is isomorphic to a direct product of two chains.
bool is_distributive_ideal_grid(const FiniteLattice& l, Element x);

}  // namespace slimlat
