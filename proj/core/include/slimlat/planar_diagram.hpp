#pragma once

#include <string>
#include <vector>

#include "slimlat/lattice.hpp"

namespace slimlat {

struct Edge {
  Element foot = 0;
  Element peak = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct FourCell {
  Element bottom = 0;
  Element left = 0;
  Element right = 0;
  Element top = 0;
  friend bool operator==(const FourCell&, const FourCell&) = default;
};

/// Edges from the left boundary to the right boundary; cells[i] is the bottom
/// of the 4-cell having edges[i] and edges[i+1] as opposite sides.
struct Trajectory {
  std::vector<Edge> edges;
  std::vector<Element> cells;
  int top_index = 0;
};

struct Corners {
  Element left = 0;
  Element right = 0;
};

struct BoundaryChains {
  std::vector<Element> left;
  std::vector<Element> right;
};

struct NeonTubes {
  std::vector<Edge> boundary;
  std::vector<Edge> internal;
};

/// Boundary-projection heights: x = height of x ^ lcorner, y = height of x ^ rcorner.
struct GridPoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// A lattice with its upper and lower covers listed left to right.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  /// Throws Error(invalid_input) unless each list is a permutation of the
  /// corresponding covers.
  static PlanarDiagram from_orders(FiniteLattice l, std::vector<std::vector<Element>> upper,
                                   std::vector<std::vector<Element>> lower);

  /// Orders covers by decreasing height of x ^ lcorner (larger means further left).
  static PlanarDiagram with_left_corner(FiniteLattice l, Element lcorner);

  /// Picks the smaller-id doubly irreducible element as the left corner.
  /// Throws Error(validation) unless there are exactly two.
  static PlanarDiagram derive(FiniteLattice l);

  const FiniteLattice& lattice() const { return lattice_; }
  const Poset& poset() const { return lattice_.poset(); }
  int size() const { return lattice_.size(); }
  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  const std::vector<std::vector<Element>>& upper_order() const { return upper_; }
  const std::vector<std::vector<Element>>& lower_order() const { return lower_; }

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.poset() == b.poset() && a.upper_ == b.upper_ && a.lower_ == b.lower_;
  }

 private:
  FiniteLattice lattice_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
};

/// Elements with exactly one upper and exactly one lower cover.
std::vector<Element> doubly_irreducibles(const FiniteLattice& l);

BoundaryChains boundary_chains(const PlanarDiagram& d);
/// Throws Error(validation) unless there are exactly two doubly irreducible
/// elements, one on each boundary, and they are complements.
Corners corners(const PlanarDiagram& d);

Element l_proj(const PlanarDiagram& d, Element x);
Element r_proj(const PlanarDiagram& d, Element x);
inline Element l_proj(const PlanarDiagram& d, const Corners& c, Element x) { return d.lattice().meet(x, c.left); }
inline Element r_proj(const PlanarDiagram& d, const Corners& c, Element x) { return d.lattice().meet(x, c.right); }

std::vector<GridPoint> coordinates(const PlanarDiagram& d);

/// Cells formed by consecutive upper covers. Throws Error(validation) when the
/// join of such a pair does not cover both (a region wider than a 4-cell).
std::vector<FourCell> four_cells(const PlanarDiagram& d);

/// Throws Error(validation) if an edge class is not a boundary-to-boundary path
/// or does not contain exactly one neon tube.
std::vector<Trajectory> trajectories(const PlanarDiagram& d);

bool is_neon_tube(const PlanarDiagram& d, const Edge& e);
NeonTubes neon_tubes(const PlanarDiagram& d);
/// On the left or right boundary chain.
std::vector<bool> boundary_mask(const PlanarDiagram& d);

struct SlimRectangularReport {
  bool ok = true;
  std::string failure;
  explicit operator bool() const { return ok; }
};

/// Checks: cover orders consistent with boundary projections, every region a
/// 4-cell, at most one cell per bottom, two complementary doubly irreducible
/// corners on opposite boundaries, semimodularity, slimness.
SlimRectangularReport is_slim_rectangular(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);

/// Breadth-first encoding from 0 following left-to-right upper covers; the
/// canonical code is the smaller of the encodings of d and mirror(d).
std::string diagram_code(const PlanarDiagram& d);
std::string canonical_code(const PlanarDiagram& d);

}  // namespace slimlat
