#pragma once

#include <memory>
#include <vector>

#include "slimlat/planar_diagram.hpp"

namespace slimlat {

/// Boundary heights (of l_proj and r_proj) of a cell's bottom.
struct CellAddress {
  int a = 0;
  int b = 0;
  friend bool operator==(const CellAddress&, const CellAddress&) = default;
  friend auto operator<=>(const CellAddress&, const CellAddress&) = default;
};

struct ForkStep {
  CellAddress cell;
  int k = 1;
  friend bool operator==(const ForkStep&, const ForkStep&) = default;
};

struct MultiforkSequence {
  int p = 1;
  int q = 1;
  std::vector<ForkStep> steps;
  friend bool operator==(const MultiforkSequence&, const MultiforkSequence&) = default;
};

/// Every 4-cell that ever existed during a build. Children of a node are the
/// cells that replaced it in the next extension touching it.
struct CellNode {
  int parent = -1;
  std::vector<int> children;
  int stage = 0;
  FourCell cell;
};

class CellForest {
 public:
  int add(int parent, int stage, const FourCell& cell);
  const CellNode& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  int size() const { return static_cast<int>(nodes_.size()); }
  /// node == ancestor or ancestor lies on node's parent chain.
  bool descends(int node, int ancestor) const;
  bool descends_from_any(int node, const std::vector<int>& ancestors) const;

 private:
  std::vector<CellNode> nodes_;
};

/// A neon tube with its territory, all as forest nodes of the creation stage.
struct TubeRecord {
  Edge tube;
  int step = 0;
  bool boundary = false;
  std::vector<int> ot;
  std::vector<int> leot;
  std::vector<int> reot;
};

/// The internal lamp created by one multifork step.
struct StepRecord {
  Element peak = 0;
  int k = 0;
  /// Forest node of the extended cell H.
  int origin = -1;
  CellAddress address;
};

class ProvenancedLattice {
 public:
  const PlanarDiagram& diagram() const { return diagram_; }
  const FiniteLattice& lattice() const { return diagram_.lattice(); }
  int size() const { return diagram_.size(); }
  const std::vector<GridPoint>& points() const { return points_; }
  /// Heights of the two lower boundaries (the corners sit at (P,0) and (0,Q)).
  int width_left() const { return extent_.x; }
  int width_right() const { return extent_.y; }
  Corners corners() const { return corners_; }

  /// Element at the given boundary heights, or -1.
  Element at(GridPoint g) const;

  const CellForest& forest() const { return forest_; }
  const std::vector<FourCell>& cells() const { return cells_; }
  /// Forest node of the current cell with the given bottom, or -1.
  int leaf_node(Element bottom) const { return leaf_[bottom]; }

  const std::vector<TubeRecord>& tubes() const { return tubes_; }
  /// Index into tubes() of the tube with this foot, or -1.
  int tube_index(Element foot) const;
  const std::vector<StepRecord>& steps() const { return steps_; }

  const MultiforkSequence& sequence() const { return sequence_; }
  int stage() const { return static_cast<int>(sequence_.steps.size()); }
  /// The lattice after the first i steps (i <= stage()).
  const ProvenancedLattice& stage_lattice(int i) const;

  friend ProvenancedLattice grid(int p, int q);
  friend ProvenancedLattice multifork_extend(const ProvenancedLattice& pl, CellAddress cell, int k);

 private:
  void finish(const std::vector<GridPoint>& points, GridPoint extent);

  PlanarDiagram diagram_;
  std::vector<GridPoint> points_;
  GridPoint extent_;
  std::vector<Element> at_;
  Corners corners_;
  CellForest forest_;
  std::vector<FourCell> cells_;
  std::vector<int> leaf_;
  std::vector<TubeRecord> tubes_;
  std::vector<StepRecord> steps_;
  MultiforkSequence sequence_;
  std::shared_ptr<const ProvenancedLattice> previous_;
};

/// Throws Error(invalid_input) if p or q < 1.
ProvenancedLattice grid(int p, int q);

/// Throws Error(validation) if the cell does not exist or its top's ideal is
/// not a grid; Error(internal) if the result fails post-validation.
ProvenancedLattice multifork_extend(const ProvenancedLattice& pl, CellAddress cell, int k);

/// Errors from individual steps are rethrown with the step number prepended.
ProvenancedLattice build(const MultiforkSequence& seq);

/// Point set of the lattice obtained by a k-fold multifork at the cell with
/// bottom (a,b); new points follow the shifted old ones. No validation.
std::vector<GridPoint> fork_points(const std::vector<GridPoint>& points, CellAddress cell, int k);

/// Whether the box [0..a+1] x [0..b+1] is fully present (the cell at (a,b)
/// exists and is distributive).
bool has_distributive_cell(const std::vector<GridPoint>& points, CellAddress cell);

/// Lattice with product order on a meet-closed point set; ids follow `points`.
FiniteLattice lattice_from_points(const std::vector<GridPoint>& points);

CellAddress cell_address(const ProvenancedLattice& pl, Element bottom);
/// Bottom element of the addressed cell; throws Error(validation) if none.
Element resolve_address(const ProvenancedLattice& pl, CellAddress cell);

}  // namespace slimlat
