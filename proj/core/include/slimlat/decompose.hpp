#pragma once

#include <vector>

#include "slimlat/multifork.hpp"
#include "slimlat/planar_diagram.hpp"

namespace slimlat {

/// F(p): the intervals [l_proj(Foot p), Foot p] and [r_proj(Foot p), Foot p],
/// sorted by id.
std::vector<Element> fork_elements(const PlanarDiagram& d, const Edge& tube);

struct SubDiagram {
  PlanarDiagram diagram;
  /// kept[new id] = old id.
  std::vector<Element> kept;
};

/// Induced subposet on the complement of `removed`, with covers ordered by the
/// surviving left corner. Throws Error(validation) if it is not a lattice or
/// the left corner was removed.
SubDiagram remove_elements(const PlanarDiagram& d, const std::vector<Element>& removed);

/// A multifork sequence whose build is isomorphic to d. Throws
/// Error(validation) if d is not slim rectangular, Error(internal) if no
/// sequence is found or the round trip fails.
MultiforkSequence decompose(const PlanarDiagram& d);

/// build(decompose(d)).
ProvenancedLattice provenance(const PlanarDiagram& d);

}  // namespace slimlat
