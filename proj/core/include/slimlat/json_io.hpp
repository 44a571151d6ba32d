#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slimlat/congruence.hpp"
#include "slimlat/multifork.hpp"
#include "slimlat/planar_diagram.hpp"
#include "slimlat/poset.hpp"
#include "slimlat/reducer.hpp"

namespace slimlat {

// All writers emit compact JSON followed by '\n'; reading and re-writing a
// document produced here reproduces it byte for byte. Readers throw
// Error(parse) on malformed input.

/// {"n": int, "covers": [[lo,hi],...]} with pairs sorted.
std::string poset_to_json(const Poset& p);
Poset poset_from_json(std::string_view text);

/// Poset fields plus "upper_order" and "lower_order", indexed by element id.
std::string diagram_to_json(const PlanarDiagram& d);
/// Without the order fields the orders are derived from the corners.
PlanarDiagram diagram_from_json(std::string_view text);

/// {"grid": [p,q], "steps": [[a,b,k],...]}.
std::string sequence_to_json(const MultiforkSequence& seq);
MultiforkSequence sequence_from_json(std::string_view text);

/// Lamps (kind, foot, peak, step, tubes, usage pattern), lamp order covers and
/// the lamp-to-congruence witness.
std::string lamp_report_json(const ProvenancedLattice& pl);

/// Join-irreducible congruences as block lists, their order and |Con L|.
std::string congruence_report_json(const CongruenceLattice& cl);

std::string reduction_trace_json(const MultiforkSequence& before, const MultiforkSequence& after,
                                 const std::vector<ReductionStep>& trace);

std::string bound_report_json(const BoundReport& r);

}  // namespace slimlat
