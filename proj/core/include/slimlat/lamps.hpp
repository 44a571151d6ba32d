#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slimlat/congruence.hpp"
#include "slimlat/multifork.hpp"
#include "slimlat/planar_diagram.hpp"

namespace slimlat {

enum class LampKind { boundary, internal };

struct Lamp {
  LampKind kind = LampKind::boundary;
  Element foot = 0;
  Element peak = 0;
  /// Neon tubes left to right.
  std::vector<Edge> tubes;
  /// Creation step; 0 for boundary lamps, -1 when no provenance is known.
  int step = -1;

  bool internal() const { return kind == LampKind::internal; }
};

/// Lamps read off the diagram alone: boundary lamps in trajectory order, then
/// internal lamps by peak id. Steps are -1 for internal lamps.
std::vector<Lamp> diagram_lamps(const PlanarDiagram& d);

/// Boundary lamps in trajectory order, then internal lamps by creation step.
std::vector<Lamp> lamps(const ProvenancedLattice& pl);

/// Index of the lamp owning the given neon tube, or -1.
int lamp_of_tube(const std::vector<Lamp>& ls, const Edge& tube);

/// Owners of the top edges of the trajectories through the upper-left and the
/// upper-right edge of CircR of each internal lamp; -1 for boundary lamps.
struct NwlNel {
  int nwl = -1;
  int nel = -1;
};
std::vector<NwlNel> nwl_nel(const PlanarDiagram& d, const std::vector<Lamp>& ls);

/// Internal lamps that are neither Nwl nor Nel of any internal lamp, i.e. the
/// minimal internal lamps.
std::vector<int> minimal_internal_lamps(const PlanarDiagram& d, const std::vector<Lamp>& ls);

struct CircR {
  Element bottom = 0;
  Element top = 0;
  /// Forest node of the cell extended when the lamp was created.
  int origin = -1;
};

/// Throws Error(invalid_input) for boundary lamps.
CircR circ_r(const ProvenancedLattice& pl, const Lamp& lamp);

/// Pairs (i, j) of lamp indices, sorted.
using LampRelation = std::vector<std::pair<int, int>>;

/// (I, J) with I internal and every current cell around Foot I descending from
/// the original territory of some tube of J (Foot I inside Enl J).
LampRelation rho_foot(const ProvenancedLattice& pl, const std::vector<Lamp>& ls);
/// (I, J) with the origin cell of CircR I descending from the original
/// territory of some tube of J.
LampRelation rho_circr(const ProvenancedLattice& pl, const std::vector<Lamp>& ls);

struct LampPoset {
  std::vector<Lamp> lamps;
  /// i <= j iff (i, j) is in the reflexive-transitive closure of rho_foot.
  Poset order;
};

LampPoset lamp_poset(const ProvenancedLattice& pl);

/// Order generated by U -> Nwl U, U -> Nel U; covers U < V for V minimal in
/// {Nwl U, Nel U}. Returns (order, cover pairs).
std::pair<Poset, std::vector<CoverPair>> covers_via_nwl_nel(const PlanarDiagram& d, const std::vector<Lamp>& ls);

struct LampConIso {
  bool ok = false;
  std::string failure;
  /// witness[i] = index into con.jir of con(Foot I_i, Peak I_i).
  std::vector<int> witness;
  CongruenceLattice con;
};

LampConIso verify_lamp_con_iso(const LampPoset& lp, const FiniteLattice& l);
LampConIso verify_lamp_con_iso(const ProvenancedLattice& pl);

/// Some other internal lamp has its CircR origin inside LEOT(p) or REOT(p),
/// p being the tube_index-th tube of lamp ls[lamp].
bool is_used(const ProvenancedLattice& pl, const std::vector<Lamp>& ls, int lamp, int tube_index);

struct LampUsage {
  int lamp = -1;
  /// 'u' for used tubes, '0' for unused, left to right.
  std::string pattern;
  int used = 0;
  int unused = 0;
};

/// One entry per internal lamp, by creation step.
std::vector<LampUsage> usage_stats(const ProvenancedLattice& pl, const std::vector<Lamp>& ls);
std::vector<LampUsage> usage_stats(const ProvenancedLattice& pl);

/// Poset over lamp indices from an arbitrary relation (reflexive-transitive
/// closure). Throws Error(internal) if the closure is not antisymmetric.
Poset closure_poset(int n, const LampRelation& rel);

}  // namespace slimlat
