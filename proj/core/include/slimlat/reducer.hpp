#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slimlat/decompose.hpp"
#include "slimlat/lamps.hpp"
#include "slimlat/multifork.hpp"

namespace slimlat {

/// L minus the given elements is closed under meets of L.
bool meet_closed_without(const FiniteLattice& l, const std::vector<Element>& removed);

enum class ReductionRule { sandwiched, neighboring };

const char* rule_name(ReductionRule r);

struct ReductionStep {
  ReductionRule rule = ReductionRule::sandwiched;
  /// Lamp and removed tube, in ids of the lattice before the step.
  Element lamp_foot = 0;
  Element lamp_peak = 0;
  int lamp_step = 0;
  int tube_index = 0;
  Edge removed_tube;
  int size_before = 0;
  int size_after = 0;
  int antube_before = 0;
  int antube_after = 0;
  /// Jir(Con) posets before and after are isomorphic.
  bool con_preserved = false;
  /// Every other lamp keeps its foot and tube count, and its peak unless the
  /// peak was on the removed fork; the reduced lamp keeps its peak and loses
  /// exactly one tube.
  bool bookkeeping_ok = false;
};

struct Reduction {
  /// The reduced lattice as an induced subdiagram of the input.
  SubDiagram raw;
  /// Rebuilt with provenance from a decomposition of raw.diagram.
  ProvenancedLattice result;
  ReductionStep step;
};

/// Removes F(p) for the middle tube p of three consecutive tubes of an
/// internal lamp when p is used and its neighbours are not. Throws
/// Error(validation) naming the failed precondition.
Reduction remove_sandwiched(const ProvenancedLattice& pl, int lamp, int tube);

/// Removes F(n2) where n1, n2 are adjacent unused tubes of an internal lamp,
/// re-peaking the surviving edges that ended on the removed fork. A left n2 is
/// handled on the mirrored diagram.
Reduction remove_neighboring(const ProvenancedLattice& pl, int lamp, int n1, int n2);

/// The first applicable removal in minimize order, if any.
std::optional<Reduction> reduce_once(const ProvenancedLattice& pl);

struct MinimizeResult {
  ProvenancedLattice result;
  std::vector<ReductionStep> trace;
};

/// Applies the two removals (scanning internal lamps by creation step, then
/// left to right; "00" before "0u0" at the same position) until no pattern
/// remains.
MinimizeResult minimize(const ProvenancedLattice& pl);

/// 2n^2 - 10n + 15.
long long length_bound(long long n);

struct BoundReport {
  int n = 0;
  int m = 0;
  int k = 0;
  int s = 0;
  int length = 0;
  int antube = 0;
  int size = 0;
  long long bound = 0;
  /// 1 + (len-1)^2, as stated; fails on small lattices such as B_2 and S_7.
  long long size_bound = 0;
  /// len^2, the bound the chain-cover count actually supports.
  long long square_bound = 0;
  bool rectangular = false;
  bool fixpoint = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// For any finite lattice: len >= |Jir(Con L)|.
BoundReport check_bounds(const FiniteLattice& l);
/// Adds the slim rectangular facts; with at_fixpoint also the length bound
/// and the fixpoint tube inequalities.
BoundReport check_bounds(const ProvenancedLattice& pl, bool at_fixpoint);

}  // namespace slimlat
