#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slimlat/lamps.hpp"
#include "slimlat/multifork.hpp"
#include "slimlat/poset.hpp"
#include "slimlat/reducer.hpp"

namespace slimlat {

/// Lengths above this need an explicit override.
inline constexpr int kEnumerationSoftCap = 7;

/// Canonical form of a slim rectangular lattice given by boundary heights: the
/// smaller of its sorted point list and the sorted list with x and y swapped.
std::string point_code(const std::vector<GridPoint>& points);

struct EnumeratedLattice {
  MultiforkSequence sequence;
  std::vector<GridPoint> points;
  std::string code;
  int length = 0;
};

struct IndexEntry {
  EnumeratedLattice lattice;
  std::shared_ptr<const ProvenancedLattice> built;
  LampPoset lamps;
  Poset con;
};

/// Slim rectangular lattices up to isomorphism, generated length by length:
/// grids of length l, plus every k-fold extension of a distributive cell of a
/// lattice of length l - k.
class Enumerator {
 public:
  explicit Enumerator(bool allow_large = false) : allow_large_(allow_large) {}

  /// Throws Error(budget) for lengths above the soft cap unless allowed.
  const std::vector<EnumeratedLattice>& level(int length);
  /// The same lattices, built, with lamp posets (con is left empty).
  const std::vector<IndexEntry>& indexed(int length);
  int computed() const { return static_cast<int>(levels_.size()) - 1; }

 private:
  bool allow_large_;
  std::vector<std::vector<EnumeratedLattice>> levels_{{}};
  std::vector<std::vector<IndexEntry>> indexed_;
  std::vector<bool> indexed_done_;
};

struct EnumerationIndex {
  int max_length = 0;
  /// by_length[l] holds the lattices of length l (indices 0 and 1 are empty).
  std::vector<std::vector<IndexEntry>> by_length;
  std::vector<std::size_t> counts() const;
};

/// Builds every lattice and attaches its lamp poset and Jir(Con) poset.
EnumerationIndex enumerate(int max_length, bool allow_large = false);

/// Sorted point list of a built lattice, for point_code.
std::vector<GridPoint> points_of(const ProvenancedLattice& pl);

enum class Verdict { found, not_representable, unresolved };
const char* verdict_name(Verdict v);

struct RealizabilityAnswer {
  Verdict verdict = Verdict::unresolved;
  int length = -1;
  /// Absent for the chain cases |P| <= 1.
  std::optional<MultiforkSequence> witness;
  /// Largest length searched; the window starts at |P|.
  int searched_to = -1;
  long long bound = 0;
};

/// Smallest length of a slim rectangular lattice whose lamp poset (hence
/// Jir(Con)) is isomorphic to p. The search runs from |p| up to
/// min(max_length, 2n^2-10n+15); with allow_large up to max_length.
RealizabilityAnswer realize(const Poset& p, int max_length, bool allow_large = false);
RealizabilityAnswer realize(const Poset& p, int max_length, Enumerator& lattices, bool allow_large = false);

struct SweepReport {
  int lattices = 0;
  int fixpoints_with_internal = 0;
  /// One entry per violated clause: "<code> <clause>".
  std::vector<std::string> length_below_n;
  std::vector<std::string> size_literal;
  std::vector<std::string> size_square;
  std::vector<std::string> fixpoint;
};

/// Runs check_bounds on every enumerated lattice and on its minimize fixpoint.
SweepReport sweep_bounds(int max_length, bool allow_large = false);

}  // namespace slimlat
