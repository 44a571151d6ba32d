#pragma once

#include <string>
#include <vector>

#include "slimlat/lamps.hpp"
#include "slimlat/multifork.hpp"

namespace slimlat {

/// A lamp named independently of element ids: boundary lamps by the index of
/// their tube record (grid order), internal lamps by creation step.
struct LampKey {
  bool boundary = true;
  int index = 0;
  friend bool operator==(const LampKey&, const LampKey&) = default;
};

/// Neon tubes whose trajectories pass through the two upper edges of the cell
/// extended at a given step. Tube positions are 1-based, left to right.
struct RetargetRecord {
  LampKey u;
  int alpha = 1;
  LampKey v;
  int beta = 1;
};

/// Step is 1-based; the trajectories are taken in the stage before it.
RetargetRecord locate_retarget(const ProvenancedLattice& built, int step);

/// A sequence whose lattice has the lamp of step t doubled. Throws
/// Error(invalid_input) for a bad t and Error(internal) when a relocated cell
/// is missing or not unique.
MultiforkSequence double_sequence(const MultiforkSequence& seq, int t);

struct DoublingCheck {
  MultiforkSequence doubled;
  int antube_before = 0;
  int antube_after = 0;
  int length_before = 0;
  int length_after = 0;
  /// Lamp poset of the result is isomorphic to the doubled lamp poset.
  bool poset_doubled = false;
  /// The lamp poset agrees with Jir(Con) on the result.
  bool con_iso = false;
  /// The two lamps of the doubling are comparable and have identical
  /// comparabilities with every other lamp.
  bool twins_ok = false;
  std::string failure;
  bool ok() const {
    return poset_doubled && con_iso && twins_ok && antube_after == antube_before + 2 &&
           length_after == length_before + 2;
  }
};

DoublingCheck check_double(const MultiforkSequence& seq, int t);

}  // namespace slimlat
