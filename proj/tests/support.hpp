#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "slimlat/dsl.hpp"
#include "slimlat/lattice.hpp"
#include "slimlat/multifork.hpp"

namespace fixtures {

/// "grid 1 1; fork 0 0 1" -> sequence.
inline slimlat::MultiforkSequence seq(std::string_view inline_form) {
  std::string text(inline_form);
  for (std::size_t pos; (pos = text.find("; ")) != std::string::npos;) text.replace(pos, 2, "\n");
  return slimlat::parse_dsl(text);
}

inline slimlat::ProvenancedLattice built(std::string_view inline_form) { return slimlat::build(seq(inline_form)); }

inline constexpr std::string_view kS7 = "grid 1 1; fork 0 0 1";
inline constexpr std::string_view kB2 = "grid 1 1";
inline constexpr std::string_view kWideFork = "grid 2 2; fork 1 1 2";
/// An internal lamp whose tube pattern is "0u0".
inline constexpr std::string_view kSandwich = "grid 1 1; fork 0 0 3; fork 0 2 1";

inline slimlat::FiniteLattice from_covers(int n, std::vector<slimlat::CoverPair> covers) {
  return slimlat::FiniteLattice::from_poset(slimlat::Poset::from_covers(n, std::move(covers)));
}

inline slimlat::FiniteLattice chain(int n) {
  std::vector<slimlat::CoverPair> c;
  for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
  return from_covers(n, c);
}

/// 0 < a=1 < b=2 < 4, 0 < c=3 < 4.
inline slimlat::FiniteLattice n5() { return from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}); }
inline slimlat::FiniteLattice m3() { return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}); }
/// Subsets of {0,1,2} as bitmasks.
inline slimlat::FiniteLattice b3() {
  std::vector<slimlat::CoverPair> c;
  for (int s = 0; s < 8; ++s)
    for (int b = 0; b < 3; ++b)
      if (!(s & (1 << b))) c.emplace_back(s, s | (1 << b));
  return from_covers(8, c);
}

inline oracle::Order order_of(const slimlat::FiniteLattice& l) { return oracle::from_poset(l.poset()); }

}  // namespace fixtures
