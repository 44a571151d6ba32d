#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "slimlat/poset.hpp"

namespace slimlat {

/// An order isomorphism p -> q as an id map (result[x] is the image of x), or
/// nullopt. Backtracking over classes of elements with equal local invariants.
std::optional<std::vector<Element>> poset_iso(const Poset& p, const Poset& q);

/// Replaces j by a 2-chain j'' < j' with the same external comparabilities.
/// j' keeps id j; j'' receives the new id p.size().
Poset poset_double(const Poset& p, Element j);

/// Named families:
///   "chain" n, "antichain" n,
///   "Y" (4 elements: 0 < 1 < 2, 1 < 3),
///   "P" n >= 4 (c_1..c_{n-3} < u < a, u < b; ids c.., u = n-3, a = n-2, b = n-1),
///   "Q" n >= 3 (n-2 minimal elements each below both maximal ones n-2, n-1).
/// Throws Error(invalid_input) for unknown names or n out of range.
Poset named_poset(std::string_view name, int n);

}  // namespace slimlat
