#pragma once

#include <string>
#include <string_view>

#include "slimlat/multifork.hpp"

namespace slimlat {

/// Line-oriented construction recipe:
///
///   grid P Q        (first non-comment line, P, Q >= 1)
///   fork A B K      (cell address (A,B), multiplicity K >= 1)
///
/// '#' starts a comment. Throws Error(parse) with "line L, column C" context.
MultiforkSequence parse_dsl(std::string_view text);

/// One space between tokens, '\n' after every line.
std::string emit_dsl(const MultiforkSequence& seq);

/// Single-line form for logs: "grid 2 2; fork 1 1 2".
std::string inline_dsl(const MultiforkSequence& seq);

}  // namespace slimlat
