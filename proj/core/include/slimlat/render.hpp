#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slimlat/planar_diagram.hpp"

namespace slimlat {

/// Drawing position of an element: (y - x, x + y) in boundary-height
/// coordinates, so normal edges have slope +1 or -1.
struct Position {
  int h = 0;
  int v = 0;
  friend bool operator==(const Position&, const Position&) = default;
};

std::vector<Position> layout(const PlanarDiagram& d);

struct SlopeReport {
  int normal = 0;
  int precipitous = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Edges whose foot is an internal meet-irreducible must be steeper than 45
/// degrees; every other edge must have slope exactly +1 or -1.
SlopeReport validate_slopes(const PlanarDiagram& d, const std::vector<Position>& pos);

enum class RenderFormat { dot, svg, tikz };

/// Throws Error(invalid_input) for unknown names.
RenderFormat render_format(std::string_view name);

/// Throws Error(internal) if the layout fails slope validation.
std::string render(const PlanarDiagram& d, RenderFormat format);

/// Reads the node and edge statements written by render(d, dot).
Poset parse_dot(std::string_view text);

}  // namespace slimlat
