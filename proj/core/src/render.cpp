#include "slimlat/render.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "slimlat/error.hpp"

namespace slimlat {

namespace {

std::string decimal(int numerator, int denominator) {
  // Exact for the denominators used here (1, 2, 4).
  std::ostringstream out;
  const int whole = numerator / denominator;
  const int rest = std::abs(numerator % denominator);
  if (numerator < 0 && whole == 0) out << '-';
  out << whole;
  if (rest != 0) {
    out << '.';
    int r = rest;
    while (r != 0) {
      r *= 10;
      out << r / denominator;
      r %= denominator;
    }
  }
  return out.str();
}

std::string dot(const PlanarDiagram& d) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < d.size(); ++x) out << "  " << x << " [label=\"" << x << "\"];\n";
  for (const auto& [lo, hi] : d.poset().covers()) out << "  " << lo << " -> " << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string svg(const PlanarDiagram& d, const std::vector<Position>& pos) {
  int min_h = 0;
  int max_h = 0;
  int max_v = 0;
  for (const auto& p : pos) {
    min_h = std::min(min_h, p.h);
    max_h = std::max(max_h, p.h);
    max_v = std::max(max_v, p.v);
  }
  constexpr int unit = 20;
  constexpr int margin = 20;
  const int width = (max_h - min_h) * unit + 2 * margin;
  const int height = max_v * unit + 2 * margin;
  auto sx = [&](int h) { return decimal((h - min_h) * unit + margin, 1); };
  auto sy = [&](int v) { return decimal((max_v - v) * unit + margin, 1); };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  for (const auto& [lo, hi] : d.poset().covers())
    out << "  <line x1=\"" << sx(pos[lo].h) << "\" y1=\"" << sy(pos[lo].v) << "\" x2=\"" << sx(pos[hi].h)
        << "\" y2=\"" << sy(pos[hi].v) << "\" stroke=\"black\"/>\n";
  for (Element x = 0; x < d.size(); ++x)
    out << "  <circle id=\"e" << x << "\" cx=\"" << sx(pos[x].h) << "\" cy=\"" << sy(pos[x].v)
        << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  out << "</svg>\n";
  return out.str();
}

std::string tikz(const PlanarDiagram& d, const std::vector<Position>& pos) {
  std::ostringstream out;
  out << "\\begin{tikzpicture}\n";
  for (Element x = 0; x < d.size(); ++x)
    out << "  \\node[circle,draw,inner sep=1.5pt] (e" << x << ") at (" << decimal(pos[x].h, 2) << ","
        << decimal(pos[x].v, 2) << ") {};\n";
  for (const auto& [lo, hi] : d.poset().covers()) out << "  \\draw (e" << lo << ") -- (e" << hi << ");\n";
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace

std::vector<Position> layout(const PlanarDiagram& d) {
  const auto coords = coordinates(d);
  std::vector<Position> out;
  out.reserve(coords.size());
  for (const auto& g : coords) out.push_back({g.y - g.x, g.x + g.y});
  return out;
}

SlopeReport validate_slopes(const PlanarDiagram& d, const std::vector<Position>& pos) {
  SlopeReport r;
  const auto on_boundary = boundary_mask(d);
  for (const auto& [lo, hi] : d.poset().covers()) {
    const int dh = std::abs(pos[hi].h - pos[lo].h);
    const int dv = pos[hi].v - pos[lo].v;
    const bool internal_mir = !on_boundary[lo] && d.upper_covers(lo).size() == 1;
    const std::string edge = std::to_string(lo) + "->" + std::to_string(hi);
    if (internal_mir) {
      if (dh < dv) ++r.precipitous;
      else r.failures.push_back("edge " + edge + " with internal meet-irreducible foot is not precipitous");
    } else {
      if (dh == dv && dv > 0) ++r.normal;
      else r.failures.push_back("edge " + edge + " does not have slope +1 or -1");
    }
  }
  return r;
}

RenderFormat render_format(std::string_view name) {
  if (name == "dot") return RenderFormat::dot;
  if (name == "svg") return RenderFormat::svg;
  if (name == "tikz") return RenderFormat::tikz;
  fail(ErrorKind::invalid_input, "unknown render format '" + std::string(name) + "'");
}

std::string render(const PlanarDiagram& d, RenderFormat format) {
  if (format == RenderFormat::dot) return dot(d);
  const auto pos = layout(d);
  if (const auto report = validate_slopes(d, pos); !report.ok())
    fail(ErrorKind::internal, "layout failed slope validation: " + report.failures.front());
  return format == RenderFormat::svg ? svg(d, pos) : tikz(d, pos);
}

Poset parse_dot(std::string_view text) {
  static const std::regex edge_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*;?\s*$)");
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  int n = 0;
  std::vector<CoverPair> covers;
  std::istringstream in{std::string(text)};
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, edge_re)) {
      const int lo = std::stoi(m[1]);
      const int hi = std::stoi(m[2]);
      covers.emplace_back(lo, hi);
      n = std::max({n, lo + 1, hi + 1});
    } else if (std::regex_match(line, m, node_re)) {
      n = std::max(n, std::stoi(m[1]) + 1);
    }
  }
  return Poset::from_covers(n, std::move(covers));
}

}  // namespace slimlat
