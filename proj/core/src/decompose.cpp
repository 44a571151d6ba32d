#include "slimlat/decompose.hpp"

#include <algorithm>
#include <optional>

#include "slimlat/error.hpp"
#include "slimlat/lamps.hpp"

namespace slimlat {

std::vector<Element> fork_elements(const PlanarDiagram& d, const Edge& tube) {
  const auto c = corners(d);
  const auto& l = d.lattice();
  const Element lo_left = l_proj(d, c, tube.foot);
  const Element lo_right = r_proj(d, c, tube.foot);
  std::vector<Element> out;
  for (Element x = 0; x < d.size(); ++x)
    if (l.leq(x, tube.foot) && (l.leq(lo_left, x) || l.leq(lo_right, x))) out.push_back(x);
  return out;
}

SubDiagram remove_elements(const PlanarDiagram& d, const std::vector<Element>& removed) {
  std::vector<bool> gone(static_cast<std::size_t>(d.size()), false);
  for (Element x : removed) gone[x] = true;
  SubDiagram out;
  for (Element x = 0; x < d.size(); ++x)
    if (!gone[x]) out.kept.push_back(x);
  const Element lcorner = corners(d).left;
  const auto it = std::find(out.kept.begin(), out.kept.end(), lcorner);
  if (it == out.kept.end()) fail(ErrorKind::validation, "removal deletes the left corner");
  auto sub = FiniteLattice::from_poset(d.poset().induced(out.kept));
  out.diagram = PlanarDiagram::with_left_corner(std::move(sub), static_cast<Element>(it - out.kept.begin()));
  return out;
}

namespace {

bool is_grid(const PlanarDiagram& d, const Corners& c) {
  const auto& l = d.lattice();
  return d.size() == (l.height(c.left) + 1) * (l.height(c.right) + 1);
}

std::vector<GridPoint> sorted(std::vector<GridPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Equal as point sets, possibly after swapping the two coordinates.
bool same_points(const std::vector<GridPoint>& a, const std::vector<GridPoint>& target) {
  if (sorted(a) == target) return true;
  std::vector<GridPoint> swapped;
  for (GridPoint g : a) swapped.push_back({g.y, g.x});
  return sorted(std::move(swapped)) == target;
}

std::optional<MultiforkSequence> peel(const PlanarDiagram& d) {
  const Corners c = corners(d);
  const auto target = sorted(coordinates(d));
  const auto ls = diagram_lamps(d);
  const auto minimal = minimal_internal_lamps(d, ls);
  if (minimal.empty()) {
    if (!is_grid(d, c)) return std::nullopt;
    return MultiforkSequence{d.lattice().height(c.left), d.lattice().height(c.right), {}};
  }
  for (int idx : minimal) {
    const Lamp& lamp = ls[static_cast<std::size_t>(idx)];
    std::vector<Element> removed;
    for (const auto& t : lamp.tubes) {
      const auto f = fork_elements(d, t);
      removed.insert(removed.end(), f.begin(), f.end());
    }
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());

    SubDiagram sub;
    try {
      sub = remove_elements(d, removed);
    } catch (const Error&) {
      continue;
    }
    const auto& rest = sub.diagram;
    if (!is_slim_rectangular(rest)) continue;
    const int k = static_cast<int>(lamp.tubes.size());
    if (rest.lattice().length() + k != d.lattice().length()) continue;

    const auto peak_it = std::find(sub.kept.begin(), sub.kept.end(), lamp.peak);
    if (peak_it == sub.kept.end()) continue;
    const auto peak = static_cast<Element>(peak_it - sub.kept.begin());
    const auto& down = rest.lower_covers(peak);
    if (down.size() != 2) continue;
    const Element bottom = rest.lattice().meet(down[0], down[1]);
    const auto& up = rest.upper_covers(bottom);
    if (up.size() != 2 || up[0] != down[0] || up[1] != down[1]) continue;

    auto seq = peel(rest);
    if (!seq) continue;
    // The rebuilt base may be the mirror image of rest; accept whichever
    // address reproduces d.
    const auto base = build(*seq).points();
    const GridPoint g = coordinates(rest)[static_cast<std::size_t>(bottom)];
    for (const CellAddress cell : {CellAddress{g.x, g.y}, CellAddress{g.y, g.x}}) {
      if (!has_distributive_cell(base, cell)) continue;
      if (!same_points(fork_points(base, cell, k), target)) continue;
      seq->steps.push_back({cell, k});
      return seq;
    }
  }
  return std::nullopt;
}

}  // namespace

MultiforkSequence decompose(const PlanarDiagram& d) {
  if (const auto report = is_slim_rectangular(d); !report)
    fail(ErrorKind::validation, "not slim rectangular: " + report.failure);
  auto seq = peel(d);
  if (!seq) fail(ErrorKind::internal, "no multifork sequence found");
  if (canonical_code(build(*seq).diagram()) != canonical_code(d))
    fail(ErrorKind::internal, "decomposition does not rebuild the input lattice");
  return *seq;
}

ProvenancedLattice provenance(const PlanarDiagram& d) { return build(decompose(d)); }

}  // namespace slimlat
