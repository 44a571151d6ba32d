#include "slimlat/multifork.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "slimlat/error.hpp"

namespace slimlat {

namespace {

bool leq(GridPoint u, GridPoint v) { return u.x <= v.x && u.y <= v.y; }

std::string address_text(CellAddress c) { return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")"; }

using CellKey = std::tuple<Element, Element, Element, Element>;
CellKey key(const FourCell& c) { return {c.bottom, c.left, c.right, c.top}; }

struct Box {
  GridPoint lo;
  GridPoint hi;
  bool contains(GridPoint g) const { return leq(lo, g) && leq(g, hi); }
};

}  // namespace

int CellForest::add(int parent, int stage, const FourCell& cell) {
  const int id = size();
  nodes_.push_back({parent, {}, stage, cell});
  if (parent >= 0) nodes_[static_cast<std::size_t>(parent)].children.push_back(id);
  return id;
}

bool CellForest::descends(int node, int ancestor) const {
  for (int cur = node; cur >= 0; cur = nodes_[static_cast<std::size_t>(cur)].parent)
    if (cur == ancestor) return true;
  return false;
}

bool CellForest::descends_from_any(int node, const std::vector<int>& ancestors) const {
  for (int cur = node; cur >= 0; cur = nodes_[static_cast<std::size_t>(cur)].parent)
    if (std::find(ancestors.begin(), ancestors.end(), cur) != ancestors.end()) return true;
  return false;
}

FiniteLattice lattice_from_points(const std::vector<GridPoint>& points) {
  const int n = static_cast<int>(points.size());
  std::vector<CoverPair> covers;
  std::vector<Element> above;
  for (Element x = 0; x < n; ++x) {
    above.clear();
    for (Element y = 0; y < n; ++y)
      if (y != x && leq(points[x], points[y])) above.push_back(y);
    for (Element y : above) {
      bool minimal = true;
      for (Element z : above)
        if (z != y && leq(points[z], points[y])) {
          minimal = false;
          break;
        }
      if (minimal) covers.emplace_back(x, y);
    }
  }
  return FiniteLattice::from_poset(Poset::from_covers(n, std::move(covers)));
}

std::vector<GridPoint> fork_points(const std::vector<GridPoint>& points, CellAddress cell, int k) {
  const int a = cell.a;
  const int b = cell.b;
  std::vector<GridPoint> out;
  out.reserve(points.size() + static_cast<std::size_t>(k * (a + b + 2) + k * (k + 1) / 2));
  for (GridPoint g : points) out.push_back({g.x > a ? g.x + k : g.x, g.y > b ? g.y + k : g.y});
  for (int s = 1; s <= k; ++s)
    for (int y = 0; y <= b; ++y) out.push_back({a + s, y});
  for (int t = 1; t <= k; ++t)
    for (int x = 0; x <= a; ++x) out.push_back({x, b + t});
  for (int s = 1; s <= k; ++s)
    for (int t = 1; s + t <= k + 1; ++t) out.push_back({a + s, b + t});
  return out;
}

bool has_distributive_cell(const std::vector<GridPoint>& points, CellAddress cell) {
  if (cell.a < 0 || cell.b < 0) return false;
  const int w = cell.a + 2;
  const int h = cell.b + 2;
  std::vector<bool> seen(static_cast<std::size_t>(w * h), false);
  int count = 0;
  for (GridPoint g : points)
    if (g.x < w && g.y < h && !seen[static_cast<std::size_t>(g.x * h + g.y)]) {
      seen[static_cast<std::size_t>(g.x * h + g.y)] = true;
      ++count;
    }
  return count == w * h;
}

Element ProvenancedLattice::at(GridPoint g) const {
  if (g.x < 0 || g.y < 0 || g.x > extent_.x || g.y > extent_.y) return -1;
  return at_[static_cast<std::size_t>(g.x * (extent_.y + 1) + g.y)];
}

int ProvenancedLattice::tube_index(Element foot) const {
  for (std::size_t i = 0; i < tubes_.size(); ++i)
    if (tubes_[i].tube.foot == foot) return static_cast<int>(i);
  return -1;
}

const ProvenancedLattice& ProvenancedLattice::stage_lattice(int i) const {
  if (i < 0 || i > stage()) fail(ErrorKind::invalid_input, "stage " + std::to_string(i) + " out of range");
  const ProvenancedLattice* cur = this;
  while (cur->stage() > i) cur = cur->previous_.get();
  return *cur;
}

void ProvenancedLattice::finish(const std::vector<GridPoint>& points, GridPoint extent) {
  points_ = points;
  extent_ = extent;
  at_.assign(static_cast<std::size_t>((extent.x + 1) * (extent.y + 1)), -1);
  for (Element e = 0; e < static_cast<Element>(points.size()); ++e)
    at_[static_cast<std::size_t>(points[e].x * (extent.y + 1) + points[e].y)] = e;
  const Element lcorner = at({extent.x, 0});
  if (lcorner < 0) fail(ErrorKind::internal, "point set lacks its left corner");
  diagram_ = PlanarDiagram::with_left_corner(lattice_from_points(points), lcorner);
  corners_ = {lcorner, at({0, extent.y})};
  cells_ = four_cells(diagram_);
  leaf_.assign(points.size(), -1);
}

ProvenancedLattice grid(int p, int q) {
  if (p < 1 || q < 1) fail(ErrorKind::invalid_input, "grid dimensions must be at least 1");
  std::vector<GridPoint> points;
  for (int i = 0; i <= p; ++i)
    for (int j = 0; j <= q; ++j) points.push_back({i, j});
  ProvenancedLattice pl;
  pl.finish(points, {p, q});
  pl.sequence_ = {p, q, {}};
  for (const auto& c : pl.cells_) pl.leaf_[c.bottom] = pl.forest_.add(-1, 0, c);
  for (const auto& t : trajectories(pl.diagram_)) {
    TubeRecord r;
    r.tube = t.edges[static_cast<std::size_t>(t.top_index)];
    r.step = 0;
    r.boundary = true;
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      const int node = pl.leaf_[t.cells[i]];
      r.ot.push_back(node);
      (static_cast<int>(i) < t.top_index ? r.leot : r.reot).push_back(node);
    }
    pl.tubes_.push_back(std::move(r));
  }
  return pl;
}

ProvenancedLattice multifork_extend(const ProvenancedLattice& pl, CellAddress cell, int k) {
  if (k < 1) fail(ErrorKind::invalid_input, "multiplicity must be at least 1");
  const Element h_bottom = resolve_address(pl, cell);
  if (!has_distributive_cell(pl.points_, cell))
    fail(ErrorKind::validation, "cell " + address_text(cell) + " is not distributive (its top's ideal is not a grid)");

  const int a = cell.a;
  const int b = cell.b;
  const int old_n = pl.size();
  const int stage = pl.stage() + 1;

  ProvenancedLattice out;
  out.finish(fork_points(pl.points_, cell, k), {pl.extent_.x + k, pl.extent_.y + k});
  if (const auto report = is_slim_rectangular(out.diagram_); !report)
    fail(ErrorKind::internal, "multifork result failed validation: " + report.failure);
  if (out.lattice().length() != pl.lattice().length() + k)
    fail(ErrorKind::internal, "multifork did not increase the length by the multiplicity");

  out.forest_ = pl.forest_;
  out.tubes_ = pl.tubes_;
  out.steps_ = pl.steps_;
  out.sequence_ = pl.sequence_;
  out.sequence_.steps.push_back({cell, k});
  out.previous_ = std::make_shared<const ProvenancedLattice>(pl);

  // Old cells that the extension splits, with their images in new coordinates.
  std::vector<std::pair<int, Box>> split;
  std::map<CellKey, int> kept;
  for (const auto& c : pl.cells_) {
    const GridPoint g = pl.points_[c.bottom];
    const int node = pl.leaf_[c.bottom];
    if (g.x == a && g.y == b) split.push_back({node, {{a, b}, {a + k + 1, b + k + 1}}});
    else if (g.x == a && g.y < b) split.push_back({node, {{a, g.y}, {a + k + 1, g.y + 1}}});
    else if (g.y == b && g.x < a) split.push_back({node, {{g.x, b}, {g.x + 1, b + k + 1}}});
    else kept.emplace(key(c), node);
  }
  std::vector<int> child_count(split.size(), 0);
  std::size_t matched = 0;
  for (const auto& c : out.cells_) {
    if (auto it = kept.find(key(c)); it != kept.end()) {
      out.leaf_[c.bottom] = it->second;
      ++matched;
      continue;
    }
    const GridPoint lo = out.points_[c.bottom];
    const GridPoint hi = out.points_[c.top];
    int parent = -1;
    for (std::size_t i = 0; i < split.size(); ++i)
      if (split[i].second.contains(lo) && split[i].second.contains(hi)) {
        parent = split[i].first;
        ++child_count[i];
        break;
      }
    if (parent < 0) fail(ErrorKind::internal, "new cell outside every split region");
    out.leaf_[c.bottom] = out.forest_.add(parent, stage, c);
  }
  if (matched != kept.size()) fail(ErrorKind::internal, "an untouched cell disappeared");
  for (std::size_t i = 0; i < split.size(); ++i) {
    const int expected = split[i].first == pl.leaf_[h_bottom] ? k * (k + 1) / 2 + k + 1 : k + 1;
    if (child_count[i] != expected) fail(ErrorKind::internal, "a split cell has the wrong number of children");
  }

  int created = 0;
  for (const auto& t : trajectories(out.diagram_)) {
    const Edge tube = t.edges[static_cast<std::size_t>(t.top_index)];
    if (tube.foot < old_n) continue;
    TubeRecord r;
    r.tube = tube;
    r.step = stage;
    for (std::size_t i = 0; i < t.cells.size(); ++i) {
      const int node = out.leaf_[t.cells[i]];
      const int idx = static_cast<int>(i);
      r.ot.push_back(node);
      if (idx + 1 < t.top_index) r.leot.push_back(node);
      else if (idx > t.top_index) r.reot.push_back(node);
    }
    out.tubes_.push_back(std::move(r));
    ++created;
  }
  if (created != k) fail(ErrorKind::internal, "multifork created the wrong number of neon tubes");

  out.steps_.push_back({out.at({a + k + 1, b + k + 1}), k, pl.leaf_[h_bottom], cell});
  return out;
}

ProvenancedLattice build(const MultiforkSequence& seq) {
  ProvenancedLattice pl = grid(seq.p, seq.q);
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      pl = multifork_extend(pl, seq.steps[i].cell, seq.steps[i].k);
    } catch (const Error& e) {
      throw Error(e.kind(), "step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return pl;
}

CellAddress cell_address(const ProvenancedLattice& pl, Element bottom) {
  if (bottom < 0 || bottom >= pl.size() || pl.leaf_node(bottom) < 0)
    fail(ErrorKind::validation, "element " + std::to_string(bottom) + " is not the bottom of a cell");
  const GridPoint g = pl.points()[bottom];
  return {g.x, g.y};
}

Element resolve_address(const ProvenancedLattice& pl, CellAddress cell) {
  const Element e = pl.at({cell.a, cell.b});
  if (e < 0 || pl.leaf_node(e) < 0) fail(ErrorKind::validation, "no cell at address " + address_text(cell));
  return e;
}

}  // namespace slimlat
