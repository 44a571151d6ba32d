#include "slimlat/planar_diagram.hpp"

#include <algorithm>
#include <string>

#include "slimlat/disjoint_set.hpp"
#include "slimlat/error.hpp"

namespace slimlat {

namespace {

void check_permutation(const std::vector<Element>& given, const std::vector<Element>& expected, Element x,
                       const char* which) {
  auto a = given;
  auto b = expected;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    fail(ErrorKind::invalid_input,
         std::string(which) + " order of element " + std::to_string(x) + " does not list exactly its covers");
}

std::string element_name(Element x) { return "element " + std::to_string(x); }

// Edge ids are offset[foot] + position of peak in the foot's upper-cover list.
class EdgeIndex {
 public:
  explicit EdgeIndex(const PlanarDiagram& d) : d_(d), offset_(static_cast<std::size_t>(d.size()) + 1, 0) {
    for (Element x = 0; x < d.size(); ++x)
      offset_[x + 1] = offset_[x] + static_cast<int>(d.upper_covers(x).size());
  }
  int count() const { return offset_.back(); }
  int id(Element foot, Element peak) const {
    const auto& up = d_.upper_covers(foot);
    const auto it = std::find(up.begin(), up.end(), peak);
    if (it == up.end()) fail(ErrorKind::internal, "not an edge");
    return offset_[foot] + static_cast<int>(it - up.begin());
  }
  Edge edge(int id) const {
    const auto foot = static_cast<Element>(std::upper_bound(offset_.begin(), offset_.end(), id) - offset_.begin() - 1);
    return {foot, d_.upper_covers(foot)[static_cast<std::size_t>(id - offset_[foot])]};
  }

 private:
  const PlanarDiagram& d_;
  std::vector<int> offset_;
};

}  // namespace

PlanarDiagram PlanarDiagram::from_orders(FiniteLattice l, std::vector<std::vector<Element>> upper,
                                         std::vector<std::vector<Element>> lower) {
  const int n = l.size();
  if (static_cast<int>(upper.size()) != n || static_cast<int>(lower.size()) != n)
    fail(ErrorKind::invalid_input, "cover orders must list every element");
  for (Element x = 0; x < n; ++x) {
    check_permutation(upper[x], l.poset().upper_covers(x), x, "upper");
    check_permutation(lower[x], l.poset().lower_covers(x), x, "lower");
  }
  PlanarDiagram d;
  d.lattice_ = std::move(l);
  d.upper_ = std::move(upper);
  d.lower_ = std::move(lower);
  return d;
}

PlanarDiagram PlanarDiagram::with_left_corner(FiniteLattice l, Element lcorner) {
  const int n = l.size();
  if (lcorner < 0 || lcorner >= n) fail(ErrorKind::invalid_input, "left corner out of range");
  std::vector<int> key(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) key[x] = -l.height(l.meet(x, lcorner));
  auto by_key = [&](Element a, Element b) { return key[a] != key[b] ? key[a] < key[b] : a < b; };
  std::vector<std::vector<Element>> upper(static_cast<std::size_t>(n));
  std::vector<std::vector<Element>> lower(static_cast<std::size_t>(n));
  for (Element x = 0; x < n; ++x) {
    upper[x] = l.poset().upper_covers(x);
    lower[x] = l.poset().lower_covers(x);
    std::sort(upper[x].begin(), upper[x].end(), by_key);
    std::sort(lower[x].begin(), lower[x].end(), by_key);
  }
  PlanarDiagram d;
  d.lattice_ = std::move(l);
  d.upper_ = std::move(upper);
  d.lower_ = std::move(lower);
  return d;
}

PlanarDiagram PlanarDiagram::derive(FiniteLattice l) {
  const auto di = doubly_irreducibles(l);
  if (di.size() != 2)
    fail(ErrorKind::validation,
         "expected exactly two doubly irreducible elements, found " + std::to_string(di.size()));
  return with_left_corner(std::move(l), di.front());
}

std::vector<Element> doubly_irreducibles(const FiniteLattice& l) {
  std::vector<Element> out;
  for (Element x = 0; x < l.size(); ++x)
    if (l.poset().upper_covers(x).size() == 1 && l.poset().lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

BoundaryChains boundary_chains(const PlanarDiagram& d) {
  BoundaryChains out;
  const auto& l = d.lattice();
  for (Element x = l.bottom();; x = d.upper_covers(x).front()) {
    out.left.push_back(x);
    if (x == l.top()) break;
  }
  for (Element x = l.bottom();; x = d.upper_covers(x).back()) {
    out.right.push_back(x);
    if (x == l.top()) break;
  }
  return out;
}

Corners corners(const PlanarDiagram& d) {
  const auto& l = d.lattice();
  const auto di = doubly_irreducibles(l);
  if (di.size() != 2)
    fail(ErrorKind::validation,
         "expected exactly two doubly irreducible elements, found " + std::to_string(di.size()));
  const auto chains = boundary_chains(d);
  auto on = [](const std::vector<Element>& chain, Element x) {
    return std::find(chain.begin(), chain.end(), x) != chain.end();
  };
  Corners c;
  if (on(chains.left, di[0]) && on(chains.right, di[1])) c = {di[0], di[1]};
  else if (on(chains.left, di[1]) && on(chains.right, di[0])) c = {di[1], di[0]};
  else fail(ErrorKind::validation, "doubly irreducible elements are not on opposite boundaries");
  if (l.meet(c.left, c.right) != l.bottom() || l.join(c.left, c.right) != l.top())
    fail(ErrorKind::validation, "doubly irreducible elements are not complements");
  return c;
}

Element l_proj(const PlanarDiagram& d, Element x) { return l_proj(d, corners(d), x); }
Element r_proj(const PlanarDiagram& d, Element x) { return r_proj(d, corners(d), x); }

std::vector<GridPoint> coordinates(const PlanarDiagram& d) {
  const auto c = corners(d);
  const auto& l = d.lattice();
  std::vector<GridPoint> out(static_cast<std::size_t>(d.size()));
  for (Element x = 0; x < d.size(); ++x) out[x] = {l.height(l.meet(x, c.left)), l.height(l.meet(x, c.right))};
  return out;
}

std::vector<FourCell> four_cells(const PlanarDiagram& d) {
  const auto& l = d.lattice();
  std::vector<FourCell> out;
  for (Element x = 0; x < d.size(); ++x) {
    const auto& up = d.upper_covers(x);
    for (std::size_t i = 0; i + 1 < up.size(); ++i) {
      const Element top = l.join(up[i], up[i + 1]);
      if (!l.covers(up[i], top) || !l.covers(up[i + 1], top))
        fail(ErrorKind::validation, "region above " + element_name(x) + " is not a 4-cell");
      out.push_back({x, up[i], up[i + 1], top});
    }
  }
  return out;
}

bool is_neon_tube(const PlanarDiagram& d, const Edge& e) { return d.upper_covers(e.foot).size() == 1; }

std::vector<bool> boundary_mask(const PlanarDiagram& d) {
  std::vector<bool> mask(static_cast<std::size_t>(d.size()), false);
  const auto chains = boundary_chains(d);
  for (Element x : chains.left) mask[x] = true;
  for (Element x : chains.right) mask[x] = true;
  return mask;
}

NeonTubes neon_tubes(const PlanarDiagram& d) {
  NeonTubes out;
  const auto on_boundary = boundary_mask(d);
  for (Element x = 0; x < d.size(); ++x) {
    if (d.upper_covers(x).size() != 1) continue;
    const Edge e{x, d.upper_covers(x).front()};
    (on_boundary[x] ? out.boundary : out.internal).push_back(e);
  }
  return out;
}

std::vector<Trajectory> trajectories(const PlanarDiagram& d) {
  const EdgeIndex edges(d);
  const int m = edges.count();
  struct Link {
    int other;
    Element cell;
  };
  std::vector<std::vector<Link>> links(static_cast<std::size_t>(m));
  DisjointSet classes(m);
  for (const auto& c : four_cells(d)) {
    const int bl = edges.id(c.bottom, c.left);
    const int br = edges.id(c.bottom, c.right);
    const int lt = edges.id(c.left, c.top);
    const int rt = edges.id(c.right, c.top);
    links[bl].push_back({rt, c.bottom});
    links[rt].push_back({bl, c.bottom});
    links[br].push_back({lt, c.bottom});
    links[lt].push_back({br, c.bottom});
    classes.unite(bl, rt);
    classes.unite(br, lt);
  }

  const auto chains = boundary_chains(d);
  std::vector<bool> on_left(static_cast<std::size_t>(m), false);
  std::vector<bool> on_right(static_cast<std::size_t>(m), false);
  for (std::size_t i = 0; i + 1 < chains.left.size(); ++i) on_left[edges.id(chains.left[i], chains.left[i + 1])] = true;
  for (std::size_t i = 0; i + 1 < chains.right.size(); ++i)
    on_right[edges.id(chains.right[i], chains.right[i + 1])] = true;

  std::vector<int> class_size(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) ++class_size[classes.find(e)];

  std::vector<Trajectory> out;
  std::vector<bool> seen_class(static_cast<std::size_t>(m), false);
  for (std::size_t i = 0; i + 1 < chains.left.size(); ++i) {
    const int start = edges.id(chains.left[i], chains.left[i + 1]);
    const int cls = classes.find(start);
    if (seen_class[cls]) fail(ErrorKind::validation, "a trajectory meets the left boundary twice");
    seen_class[cls] = true;

    Trajectory t;
    int prev = -1;
    int cur = start;
    int tubes = 0;
    while (true) {
      if (links[cur].size() > 2) fail(ErrorKind::validation, "edge classes do not form paths");
      const Edge e = edges.edge(cur);
      if (is_neon_tube(d, e)) {
        t.top_index = static_cast<int>(t.edges.size());
        ++tubes;
      }
      t.edges.push_back(e);
      const Link* next = nullptr;
      for (const auto& link : links[cur])
        if (link.other != prev) next = &link;
      if (next == nullptr) break;
      if (on_left[next->other]) fail(ErrorKind::validation, "a trajectory meets the left boundary twice");
      t.cells.push_back(next->cell);
      prev = cur;
      cur = next->other;
      if (t.edges.size() > static_cast<std::size_t>(class_size[cls]))
        fail(ErrorKind::validation, "edge class contains a cycle");
    }
    if (static_cast<int>(t.edges.size()) != class_size[cls])
      fail(ErrorKind::validation, "edge class is not a single path");
    if (!on_right[cur]) fail(ErrorKind::validation, "a trajectory does not end on the right boundary");
    if (tubes != 1)
      fail(ErrorKind::validation, "a trajectory contains " + std::to_string(tubes) + " neon tubes instead of one");
    out.push_back(std::move(t));
  }
  for (int e = 0; e < m; ++e)
    if (!seen_class[classes.find(e)]) fail(ErrorKind::validation, "an edge class misses the left boundary");
  return out;
}

SlimRectangularReport is_slim_rectangular(const PlanarDiagram& d) {
  auto failed = [](std::string why) { return SlimRectangularReport{false, std::move(why)}; };
  const auto& l = d.lattice();
  Corners c;
  try {
    c = corners(d);
  } catch (const Error& e) {
    return failed(std::string("rectangularity: ") + e.what());
  }
  const auto expected = PlanarDiagram::with_left_corner(l, c.left);
  if (expected.upper_order() != d.upper_order() || expected.lower_order() != d.lower_order())
    return failed("cover order: left-to-right order disagrees with boundary projections");
  for (Element x = 0; x < d.size(); ++x)
    if (d.upper_covers(x).size() > 2) return failed("cells: two distinct 4-cells share the bottom " + element_name(x));
  try {
    four_cells(d);
  } catch (const Error& e) {
    return failed(std::string("cells: ") + e.what());
  }
  for (Element y = 0; y < d.size(); ++y) {
    const auto& down = d.lower_covers(y);
    for (std::size_t i = 0; i + 1 < down.size(); ++i) {
      const Element b = l.meet(down[i], down[i + 1]);
      const auto& up = d.upper_covers(b);
      const bool adjacent = up.size() == 2 && up[0] == down[i] && up[1] == down[i + 1];
      if (!adjacent) return failed("cells: region below " + element_name(y) + " is not a 4-cell");
    }
  }
  if (!is_semimodular(l)) return failed("semimodularity: some x^y < x without y < xvy");
  if (!is_slim(l)) return failed("slimness: join-irreducibles contain a 3-element antichain");
  return {};
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  auto upper = d.upper_order();
  auto lower = d.lower_order();
  for (auto& v : upper) std::reverse(v.begin(), v.end());
  for (auto& v : lower) std::reverse(v.begin(), v.end());
  return PlanarDiagram::from_orders(d.lattice(), std::move(upper), std::move(lower));
}

std::string diagram_code(const PlanarDiagram& d) {
  const int n = d.size();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<Element> order{d.lattice().bottom()};
  label[order[0]] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Element u : d.upper_covers(order[head]))
      if (label[u] < 0) {
        label[u] = static_cast<int>(order.size());
        order.push_back(u);
      }
  std::string code;
  auto put = [&code](int v) {
    code.push_back(static_cast<char>((v >> 8) & 0xff));
    code.push_back(static_cast<char>(v & 0xff));
  };
  put(n);
  for (Element x : order) {
    put(static_cast<int>(d.upper_covers(x).size()));
    for (Element u : d.upper_covers(x)) put(label[u]);
  }
  return code;
}

std::string canonical_code(const PlanarDiagram& d) { return std::min(diagram_code(d), diagram_code(mirror(d))); }

}  // namespace slimlat
