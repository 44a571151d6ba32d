#include "slimlat/reducer.hpp"

#include <algorithm>

#include "slimlat/error.hpp"
#include "slimlat/poset_tools.hpp"

namespace slimlat {

namespace {

int antube(const PlanarDiagram& d) {
  const auto t = neon_tubes(d);
  return static_cast<int>(t.boundary.size() + t.internal.size());
}

const Lamp& internal_lamp(const std::vector<Lamp>& ls, int lamp) {
  if (lamp < 0 || lamp >= static_cast<int>(ls.size())) fail(ErrorKind::validation, "lamp index out of range");
  const Lamp& l = ls[static_cast<std::size_t>(lamp)];
  if (!l.internal()) fail(ErrorKind::validation, "lamp is not internal");
  return l;
}

void require_tube(const Lamp& l, int tube, const char* name) {
  if (tube < 0 || tube >= static_cast<int>(l.tubes.size()))
    fail(ErrorKind::validation, std::string("tube ") + name + " out of range");
}

// Lamps other than the reduced one keep their foot and tube count; their peak
// is kept unless it lay on the removed fork, in which case the rewiring moved it.
bool lamp_bookkeeping(const std::vector<Lamp>& before, int reduced, const SubDiagram& raw, int old_size) {
  const auto after = diagram_lamps(raw.diagram);
  if (after.size() != before.size()) return false;
  std::vector<bool> survived(static_cast<std::size_t>(old_size), false);
  for (Element x : raw.kept) survived[x] = true;
  for (std::size_t i = 0; i < before.size(); ++i) {
    const Lamp& b = before[i];
    const bool is_reduced = static_cast<int>(i) == reduced;
    const auto it = std::find_if(after.begin(), after.end(), [&](const Lamp& a) {
      if (a.kind != b.kind) return false;
      const bool same_peak = raw.kept[a.peak] == b.peak;
      if (is_reduced) return same_peak;
      return raw.kept[a.foot] == b.foot && (same_peak || !survived[b.peak]);
    });
    if (it == after.end()) return false;
    if (it->tubes.size() + (is_reduced ? 1 : 0) != b.tubes.size()) return false;
  }
  return true;
}

Reduction finish(const ProvenancedLattice& pl, const std::vector<Lamp>& ls, int lamp, int tube, ReductionRule rule,
                 const std::vector<Element>& removed, SubDiagram raw) {
  if (!meet_closed_without(pl.lattice(), removed)) fail(ErrorKind::internal, "removed fork leaves a non-meet-closed set");
  if (const auto report = is_slim_rectangular(raw.diagram); !report)
    fail(ErrorKind::internal, "reduced lattice failed validation: " + report.failure);
  const Lamp& l = ls[static_cast<std::size_t>(lamp)];
  ReductionStep step;
  step.rule = rule;
  step.lamp_foot = l.foot;
  step.lamp_peak = l.peak;
  step.lamp_step = l.step;
  step.tube_index = tube;
  step.removed_tube = l.tubes[static_cast<std::size_t>(tube)];
  step.size_before = pl.size();
  step.size_after = raw.diagram.size();
  step.antube_before = antube(pl.diagram());
  step.antube_after = antube(raw.diagram);
  const auto before = congruence_lattice(pl.lattice());
  const auto after = congruence_lattice(raw.diagram.lattice());
  step.con_preserved = before.size == after.size && poset_iso(before.order, after.order).has_value();
  step.bookkeeping_ok = lamp_bookkeeping(ls, lamp, raw, pl.size());
  ProvenancedLattice rebuilt = provenance(raw.diagram);
  return {std::move(raw), std::move(rebuilt), step};
}

// Covers of L - F(n2) obtained by re-peaking the edges that ended on the fork;
// d is oriented so that n2 is right of n1.
std::vector<CoverPair> rewired_covers(const PlanarDiagram& d, const Lamp& lamp, const Edge& n1, const Edge& n2,
                                      const std::vector<Element>& removed, const std::vector<int>& new_id) {
  const auto& l = d.lattice();
  const Corners c = corners(d);
  const auto& down = d.lower_covers(lamp.peak);
  const auto pos = std::find(down.begin(), down.end(), n2.foot);
  if (pos == down.end() || pos + 1 == down.end()) fail(ErrorKind::internal, "tube has no right neighbour edge");
  const Element left_anchor = l_proj(d, c, n1.foot);
  const Element right_anchor = r_proj(d, c, *(pos + 1));
  const Element lfloor = l_proj(d, c, n2.foot);
  const Element rfloor = r_proj(d, c, n2.foot);

  std::vector<bool> gone(static_cast<std::size_t>(d.size()), false);
  for (Element x : removed) gone[x] = true;
  std::vector<CoverPair> out;
  for (const auto& [x, y] : d.poset().covers()) {
    if (gone[x]) continue;
    Element peak = y;
    if (gone[y]) {
      const bool left = l.leq(lfloor, y) && l.leq(y, n2.foot);
      const bool right = l.leq(rfloor, y) && l.leq(y, n2.foot);
      if (left == right) fail(ErrorKind::internal, "surviving edge ends ambiguously on the removed fork");
      peak = l.join(y, left ? left_anchor : right_anchor);
    }
    if (gone[peak]) fail(ErrorKind::internal, "re-peaked edge ends on the removed fork");
    out.emplace_back(new_id[x], new_id[peak]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool meet_closed_without(const FiniteLattice& l, const std::vector<Element>& removed) {
  std::vector<bool> gone(static_cast<std::size_t>(l.size()), false);
  for (Element x : removed) gone[x] = true;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = x + 1; y < l.size(); ++y)
      if (!gone[x] && !gone[y] && gone[l.meet(x, y)]) return false;
  return true;
}

const char* rule_name(ReductionRule r) { return r == ReductionRule::sandwiched ? "sandwiched" : "neighboring"; }

Reduction remove_sandwiched(const ProvenancedLattice& pl, int lamp, int tube) {
  const auto ls = lamps(pl);
  const Lamp& l = internal_lamp(ls, lamp);
  if (tube < 1 || tube + 1 >= static_cast<int>(l.tubes.size()))
    fail(ErrorKind::validation, "tube " + std::to_string(tube) + " does not have neighbours on both sides");
  if (!is_used(pl, ls, lamp, tube)) fail(ErrorKind::validation, "the middle tube's territory is not used");
  if (is_used(pl, ls, lamp, tube - 1)) fail(ErrorKind::validation, "the left neighbour's territory is used");
  if (is_used(pl, ls, lamp, tube + 1)) fail(ErrorKind::validation, "the right neighbour's territory is used");
  const auto removed = fork_elements(pl.diagram(), l.tubes[static_cast<std::size_t>(tube)]);
  auto raw = remove_elements(pl.diagram(), removed);
  return finish(pl, ls, lamp, tube, ReductionRule::sandwiched, removed, std::move(raw));
}

Reduction remove_neighboring(const ProvenancedLattice& pl, int lamp, int n1, int n2) {
  const auto ls = lamps(pl);
  const Lamp& l = internal_lamp(ls, lamp);
  require_tube(l, n1, "n1");
  require_tube(l, n2, "n2");
  if (n1 - n2 != 1 && n2 - n1 != 1) fail(ErrorKind::validation, "tubes n1 and n2 are not neighbours");
  if (is_used(pl, ls, lamp, n1)) fail(ErrorKind::validation, "the territory of n1 is used");
  if (is_used(pl, ls, lamp, n2)) fail(ErrorKind::validation, "the territory of n2 is used");

  const Edge e1 = l.tubes[static_cast<std::size_t>(n1)];
  const Edge e2 = l.tubes[static_cast<std::size_t>(n2)];
  const auto removed = fork_elements(pl.diagram(), e2);
  auto raw = remove_elements(pl.diagram(), removed);

  std::vector<int> new_id(static_cast<std::size_t>(pl.size()), -1);
  for (std::size_t i = 0; i < raw.kept.size(); ++i) new_id[raw.kept[i]] = static_cast<int>(i);
  const PlanarDiagram oriented = n2 > n1 ? pl.diagram() : mirror(pl.diagram());
  auto covers = rewired_covers(oriented, l, e1, e2, removed, new_id);
  Poset rewired;
  try {
    rewired = Poset::from_covers(static_cast<int>(raw.kept.size()), std::move(covers));
  } catch (const Error& e) {
    fail(ErrorKind::internal, std::string("rewired edges do not form a poset: ") + e.what());
  }
  if (!(rewired == raw.diagram.poset())) fail(ErrorKind::internal, "rewired order differs from the induced order");
  return finish(pl, ls, lamp, n2, ReductionRule::neighboring, removed, std::move(raw));
}

std::optional<Reduction> reduce_once(const ProvenancedLattice& pl) {
  const auto ls = lamps(pl);
  for (const auto& u : usage_stats(pl, ls)) {
    const std::string& s = u.pattern;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.compare(i, 2, "00") == 0)
        return remove_neighboring(pl, u.lamp, static_cast<int>(i), static_cast<int>(i) + 1);
      if (s.compare(i, 3, "0u0") == 0) return remove_sandwiched(pl, u.lamp, static_cast<int>(i) + 1);
    }
  }
  return std::nullopt;
}

MinimizeResult minimize(const ProvenancedLattice& start) {
  MinimizeResult out{start, {}};
  while (auto r = reduce_once(out.result)) {
    out.trace.push_back(r->step);
    out.result = std::move(r->result);
  }
  return out;
}

long long length_bound(long long n) { return 2 * n * n - 10 * n + 15; }

BoundReport check_bounds(const FiniteLattice& l) {
  BoundReport r;
  r.n = static_cast<int>(congruence_lattice(l).jir.size());
  r.length = l.length();
  r.size = l.size();
  r.bound = length_bound(r.n);
  if (r.length < r.n)
    r.failures.push_back("length " + std::to_string(r.length) + " is below |Jir Con L| = " + std::to_string(r.n));
  return r;
}

BoundReport check_bounds(const ProvenancedLattice& pl, bool at_fixpoint) {
  BoundReport r = check_bounds(pl.lattice());
  r.rectangular = true;
  r.fixpoint = at_fixpoint;
  r.antube = antube(pl.diagram());
  r.size_bound = 1 + static_cast<long long>(r.length - 1) * (r.length - 1);
  r.square_bound = static_cast<long long>(r.length) * r.length;
  const auto ls = lamps(pl);
  for (const auto& l : ls) ++(l.internal() ? r.k : r.m);
  const auto minimal = minimal_internal_lamps(pl.diagram(), ls);
  r.s = static_cast<int>(minimal.size());
  if (r.length != r.antube)
    r.failures.push_back("length " + std::to_string(r.length) + " differs from ANTube " + std::to_string(r.antube));
  if (r.size > r.size_bound)
    r.failures.push_back("size " + std::to_string(r.size) + " exceeds 1+(len-1)^2 = " + std::to_string(r.size_bound));
  if (r.size > r.square_bound)
    r.failures.push_back("size " + std::to_string(r.size) + " exceeds len^2 = " + std::to_string(r.square_bound));
  if (!at_fixpoint || r.k == 0) return r;

  if (r.length > r.bound)
    r.failures.push_back("length " + std::to_string(r.length) + " exceeds 2n^2-10n+15 = " + std::to_string(r.bound));
  const long long tube_cap = r.m + 2LL * r.k * r.k - 2LL * r.k + 1;
  if (r.antube > tube_cap)
    r.failures.push_back("ANTube " + std::to_string(r.antube) + " exceeds m+2k^2-2k+1 = " + std::to_string(tube_cap));
  for (int idx : minimal)
    if (ls[static_cast<std::size_t>(idx)].tubes.size() != 1)
      r.failures.push_back("minimal lamp with foot " + std::to_string(ls[static_cast<std::size_t>(idx)].foot) +
                           " has more than one tube");
  for (const auto& u : usage_stats(pl, ls)) {
    if (u.pattern.find("00") != std::string::npos || u.pattern.find("0u0") != std::string::npos)
      r.failures.push_back("pattern " + u.pattern + " still contains a removable tube");
    if (u.used > 0 && u.used + u.unused > 2 * u.used)
      r.failures.push_back("lamp with pattern " + u.pattern + " has more than twice its used tubes");
  }
  return r;
}

}  // namespace slimlat
