#include "slimlat/doubling.hpp"

#include <algorithm>

#include "slimlat/error.hpp"
#include "slimlat/poset_tools.hpp"

namespace slimlat {

namespace {


// Lamp key and 1-based tube position of the neon tube on the given trajectory.
std::pair<LampKey, int> owner(const ProvenancedLattice& pl, const std::vector<Lamp>& ls, const Edge& tube) {
  const int rec = pl.tube_index(tube.foot);
  if (rec < 0) fail(ErrorKind::internal, "trajectory without a recorded neon tube");
  const auto& r = pl.tubes()[static_cast<std::size_t>(rec)];
  if (r.boundary) return {{true, rec}, 1};
  for (const auto& l : ls)
    if (l.step == r.step) {
      const auto pos = std::find(l.tubes.begin(), l.tubes.end(), tube) - l.tubes.begin();
      return {{false, r.step}, static_cast<int>(pos) + 1};
    }
  fail(ErrorKind::internal, "neon tube without a lamp");
}

const Trajectory& trajectory_with(const std::vector<Trajectory>& ts, const Edge& e) {
  for (const auto& t : ts)
    if (std::find(t.edges.begin(), t.edges.end(), e) != t.edges.end()) return t;
  fail(ErrorKind::internal, "edge on no trajectory");
}

const Trajectory& trajectory_of_tube(const std::vector<Trajectory>& ts, const Edge& tube) {
  for (const auto& t : ts)
    if (t.edges[static_cast<std::size_t>(t.top_index)] == tube) return t;
  fail(ErrorKind::internal, "neon tube tops no trajectory");
}

Edge tube_for(const ProvenancedLattice& pl, const std::vector<Lamp>& ls, LampKey key, int position) {
  if (key.boundary) return pl.tubes()[static_cast<std::size_t>(key.index)].tube;
  for (const auto& l : ls)
    if (l.internal() && l.step == key.index) {
      if (position < 1 || position > static_cast<int>(l.tubes.size()))
        fail(ErrorKind::internal, "retargeted tube position out of range");
      return l.tubes[static_cast<std::size_t>(position - 1)];
    }
  fail(ErrorKind::internal, "retargeted lamp not found");
}

LampKey remap(LampKey key, int t) {
  if (key.boundary || key.index < t) return key;
  return {false, key.index + 1};
}

}  // namespace

RetargetRecord locate_retarget(const ProvenancedLattice& built, int step) {
  if (step < 1 || step > built.stage()) fail(ErrorKind::invalid_input, "step out of range");
  const ProvenancedLattice& stage = built.stage_lattice(step - 1);
  const auto& d = stage.diagram();
  const Element bottom = resolve_address(stage, built.sequence().steps[static_cast<std::size_t>(step - 1)].cell);
  const auto& up = d.upper_covers(bottom);
  const Element top = d.lattice().join(up.front(), up.back());
  const auto ts = trajectories(d);
  const auto ls = lamps(stage);
  const auto& left = trajectory_with(ts, {up.front(), top});
  const auto& right = trajectory_with(ts, {up.back(), top});
  const auto [u, alpha] = owner(stage, ls, left.edges[static_cast<std::size_t>(left.top_index)]);
  const auto [v, beta] = owner(stage, ls, right.edges[static_cast<std::size_t>(right.top_index)]);
  return {u, alpha, v, beta};
}

MultiforkSequence double_sequence(const MultiforkSequence& seq, int t) {
  const int steps = static_cast<int>(seq.steps.size());
  if (t < 1 || t > steps) fail(ErrorKind::invalid_input, "step " + std::to_string(t) + " is not a multifork step");
  const ProvenancedLattice original = build(seq);

  MultiforkSequence head{seq.p, seq.q, {}};
  head.steps.assign(seq.steps.begin(), seq.steps.begin() + (t - 1));
  ProvenancedLattice pl = build(head);
  const ForkStep& doubled = seq.steps[static_cast<std::size_t>(t - 1)];
  pl = multifork_extend(pl, doubled.cell, 2);

  // The second fork sits in the cell just under the foot of the leftmost new tube.
  const auto ls = lamps(pl);
  const Element foot = ls.back().tubes.front().foot;
  const auto cell = std::find_if(pl.cells().begin(), pl.cells().end(), [&](const FourCell& c) { return c.top == foot; });
  if (cell == pl.cells().end()) fail(ErrorKind::internal, "no cell under the leftmost new tube");
  pl = multifork_extend(pl, cell_address(pl, cell->bottom), doubled.k);

  for (int s = t + 1; s <= steps; ++s) {
    const RetargetRecord rec = locate_retarget(original, s);
    const auto cur = lamps(pl);
    const auto ts = trajectories(pl.diagram());
    const auto& p = trajectory_of_tube(ts, tube_for(pl, cur, remap(rec.u, t), rec.alpha));
    const auto& q = trajectory_of_tube(ts, tube_for(pl, cur, remap(rec.v, t), rec.beta));
    std::vector<Element> common;
    for (std::size_t i = static_cast<std::size_t>(p.top_index); i < p.cells.size(); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(q.top_index); ++j)
        if (p.cells[i] == q.cells[j]) common.push_back(p.cells[i]);
    if (common.size() != 1)
      fail(ErrorKind::internal, "step " + std::to_string(s) + ": expected one crossing cell, found " +
                                    std::to_string(common.size()));
    pl = multifork_extend(pl, cell_address(pl, common.front()), seq.steps[static_cast<std::size_t>(s - 1)].k);
  }
  return pl.sequence();
}

DoublingCheck check_double(const MultiforkSequence& seq, int t) {
  DoublingCheck c;
  const ProvenancedLattice before = build(seq);
  c.doubled = double_sequence(seq, t);
  const ProvenancedLattice after = build(c.doubled);
  c.length_before = before.lattice().length();
  c.length_after = after.lattice().length();
  const auto tubes_of = [](const PlanarDiagram& d) {
    const auto n = neon_tubes(d);
    return static_cast<int>(n.boundary.size() + n.internal.size());
  };
  c.antube_before = tubes_of(before.diagram());
  c.antube_after = tubes_of(after.diagram());

  const LampPoset lp_before = lamp_poset(before);
  const LampPoset lp_after = lamp_poset(after);
  int target = -1;
  for (std::size_t i = 0; i < lp_before.lamps.size(); ++i)
    if (lp_before.lamps[i].step == t) target = static_cast<int>(i);
  const Poset expected = poset_double(lp_before.order, target);
  c.poset_doubled = poset_iso(expected, lp_after.order).has_value();
  const auto iso = verify_lamp_con_iso(lp_after, after.lattice());
  c.con_iso = iso.ok;

  int j1 = -1;
  int j2 = -1;
  for (std::size_t i = 0; i < lp_after.lamps.size(); ++i) {
    if (lp_after.lamps[i].step == t) j1 = static_cast<int>(i);
    if (lp_after.lamps[i].step == t + 1) j2 = static_cast<int>(i);
  }
  const Poset& o = lp_after.order;
  c.twins_ok = j1 >= 0 && j2 >= 0 && o.comparable(j1, j2);
  for (int x = 0; x < o.size() && c.twins_ok; ++x) {
    if (x == j1 || x == j2) continue;
    c.twins_ok = o.leq(x, j1) == o.leq(x, j2) && o.leq(j1, x) == o.leq(j2, x);
  }
  if (!c.poset_doubled) c.failure = "lamp poset is not the doubled poset";
  else if (!c.con_iso) c.failure = "lamp poset disagrees with Jir(Con): " + iso.failure;
  else if (!c.twins_ok) c.failure = "the two new lamps are not twins";
  return c;
}

}  // namespace slimlat
