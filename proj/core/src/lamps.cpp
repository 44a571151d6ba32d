#include "slimlat/lamps.hpp"

#include <algorithm>
#include <map>

#include "slimlat/error.hpp"

namespace slimlat {

namespace {

std::vector<Lamp> internal_lamps_by_peak(const PlanarDiagram& d, const std::vector<bool>& on_boundary) {
  const auto& l = d.lattice();
  std::vector<Lamp> out;
  for (Element peak = 0; peak < d.size(); ++peak) {
    Lamp lamp;
    lamp.kind = LampKind::internal;
    lamp.peak = peak;
    for (Element foot : d.lower_covers(peak))
      if (!on_boundary[foot] && d.upper_covers(foot).size() == 1) lamp.tubes.push_back({foot, peak});
    if (lamp.tubes.empty()) continue;
    lamp.foot = lamp.tubes.front().foot;
    for (const auto& t : lamp.tubes) lamp.foot = l.meet(lamp.foot, t.foot);
    out.push_back(std::move(lamp));
  }
  return out;
}

std::vector<Lamp> boundary_lamps(const std::vector<Trajectory>& ts, const std::vector<bool>& on_boundary) {
  std::vector<Lamp> out;
  for (const auto& t : ts) {
    const Edge tube = t.edges[static_cast<std::size_t>(t.top_index)];
    if (!on_boundary[tube.foot]) continue;
    out.push_back({LampKind::boundary, tube.foot, tube.peak, {tube}, 0});
  }
  return out;
}

std::vector<int> territory_of(const ProvenancedLattice& pl, const Lamp& lamp) {
  std::vector<int> nodes;
  for (const auto& t : lamp.tubes) {
    const int idx = pl.tube_index(t.foot);
    if (idx < 0) fail(ErrorKind::internal, "neon tube without a territory record");
    const auto& ot = pl.tubes()[static_cast<std::size_t>(idx)].ot;
    nodes.insert(nodes.end(), ot.begin(), ot.end());
  }
  return nodes;
}

}  // namespace

std::vector<Lamp> diagram_lamps(const PlanarDiagram& d) {
  const auto on_boundary = boundary_mask(d);
  auto out = boundary_lamps(trajectories(d), on_boundary);
  auto internal = internal_lamps_by_peak(d, on_boundary);
  out.insert(out.end(), internal.begin(), internal.end());
  return out;
}

std::vector<Lamp> lamps(const ProvenancedLattice& pl) {
  const auto& d = pl.diagram();
  const auto on_boundary = boundary_mask(d);
  auto out = boundary_lamps(trajectories(d), on_boundary);
  auto internal = internal_lamps_by_peak(d, on_boundary);
  if (internal.size() != pl.steps().size()) fail(ErrorKind::internal, "internal lamps do not match multifork steps");
  for (std::size_t s = 0; s < pl.steps().size(); ++s) {
    const Element peak = pl.steps()[s].peak;
    auto it = std::find_if(internal.begin(), internal.end(), [&](const Lamp& l) { return l.peak == peak; });
    if (it == internal.end() || static_cast<int>(it->tubes.size()) != pl.steps()[s].k)
      fail(ErrorKind::internal, "lamp of step " + std::to_string(s + 1) + " changed its tubes");
    Lamp lamp = *it;
    lamp.step = static_cast<int>(s) + 1;
    out.push_back(std::move(lamp));
  }
  return out;
}

int lamp_of_tube(const std::vector<Lamp>& ls, const Edge& tube) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (std::find(ls[i].tubes.begin(), ls[i].tubes.end(), tube) != ls[i].tubes.end()) return static_cast<int>(i);
  return -1;
}

std::vector<NwlNel> nwl_nel(const PlanarDiagram& d, const std::vector<Lamp>& ls) {
  const auto ts = trajectories(d);
  std::map<Edge, int> owner;
  for (const auto& t : ts) {
    const int lamp = lamp_of_tube(ls, t.edges[static_cast<std::size_t>(t.top_index)]);
    if (lamp < 0) fail(ErrorKind::internal, "trajectory top edge belongs to no lamp");
    for (const auto& e : t.edges) owner[e] = lamp;
  }
  std::vector<NwlNel> out(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].internal()) continue;
    const auto& down = d.lower_covers(ls[i].peak);
    out[i] = {owner.at({down.front(), ls[i].peak}), owner.at({down.back(), ls[i].peak})};
  }
  return out;
}

std::vector<int> minimal_internal_lamps(const PlanarDiagram& d, const std::vector<Lamp>& ls) {
  const auto nn = nwl_nel(d, ls);
  std::vector<bool> above_something(ls.size(), false);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].internal()) continue;
    above_something[static_cast<std::size_t>(nn[i].nwl)] = true;
    above_something[static_cast<std::size_t>(nn[i].nel)] = true;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].internal() && !above_something[i]) out.push_back(static_cast<int>(i));
  return out;
}

CircR circ_r(const ProvenancedLattice& pl, const Lamp& lamp) {
  if (!lamp.internal()) fail(ErrorKind::invalid_input, "CircR is defined for internal lamps only");
  if (lamp.step < 1 || lamp.step > pl.stage()) fail(ErrorKind::invalid_input, "lamp has no creation step");
  const auto& l = pl.lattice();
  const auto& down = pl.diagram().lower_covers(lamp.peak);
  Element bottom = down.front();
  for (Element x : down) bottom = l.meet(bottom, x);
  return {bottom, lamp.peak, pl.steps()[static_cast<std::size_t>(lamp.step - 1)].origin};
}

LampRelation rho_circr(const ProvenancedLattice& pl, const std::vector<Lamp>& ls) {
  LampRelation out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].internal()) continue;
    const int origin = circ_r(pl, ls[i]).origin;
    for (std::size_t j = 0; j < ls.size(); ++j)
      if (i != j && pl.forest().descends_from_any(origin, territory_of(pl, ls[j])))
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return out;
}

LampRelation rho_foot(const ProvenancedLattice& pl, const std::vector<Lamp>& ls) {
  const auto on_boundary = boundary_mask(pl.diagram());
  LampRelation out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].internal() || on_boundary[ls[i].foot]) continue;
    const Element foot = ls[i].foot;
    std::vector<int> around;
    for (const auto& c : pl.cells())
      if (c.bottom == foot || c.left == foot || c.right == foot || c.top == foot)
        around.push_back(pl.leaf_node(c.bottom));
    if (around.empty()) continue;
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (i == j) continue;
      const auto territory = territory_of(pl, ls[j]);
      const bool inside = std::all_of(around.begin(), around.end(),
                                      [&](int node) { return pl.forest().descends_from_any(node, territory); });
      if (inside) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

Poset closure_poset(int n, const LampRelation& rel) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint8_t> leq(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) leq[i * un + i] = 1;
  for (const auto& [i, j] : rel) leq[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = 1;
  for (std::size_t k = 0; k < un; ++k)
    for (std::size_t i = 0; i < un; ++i)
      if (leq[i * un + k])
        for (std::size_t j = 0; j < un; ++j)
          if (leq[k * un + j]) leq[i * un + j] = 1;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      if (leq[i * un + j] && leq[j * un + i]) fail(ErrorKind::internal, "lamp relation closure has a cycle");
  return Poset::from_order(n, std::move(leq));
}

LampPoset lamp_poset(const ProvenancedLattice& pl) {
  LampPoset lp;
  lp.lamps = lamps(pl);
  lp.order = closure_poset(static_cast<int>(lp.lamps.size()), rho_foot(pl, lp.lamps));
  return lp;
}

std::pair<Poset, std::vector<CoverPair>> covers_via_nwl_nel(const PlanarDiagram& d, const std::vector<Lamp>& ls) {
  const auto nn = nwl_nel(d, ls);
  LampRelation rel;
  for (std::size_t u = 0; u < ls.size(); ++u)
    if (ls[u].internal()) {
      rel.emplace_back(static_cast<int>(u), nn[u].nwl);
      rel.emplace_back(static_cast<int>(u), nn[u].nel);
    }
  Poset order = closure_poset(static_cast<int>(ls.size()), rel);
  std::vector<CoverPair> covers;
  for (std::size_t u = 0; u < ls.size(); ++u) {
    if (!ls[u].internal()) continue;
    const int a = nn[u].nwl;
    const int b = nn[u].nel;
    if (!order.less(b, a)) covers.emplace_back(static_cast<int>(u), a);
    if (b != a && !order.less(a, b)) covers.emplace_back(static_cast<int>(u), b);
  }
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  return {std::move(order), std::move(covers)};
}

LampConIso verify_lamp_con_iso(const LampPoset& lp, const FiniteLattice& l) {
  LampConIso r;
  r.con = congruence_lattice(l);
  const auto n = lp.lamps.size();
  if (n != r.con.jir.size()) {
    r.failure = std::to_string(n) + " lamps but " + std::to_string(r.con.jir.size()) + " join-irreducible congruences";
    return r;
  }
  std::vector<bool> hit(n, false);
  for (const auto& lamp : lp.lamps) {
    const int idx = find_congruence(r.con, principal_congruence(l, lamp.foot, lamp.peak));
    if (idx < 0 || hit[static_cast<std::size_t>(idx)]) {
      r.failure = "lamp " + std::to_string(lamp.foot) + "-" + std::to_string(lamp.peak) +
                  (idx < 0 ? " generates no prime-interval congruence" : " collides with another lamp");
      return r;
    }
    hit[static_cast<std::size_t>(idx)] = true;
    r.witness.push_back(idx);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lp.order.leq(static_cast<int>(i), static_cast<int>(j)) != r.con.order.leq(r.witness[i], r.witness[j])) {
        r.failure = "order mismatch between lamps " + std::to_string(i) + " and " + std::to_string(j);
        return r;
      }
  r.ok = true;
  return r;
}

LampConIso verify_lamp_con_iso(const ProvenancedLattice& pl) { return verify_lamp_con_iso(lamp_poset(pl), pl.lattice()); }

bool is_used(const ProvenancedLattice& pl, const std::vector<Lamp>& ls, int lamp, int tube_index) {
  const Lamp& j = ls[static_cast<std::size_t>(lamp)];
  if (tube_index < 0 || tube_index >= static_cast<int>(j.tubes.size()))
    fail(ErrorKind::invalid_input, "tube index out of range");
  const int rec = pl.tube_index(j.tubes[static_cast<std::size_t>(tube_index)].foot);
  if (rec < 0) fail(ErrorKind::internal, "neon tube without a territory record");
  const auto& r = pl.tubes()[static_cast<std::size_t>(rec)];
  auto essential = r.leot;
  essential.insert(essential.end(), r.reot.begin(), r.reot.end());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (static_cast<int>(i) == lamp || !ls[i].internal()) continue;
    if (pl.forest().descends_from_any(circ_r(pl, ls[i]).origin, essential)) return true;
  }
  return false;
}

std::vector<LampUsage> usage_stats(const ProvenancedLattice& pl, const std::vector<Lamp>& ls) {
  std::vector<LampUsage> out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (!ls[i].internal()) continue;
    LampUsage u;
    u.lamp = static_cast<int>(i);
    for (std::size_t t = 0; t < ls[i].tubes.size(); ++t) {
      const bool used = is_used(pl, ls, static_cast<int>(i), static_cast<int>(t));
      u.pattern.push_back(used ? 'u' : '0');
      ++(used ? u.used : u.unused);
    }
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<LampUsage> usage_stats(const ProvenancedLattice& pl) { return usage_stats(pl, lamps(pl)); }

}  // namespace slimlat
