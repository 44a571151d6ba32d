#include "slimlat/json_io.hpp"

#include <json.hpp>

#include "slimlat/error.hpp"
#include "slimlat/lamps.hpp"

namespace slimlat {

using Json = nlohmann::ordered_json;

namespace {

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
}

std::string finish(const Json& j) { return j.dump() + "\n"; }

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) fail(ErrorKind::parse, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception& e) {
    fail(ErrorKind::parse, std::string("field '") + name + "': " + e.what());
  }
}

Json covers_json(const Poset& p) {
  Json out = Json::array();
  for (const auto& [lo, hi] : p.covers()) out.push_back({lo, hi});
  return out;
}

Poset poset_fields(const Json& j) {
  const int n = field<int>(j, "n");
  std::vector<CoverPair> covers;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "covers")) {
    if (pair.size() != 2) fail(ErrorKind::parse, "cover entries must be [lower, upper]");
    covers.emplace_back(pair[0], pair[1]);
  }
  return Poset::from_covers(n, std::move(covers));
}

Json edge_json(const Edge& e) { return Json::array({e.foot, e.peak}); }

}  // namespace

std::string poset_to_json(const Poset& p) {
  Json j;
  j["n"] = p.size();
  j["covers"] = covers_json(p);
  return finish(j);
}

Poset poset_from_json(std::string_view text) { return poset_fields(parse(text)); }

std::string diagram_to_json(const PlanarDiagram& d) {
  Json j;
  j["n"] = d.size();
  j["covers"] = covers_json(d.poset());
  j["upper_order"] = d.upper_order();
  j["lower_order"] = d.lower_order();
  return finish(j);
}

PlanarDiagram diagram_from_json(std::string_view text) {
  const Json j = parse(text);
  auto lattice = FiniteLattice::from_poset(poset_fields(j));
  if (!j.contains("upper_order") && !j.contains("lower_order")) return PlanarDiagram::derive(std::move(lattice));
  return PlanarDiagram::from_orders(std::move(lattice), field<std::vector<std::vector<Element>>>(j, "upper_order"),
                                    field<std::vector<std::vector<Element>>>(j, "lower_order"));
}

std::string sequence_to_json(const MultiforkSequence& seq) {
  Json j;
  j["grid"] = {seq.p, seq.q};
  j["steps"] = Json::array();
  for (const auto& s : seq.steps) j["steps"].push_back({s.cell.a, s.cell.b, s.k});
  return finish(j);
}

MultiforkSequence sequence_from_json(std::string_view text) {
  const Json j = parse(text);
  const auto dims = field<std::vector<int>>(j, "grid");
  if (dims.size() != 2) fail(ErrorKind::parse, "'grid' must be [p, q]");
  MultiforkSequence seq{dims[0], dims[1], {}};
  if (seq.p < 1 || seq.q < 1) fail(ErrorKind::parse, "grid dimensions must be at least 1");
  for (const auto& s : field<std::vector<std::vector<int>>>(j, "steps")) {
    if (s.size() != 3) fail(ErrorKind::parse, "steps must be [a, b, k]");
    if (s[0] < 0 || s[1] < 0 || s[2] < 1) fail(ErrorKind::parse, "step values out of range");
    seq.steps.push_back({{s[0], s[1]}, s[2]});
  }
  return seq;
}

std::string lamp_report_json(const ProvenancedLattice& pl) {
  const LampPoset lp = lamp_poset(pl);
  const auto usage = usage_stats(pl, lp.lamps);
  const auto iso = verify_lamp_con_iso(lp, pl.lattice());
  Json lamps_json = Json::array();
  for (std::size_t i = 0; i < lp.lamps.size(); ++i) {
    const Lamp& l = lp.lamps[i];
    Json item;
    item["id"] = i;
    item["kind"] = l.internal() ? "internal" : "boundary";
    item["foot"] = l.foot;
    item["peak"] = l.peak;
    item["step"] = l.step;
    item["tubes"] = Json::array();
    for (const auto& t : l.tubes) item["tubes"].push_back(edge_json(t));
    for (const auto& u : usage)
      if (u.lamp == static_cast<int>(i)) item["pattern"] = u.pattern;
    lamps_json.push_back(std::move(item));
  }
  Json j;
  j["lamps"] = std::move(lamps_json);
  j["order"] = covers_json(lp.order);
  j["con_iso"] = {{"ok", iso.ok}, {"witness", iso.witness}};
  if (!iso.ok) j["con_iso"]["failure"] = iso.failure;
  return finish(j);
}

std::string congruence_report_json(const CongruenceLattice& cl) {
  Json j;
  j["jir"] = Json::array();
  for (std::size_t i = 0; i < cl.jir.size(); ++i)
    j["jir"].push_back({{"generator", {cl.generators[i].first, cl.generators[i].second}}, {"blocks", cl.jir[i].blocks()}});
  j["order"] = covers_json(cl.order);
  j["size"] = cl.size;
  return finish(j);
}

std::string reduction_trace_json(const MultiforkSequence& before, const MultiforkSequence& after,
                                 const std::vector<ReductionStep>& trace) {
  Json steps = Json::array();
  for (const auto& s : trace) {
    Json item;
    item["rule"] = rule_name(s.rule);
    item["lamp"] = {{"foot", s.lamp_foot}, {"peak", s.lamp_peak}, {"step", s.lamp_step}};
    item["tube_index"] = s.tube_index;
    item["removed_tube"] = edge_json(s.removed_tube);
    item["size"] = {s.size_before, s.size_after};
    item["antube"] = {s.antube_before, s.antube_after};
    item["con_preserved"] = s.con_preserved;
    item["bookkeeping_ok"] = s.bookkeeping_ok;
    steps.push_back(std::move(item));
  }
  Json j;
  j["input"] = Json::parse(sequence_to_json(before));
  j["result"] = Json::parse(sequence_to_json(after));
  j["steps"] = std::move(steps);
  return finish(j);
}

std::string bound_report_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["boundary_lamps"] = r.m;
  j["internal_lamps"] = r.k;
  j["minimal_internal_lamps"] = r.s;
  j["length"] = r.length;
  j["antube"] = r.antube;
  j["size"] = r.size;
  j["length_bound"] = r.bound;
  j["size_bound"] = r.size_bound;
  j["square_bound"] = r.square_bound;
  j["fixpoint"] = r.fixpoint;
  j["failures"] = r.failures;
  return finish(j);
}

}  // namespace slimlat
