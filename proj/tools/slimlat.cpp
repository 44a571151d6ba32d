#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "slimlat/congruence.hpp"
#include "slimlat/decompose.hpp"
#include "slimlat/doubling.hpp"
#include "slimlat/dsl.hpp"
#include "slimlat/error.hpp"
#include "slimlat/explorer.hpp"
#include "slimlat/json_io.hpp"
#include "slimlat/lamps.hpp"
#include "slimlat/reducer.hpp"
#include "slimlat/render.hpp"

namespace {

using namespace slimlat;

enum Exit { ok = 0, failed = 1, parse_error = 2, budget_exceeded = 3 };

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::string out;
  int max_len = 5;
  int step = 1;
  bool allow_large = false;
  std::string render_as = "dot";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorKind::invalid_input, "cannot write '" + o.out + "'");
  f << text;
}

bool looks_like_json(const Options& o, const std::string& text) {
  if (o.format == "json") return true;
  if (o.format == "dsl") return false;
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

/// A document is either a multifork sequence (DSL or JSON) or a lattice JSON.
struct Loaded {
  std::optional<MultiforkSequence> sequence;
  std::optional<PlanarDiagram> diagram;
};

Loaded load(const Options& o) {
  const std::string text = read_input(o.input);
  if (!looks_like_json(o, text)) return {parse_dsl(text), std::nullopt};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("grid")) return {sequence_from_json(text), std::nullopt};
  if (j.is_object() && j.contains("covers")) return {std::nullopt, diagram_from_json(text)};
  fail(ErrorKind::parse, "expected a sequence ({\"grid\": ...}) or a lattice ({\"covers\": ...})");
}

ProvenancedLattice load_lattice(const Options& o) {
  Loaded in = load(o);
  if (in.sequence) return build(*in.sequence);
  if (auto r = is_slim_rectangular(*in.diagram); !r) fail(ErrorKind::validation, r.failure);
  return provenance(*in.diagram);
}

MultiforkSequence load_sequence(const Options& o) {
  Loaded in = load(o);
  if (in.sequence) return *in.sequence;
  return decompose(*in.diagram);
}

std::string sequence_text(const Options& o, const MultiforkSequence& seq) {
  return o.format == "json" ? sequence_to_json(seq) : emit_dsl(seq);
}

int cmd_build(const Options& o) {
  write_output(o, diagram_to_json(load_lattice(o).diagram()));
  return ok;
}

int cmd_validate(const Options& o) {
  const ProvenancedLattice pl = load_lattice(o);
  if (auto r = is_slim_rectangular(pl.diagram()); !r) {
    std::cerr << "not slim rectangular: " << r.failure << "\n";
    return failed;
  }
  const auto iso = verify_lamp_con_iso(pl);
  if (!iso.ok) {
    std::cerr << "lamp poset does not match Jir(Con L): " << iso.failure << "\n";
    return failed;
  }
  std::ostringstream s;
  s << "ok: " << pl.lattice().size() << " elements, length " << pl.lattice().length() << ", "
    << iso.witness.size() << " lamps\n";
  write_output(o, s.str());
  return ok;
}

int cmd_lamps(const Options& o) {
  write_output(o, lamp_report_json(load_lattice(o)));
  return ok;
}

int cmd_con(const Options& o) {
  Loaded in = load(o);
  const FiniteLattice l = in.sequence ? build(*in.sequence).lattice() : in.diagram->lattice();
  write_output(o, congruence_report_json(congruence_lattice(l)));
  return ok;
}

int trace_exit(const std::vector<ReductionStep>& trace) {
  for (const auto& s : trace)
    if (!s.con_preserved || !s.bookkeeping_ok) return failed;
  return ok;
}

int cmd_reduce(const Options& o) {
  const ProvenancedLattice pl = load_lattice(o);
  std::vector<ReductionStep> trace;
  MultiforkSequence after = pl.sequence();
  if (auto r = reduce_once(pl)) {
    trace.push_back(r->step);
    after = r->result.sequence();
  }
  write_output(o, reduction_trace_json(pl.sequence(), after, trace));
  return trace_exit(trace);
}

int cmd_minimize(const Options& o) {
  const ProvenancedLattice pl = load_lattice(o);
  const MinimizeResult m = minimize(pl);
  write_output(o, reduction_trace_json(pl.sequence(), m.result.sequence(), m.trace));
  return trace_exit(m.trace);
}

int cmd_bounds(const Options& o) {
  const ProvenancedLattice pl = load_lattice(o);
  const BoundReport input = check_bounds(pl, false);
  const BoundReport fixpoint = check_bounds(minimize(pl).result, true);
  write_output(o, bound_report_json(input) + bound_report_json(fixpoint));
  return input.ok() && fixpoint.ok() ? ok : failed;
}

int cmd_decompose(const Options& o) {
  Loaded in = load(o);
  const MultiforkSequence seq = in.sequence ? decompose(build(*in.sequence).diagram()) : decompose(*in.diagram);
  write_output(o, sequence_text(o, seq));
  return ok;
}

int cmd_double(const Options& o) {
  const MultiforkSequence seq = load_sequence(o);
  const DoublingCheck c = check_double(seq, o.step);
  write_output(o, sequence_text(o, c.doubled));
  if (!c.ok()) {
    std::cerr << "doubling check failed" << (c.failure.empty() ? "" : ": " + c.failure) << "\n";
    return failed;
  }
  return ok;
}

int cmd_enumerate(const Options& o) {
  const EnumerationIndex index = enumerate(o.max_len, o.allow_large);
  nlohmann::ordered_json j;
  j["max_length"] = index.max_length;
  j["counts"] = nlohmann::ordered_json::object();
  j["lattices"] = nlohmann::ordered_json::array();
  for (int l = 2; l <= index.max_length; ++l) {
    const auto& level = index.by_length[static_cast<std::size_t>(l)];
    j["counts"][std::to_string(l)] = level.size();
    for (const auto& e : level)
      j["lattices"].push_back({{"length", l},
                               {"size", e.built->lattice().size()},
                               {"lamps", e.lamps.lamps.size()},
                               {"sequence", inline_dsl(e.lattice.sequence)}});
  }
  write_output(o, j.dump() + "\n");
  return ok;
}

int cmd_realize(const Options& o) {
  const Poset p = poset_from_json(read_input(o.input));
  const RealizabilityAnswer a = realize(p, o.max_len, o.allow_large);
  std::ostringstream s;
  switch (a.verdict) {
    case Verdict::found:
      s << "min length " << a.length << "\n";
      if (a.witness) s << "witness: " << inline_dsl(*a.witness) << "\n";
      break;
    case Verdict::not_representable:
      s << "not representable: no lattice of length " << p.size() << ".." << a.bound << "\n";
      break;
    case Verdict::unresolved:
      s << "unresolved: searched lengths " << p.size() << ".." << a.searched_to << ", bound " << a.bound << "\n";
      break;
  }
  write_output(o, s.str());
  return a.verdict == Verdict::unresolved ? budget_exceeded : ok;
}

int cmd_render(const Options& o) {
  const ProvenancedLattice pl = load_lattice(o);
  write_output(o, render(pl.diagram(), render_format(o.render_as)));
  return ok;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return parse_error;
    case ErrorKind::budget: return budget_exceeded;
    default: return failed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slim rectangular lattices: build, analyse, reduce and enumerate"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;

  auto input = [&](CLI::App* c) { c->add_option("--input", o.input, "Input file, '-' for stdin"); };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Sequence notation: dsl or json (default: detect)")
        ->check(CLI::IsMember({"auto", "dsl", "json"}));
  };
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* c = app.add_subcommand(name, help);
    c->add_option("--out", o.out, "Output file (default stdout)");
    c->callback([&handler, fn] { handler = fn; });
    return c;
  };

  for (auto* c : {add("build", "Build a sequence and print the lattice JSON", cmd_build),
                  add("validate", "Check slim rectangularity and the lamp/congruence match", cmd_validate),
                  add("lamps", "Lamp report JSON", cmd_lamps),
                  add("con", "Join-irreducible congruences JSON", cmd_con),
                  add("reduce", "Apply one tube removal", cmd_reduce),
                  add("minimize", "Apply tube removals to a fixpoint", cmd_minimize),
                  add("bounds", "Length and size bounds for the input and its fixpoint", cmd_bounds),
                  add("decompose", "Recover a multifork sequence from a lattice", cmd_decompose),
                  add("render", "Draw the diagram", cmd_render)}) {
    input(c);
    format(c);
    if (c->get_name() == "render")
      c->add_option("--to", o.render_as, "dot, svg or tikz")->check(CLI::IsMember({"dot", "svg", "tikz"}));
  }
  CLI::App* dbl = add("double", "Double the lamp created at a step", cmd_double);
  input(dbl);
  format(dbl);
  dbl->add_option("--step", o.step, "1-based step of the lamp to double")->required();

  CLI::App* en = add("enumerate", "All slim rectangular lattices up to a length", cmd_enumerate);
  en->add_option("--max-len", o.max_len, "Largest length")->check(CLI::NonNegativeNumber);
  en->add_flag("--allow-large", o.allow_large, "Permit lengths above the enumeration cap");

  CLI::App* rz = add("realize", "Minimal length of a lattice with the given Jir(Con)", cmd_realize);
  input(rz);
  o.max_len = 7;
  rz->add_option("--max-len", o.max_len, "Largest length searched (default 7)")->check(CLI::NonNegativeNumber);
  rz->add_flag("--allow-large", o.allow_large, "Search past the length bound and the enumeration cap");
  en->preparse_callback([&o](std::size_t) { o.max_len = 5; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_error;
  }

  try {
    return handler(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
}
