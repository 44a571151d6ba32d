// One PASS/FAIL line per acceptance criterion. With arguments, runs only the
// listed criteria. Exit status is non-zero if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "slimlat/decompose.hpp"
#include "slimlat/doubling.hpp"
#include "slimlat/dsl.hpp"
#include "slimlat/explorer.hpp"
#include "slimlat/lamps.hpp"
#include "slimlat/poset_tools.hpp"
#include "slimlat/reducer.hpp"

using namespace slimlat;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> problems;

  void check(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

Enumerator& lattices() {
  static Enumerator en;
  return en;
}

oracle::Order order_of(const FiniteLattice& l) { return oracle::from_poset(l.poset()); }

int antube(const PlanarDiagram& d) {
  const auto t = neon_tubes(d);
  return static_cast<int>(t.boundary.size() + t.internal.size());
}

std::string name(const IndexEntry& e) { return inline_dsl(e.lattice.sequence); }

// 1. Lamp poset against Jir(Con L) computed by brute force.
void lamp_con_iso(Outcome& out) {
  int count = 0;
  for (int len = 2; len <= 5; ++len)
    for (const auto& e : lattices().indexed(len)) {
      ++count;
      const LampPoset& lp = e.lamps;
      const auto order = order_of(e.built->lattice());
      const auto jc = oracle::jir_con(order);
      std::vector<int> image;
      std::set<int> hit;
      for (const auto& l : lp.lamps) {
        image.push_back(oracle::find(jc, order, l.foot, l.peak));
        hit.insert(image.back());
      }
      bool ok = image.size() == jc.congruences.size() && hit.size() == image.size() && !hit.count(-1);
      for (std::size_t i = 0; ok && i < image.size(); ++i)
        for (std::size_t j = 0; ok && j < image.size(); ++j)
          ok = lp.order.leq(static_cast<int>(i), static_cast<int>(j)) == jc.order.leq[image[i]][image[j]];
      out.check(ok, name(e));
    }
  out.detail << count << " lattices of length <= 5";
}

// 2. The two descriptions of the lamp relation agree.
void rho_equality(Outcome& out) {
  int count = 0;
  for (int len = 2; len <= 5; ++len)
    for (const auto& e : lattices().indexed(len)) {
      ++count;
      const auto ls = lamps(*e.built);
      out.check(rho_foot(*e.built, ls) == rho_circr(*e.built, ls), name(e));
    }
  out.detail << count << " lattices of length <= 5";
}

// Every lamp other than the reduced one survives with its foot and tube count
// (its peak may move only if the old peak was removed); the reduced lamp keeps
// its peak and loses one tube.
bool bookkeeping(const ProvenancedLattice& before, const Reduction& r, int lamp) {
  std::vector<int> renamed(static_cast<std::size_t>(before.size()), -1);
  for (std::size_t i = 0; i < r.raw.kept.size(); ++i) renamed[static_cast<std::size_t>(r.raw.kept[i])] = static_cast<int>(i);
  const auto old_lamps = lamps(before);
  const auto new_lamps = diagram_lamps(r.raw.diagram);
  if (new_lamps.size() != old_lamps.size()) return false;
  for (std::size_t i = 0; i < old_lamps.size(); ++i) {
    const Lamp& l = old_lamps[i];
    const bool reduced = static_cast<int>(i) == lamp;
    const int peak = renamed[static_cast<std::size_t>(l.peak)];
    const int foot = renamed[static_cast<std::size_t>(l.foot)];
    bool found = false;
    for (const auto& m : new_lamps) {
      if (m.kind != l.kind || (m.peak != peak && (reduced || peak >= 0))) continue;
      if (reduced ? m.tubes.size() + 1 == l.tubes.size() : (m.foot == foot && m.tubes.size() == l.tubes.size()))
        found = true;
    }
    if (!found) return false;
  }
  return true;
}

void check_reduction(Outcome& out, const ProvenancedLattice& pl, const std::function<Reduction()>& apply, int lamp,
                     const std::string& label) {
  try {
    const Reduction r = apply();
    const auto& d = r.result.diagram();
    out.check(static_cast<bool>(is_slim_rectangular(d)) && static_cast<bool>(is_slim_rectangular(r.raw.diagram)),
              label + ": result not slim rectangular");
    out.check(oracle::iso(oracle::jir_con(order_of(pl.lattice())).order, oracle::jir_con(order_of(d.lattice())).order)
                  .has_value(),
              label + ": Con changed");
    out.check(d.size() < pl.size(), label + ": size did not drop");
    out.check(antube(d) == antube(pl.diagram()) - 1, label + ": ANTube not decreased by one");
    out.check(bookkeeping(pl, r, lamp), label + ": tube bookkeeping");
  } catch (const std::exception& e) {
    out.check(false, label + ": " + e.what());
  }
}

// 3. Both removal rules on every occurrence of their pattern.
void reductions(Outcome& out) {
  int lattices_with_pattern = 0, neighboring = 0, sandwiched = 0;
  for (int len = 2; len <= 6; ++len)
    for (const auto& e : lattices().indexed(len)) {
      const ProvenancedLattice& pl = *e.built;
      bool any = false;
      for (const auto& u : usage_stats(pl)) {
        const std::string& s = u.pattern;
        for (int i = 0; i + 1 < static_cast<int>(s.size()); ++i) {
          if (s[i] == '0' && s[i + 1] == '0') {
            any = true;
            for (auto [a, b] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
              ++neighboring;
              check_reduction(out, pl, [&, a = a, b = b] { return remove_neighboring(pl, u.lamp, a, b); }, u.lamp,
                              name(e) + " 00@" + std::to_string(b));
            }
          }
          if (i + 2 < static_cast<int>(s.size()) && s.compare(i, 3, "0u0") == 0) {
            any = true;
            ++sandwiched;
            check_reduction(out, pl, [&] { return remove_sandwiched(pl, u.lamp, i + 1); }, u.lamp,
                            name(e) + " 0u0@" + std::to_string(i + 1));
          }
        }
      }
      lattices_with_pattern += any;
    }
  out.detail << lattices_with_pattern << " lattices of length <= 6 with a pattern, " << neighboring
             << " neighboring and " << sandwiched << " sandwiched removals";
  out.check(sandwiched > 0, "no 0u0 pattern exercised");
}

// 4. L \ F(p) is meet-closed for every neon tube.
void meet_closure(Outcome& out) {
  int tubes = 0;
  for (int len = 2; len <= 5; ++len)
    for (const auto& e : lattices().indexed(len)) {
      const auto& d = e.built->diagram();
      const auto order = order_of(d.lattice());
      const auto t = neon_tubes(d);
      std::vector<Edge> all = t.boundary;
      all.insert(all.end(), t.internal.begin(), t.internal.end());
      for (const auto& p : all) {
        ++tubes;
        out.check(oracle::meet_closed_without(order, fork_elements(d, p)),
                  name(e) + " tube " + std::to_string(p.foot) + "-" + std::to_string(p.peak));
      }
    }
  out.detail << tubes << " neon tubes in lattices of length <= 5";
}

// 5. Length and size bounds.
void bounds(Outcome& out) {
  int count = 0, fixpoints = 0, size_literal = 0, size_square = 0;
  std::string literal_failures;
  for (int len = 2; len <= 6; ++len)
    for (const auto& e : lattices().indexed(len)) {
      ++count;
      const auto& l = e.built->lattice();
      const int n = static_cast<int>(oracle::jir_con(order_of(l)).congruences.size());
      const int length = oracle::length(order_of(l));
      out.check(length >= n, "(i) " + name(e));
      const long long literal = 1 + static_cast<long long>(length - 1) * (length - 1);
      if (l.size() > literal) {
        ++size_literal;
        literal_failures += (literal_failures.empty() ? "" : ", ") + name(e) + " (" + std::to_string(l.size()) + " > " +
                         std::to_string(literal) + ")";
      }
      if (l.size() > static_cast<long long>(length) * length) ++size_square;

      const ProvenancedLattice fix = minimize(*e.built).result;
      int internal = 0;
      for (const auto& lamp : lamps(fix)) internal += lamp.internal();
      if (internal == 0) continue;
      ++fixpoints;
      const int fn = static_cast<int>(oracle::jir_con(order_of(fix.lattice())).congruences.size());
      out.check(fix.lattice().length() <= length_bound(fn), "(ii) fixpoint of " + name(e));
    }
  out.check(size_literal == 0, "(iii) |L| <= 1+(len-1)^2 fails on " + std::to_string(size_literal) + " of " +
                                   std::to_string(count) + " lattices: " + literal_failures);
  out.detail << count << " lattices of length <= 6, " << fixpoints << " fixpoints with internal lamps; |L| <= len^2 "
             << (size_square == 0 ? "holds on all" : "fails on " + std::to_string(size_square));
}

// 6. The Y poset needs length exactly 5; the length bound for n = 4 is 7.
void y_poset(Outcome& out) {
  const Poset y = named_poset("Y", 4);
  const auto a = realize(y, 7);
  out.check(a.verdict == Verdict::found && a.length == 5, "realize(Y, 7) did not return length 5");
  out.check(length_bound(4) == 7, "bound for n = 4 is not 7");
  const auto target = oracle::from_poset(y);
  for (const auto& e : lattices().indexed(4))
    out.check(!oracle::iso(oracle::from_poset(e.lamps.order), target).has_value(), "length-4 witness " + name(e));
  if (a.witness) {
    out.check(oracle::iso(oracle::jir_con(order_of(build(*a.witness).lattice())).order, target).has_value(),
              "witness Con does not match Y");
    out.detail << "witness " << inline_dsl(*a.witness) << ", bound " << a.bound;
  }
}

// 7. Q_n at length n and P_n at length n+1 with a two-tube lamp for u.
void q_and_p(Outcome& out) {
  for (int n = 3; n <= 5; ++n) {
    const auto a = realize(named_poset("Q", n), 7);
    out.check(a.verdict == Verdict::found && a.length == n, "Q_" + std::to_string(n));
    out.detail << "Q_" << n << ":" << a.length << " ";
  }
  for (int n = 4; n <= 5; ++n) {
    const Poset p = named_poset("P", n);
    const auto a = realize(p, 7);
    out.check(a.verdict == Verdict::found && a.length == n + 1, "P_" + std::to_string(n));
    out.detail << "P_" << n << ":" << a.length << " ";
    if (!a.witness) continue;
    const LampPoset lp = lamp_poset(build(*a.witness));
    const auto map = oracle::iso(oracle::from_poset(p), oracle::from_poset(lp.order));
    out.check(map.has_value(), "P_" + std::to_string(n) + " witness is not isomorphic");
    if (!map) continue;
    const std::size_t tubes = lp.lamps[static_cast<std::size_t>((*map)[n - 3])].tubes.size();
    out.check(tubes == 2, "P_" + std::to_string(n) + ": NTube(U) = " + std::to_string(tubes));
    out.detail << "(NTube U = " << tubes << ") ";
  }
}

// 8. Doubling every step of every lattice of length <= 4.
void doubling(Outcome& out) {
  int cases = 0;
  for (int len = 2; len <= 4; ++len)
    for (const auto& e : lattices().indexed(len)) {
      const auto& seq = e.lattice.sequence;
      for (int t = 1; t <= static_cast<int>(seq.steps.size()); ++t) {
        ++cases;
        const std::string label = name(e) + " step " + std::to_string(t);
        try {
          const DoublingCheck c = check_double(seq, t);
          out.check(c.ok(), label + ": " + c.failure);
          const ProvenancedLattice after = build(c.doubled);
          int lamp = -1;
          for (std::size_t i = 0; i < e.lamps.lamps.size(); ++i)
            if (e.lamps.lamps[i].step == t) lamp = static_cast<int>(i);
          const auto expected = oracle::from_poset(poset_double(e.lamps.order, lamp));
          out.check(oracle::iso(expected, oracle::jir_con(order_of(after.lattice())).order).has_value(),
                    label + ": Con is not the doubled poset");
          out.check(antube(after.diagram()) == antube(e.built->diagram()) + 2, label + ": ANTube");
          out.check(oracle::length(order_of(after.lattice())) == len + 2, label + ": length");
        } catch (const std::exception& ex) {
          out.check(false, label + ": " + ex.what());
        }
      }
    }
  out.detail << cases << " (lattice, step) pairs of length <= 4";
}

// 9. build(decompose(L)) reproduces L.
void round_trip(Outcome& out) {
  int count = 0;
  for (int len = 2; len <= 5; ++len)
    for (const auto& e : lattices().indexed(len)) {
      ++count;
      try {
        const auto& d = e.built->diagram();
        out.check(canonical_code(build(decompose(d)).diagram()) == canonical_code(d), name(e));
      } catch (const std::exception& ex) {
        out.check(false, name(e) + ": " + ex.what());
      }
    }
  out.detail << count << " lattices of length <= 5";
}

// 10. Con of the 3-chain and of B_2 is B_2; chains realize n <= 1.
void trivial_cases(Outcome& out) {
  const auto chain3 = FiniteLattice::from_poset(Poset::from_covers(3, {{0, 1}, {1, 2}}));
  const auto b2 = build({1, 1, {}}).lattice();
  for (const auto* l : {&chain3, &b2}) {
    const auto order = order_of(*l);
    out.check(oracle::count_congruences(order) == 4, "|Con| != 4");
    const auto jc = oracle::jir_con(order);
    out.check(jc.congruences.size() == 2 && !jc.order.leq[0][1] && !jc.order.leq[1][0], "Jir(Con) is not a 2-antichain");
    out.check(congruence_lattice(*l).size == 4, "library |Con| != 4");
  }
  const auto empty = realize(Poset::from_covers(0, {}), 7);
  const auto single = realize(Poset::from_covers(1, {}), 7);
  out.check(empty.verdict == Verdict::found && empty.length == 0, "n = 0");
  out.check(single.verdict == Verdict::found && single.length == 1, "n = 1");
  const auto chain2 = FiniteLattice::from_poset(Poset::from_covers(2, {{0, 1}}));
  out.check(oracle::jir_con(order_of(chain2)).congruences.size() == 1, "2-chain");
  out.detail << "Con(C_3) = Con(B_2) = B_2; n = 0, 1 realized by chains";
}

// 11. Exact counts per length (the asymptotic count is not checked).
void counts(Outcome& out) {
  const std::vector<std::size_t> frozen{0, 0, 1, 2, 6, 19, 78};
  for (int len = 2; len <= 6; ++len) {
    const std::size_t c = lattices().level(len).size();
    out.check(c == frozen[static_cast<std::size_t>(len)], "length " + std::to_string(len));
    out.detail << len << ":" << c << " ";
  }
  out.detail << "(7:" << lattices().level(7).size() << ")";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"lamp poset ~ Jir(Con L)", lamp_con_iso},
      {"rho relations coincide", rho_equality},
      {"tube removals", reductions},
      {"L \\ F(p) meet-closed", meet_closure},
      {"length and size bounds", bounds},
      {"Y poset minimal length", y_poset},
      {"Q_n and P_n witnesses", q_and_p},
      {"lamp doubling", doubling},
      {"decompose round trip", round_trip},
      {"small congruence lattices", trivial_cases},
      {"enumeration counts", counts},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!selected.empty() && !selected.count(id)) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.pass;
    std::printf("criterion %d: %s  %s (%s; %.2fs)\n", id, out.pass ? "PASS" : "FAIL", criteria[i].first,
                out.detail.str().c_str(), secs);
    for (const auto& p : out.problems) std::printf("    %s\n", p.c_str());
  }
  return all ? 0 : 1;
}
