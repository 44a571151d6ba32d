#include "slimlat/explorer.hpp"

#include <algorithm>
#include <unordered_set>

#include "slimlat/congruence.hpp"
#include "slimlat/dsl.hpp"
#include "slimlat/error.hpp"
#include "slimlat/poset_tools.hpp"

namespace slimlat {

namespace {

std::string encode(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end());
  std::string out;
  out.reserve(points.size() * 2);
  for (GridPoint g : points) {
    out.push_back(static_cast<char>(g.x));
    out.push_back(static_cast<char>(g.y));
  }
  return out;
}

IndexEntry index_entry(const EnumeratedLattice& e) {
  IndexEntry entry;
  entry.lattice = e;
  entry.built = std::make_shared<const ProvenancedLattice>(build(e.sequence));
  entry.lamps = lamp_poset(*entry.built);
  return entry;
}

void check_budget(int length, bool allow_large) {
  if (length > kEnumerationSoftCap && !allow_large)
    fail(ErrorKind::budget, "enumeration beyond length " + std::to_string(kEnumerationSoftCap) +
                                " needs an explicit override");
}

}  // namespace

std::string point_code(const std::vector<GridPoint>& points) {
  std::vector<GridPoint> swapped;
  swapped.reserve(points.size());
  for (GridPoint g : points) swapped.push_back({g.y, g.x});
  return std::min(encode(points), encode(std::move(swapped)));
}

std::vector<GridPoint> points_of(const ProvenancedLattice& pl) {
  auto out = pl.points();
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<EnumeratedLattice>& Enumerator::level(int length) {
  if (length < 0) fail(ErrorKind::invalid_input, "length must be non-negative");
  check_budget(length, allow_large_);
  while (computed() < length) {
    const int l = computed() + 1;
    std::vector<EnumeratedLattice> out;
    std::unordered_set<std::string> seen;
    auto offer = [&](const MultiforkSequence& seq, std::vector<GridPoint> points) {
      std::string code = point_code(points);
      if (!seen.insert(code).second) return;
      std::sort(points.begin(), points.end());
      out.push_back({seq, std::move(points), std::move(code), l});
    };
    for (int p = 1; p < l; ++p) {
      std::vector<GridPoint> points;
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= l - p; ++j) points.push_back({i, j});
      offer({p, l - p, {}}, std::move(points));
    }
    for (int shorter = 2; shorter < l; ++shorter) {
      const int k = l - shorter;
      for (const auto& base : levels_[static_cast<std::size_t>(shorter)])
        for (GridPoint g : base.points) {
          const CellAddress cell{g.x, g.y};
          if (!has_distributive_cell(base.points, cell)) continue;
          MultiforkSequence seq = base.sequence;
          seq.steps.push_back({cell, k});
          offer(seq, fork_points(base.points, cell, k));
        }
    }
    levels_.push_back(std::move(out));
  }
  return levels_[static_cast<std::size_t>(length)];
}

const std::vector<IndexEntry>& Enumerator::indexed(int length) {
  const auto& lattices = level(length);
  if (indexed_.size() <= static_cast<std::size_t>(length)) {
    indexed_.resize(static_cast<std::size_t>(length) + 1);
    indexed_done_.resize(static_cast<std::size_t>(length) + 1, false);
  }
  if (!indexed_done_[static_cast<std::size_t>(length)]) {
    auto& out = indexed_[static_cast<std::size_t>(length)];
    for (const auto& e : lattices) out.push_back(index_entry(e));
    indexed_done_[static_cast<std::size_t>(length)] = true;
  }
  return indexed_[static_cast<std::size_t>(length)];
}

std::vector<std::size_t> EnumerationIndex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : by_length) out.push_back(level.size());
  return out;
}

EnumerationIndex enumerate(int max_length, bool allow_large) {
  check_budget(max_length, allow_large);
  Enumerator lattices(allow_large);
  EnumerationIndex index;
  index.max_length = max_length;
  index.by_length.resize(static_cast<std::size_t>(std::max(max_length, 0)) + 1);
  for (int l = 2; l <= max_length; ++l) {
    auto& level = index.by_length[static_cast<std::size_t>(l)];
    level = lattices.indexed(l);
    for (auto& entry : level) entry.con = congruence_lattice(entry.built->lattice()).order;
  }
  return index;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::found: return "found";
    case Verdict::not_representable: return "not representable";
    case Verdict::unresolved: return "unresolved";
  }
  return "unresolved";
}

RealizabilityAnswer realize(const Poset& p, int max_length, bool allow_large) {
  Enumerator lattices(allow_large);
  return realize(p, max_length, lattices, allow_large);
}

RealizabilityAnswer realize(const Poset& p, int max_length, Enumerator& lattices, bool allow_large) {
  RealizabilityAnswer a;
  const int n = p.size();
  a.bound = length_bound(n);
  if (n <= 1) {
    // The 1- and 2-element chains; not rectangular, so no multifork witness.
    a.verdict = Verdict::found;
    a.length = n;
    a.searched_to = n;
    return a;
  }
  const long long limit = allow_large ? max_length : std::min<long long>(max_length, a.bound);
  for (int l = n; l <= limit; ++l) {
    a.searched_to = l;
    for (const auto& entry : lattices.indexed(l)) {
      const Poset& lp = entry.lamps.order;
      if (lp.size() != n || lp.covers().size() != p.covers().size()) continue;
      if (!poset_iso(lp, p)) continue;
      a.verdict = Verdict::found;
      a.length = l;
      a.witness = entry.lattice.sequence;
      return a;
    }
  }
  a.verdict = limit >= a.bound ? Verdict::not_representable : Verdict::unresolved;
  return a;
}

SweepReport sweep_bounds(int max_length, bool allow_large) {
  Enumerator lattices(allow_large);
  SweepReport out;
  for (int l = 2; l <= max_length; ++l)
    for (const auto& entry : lattices.indexed(l)) {
      ++out.lattices;
      const std::string name = inline_dsl(entry.lattice.sequence);
      const BoundReport r = check_bounds(*entry.built, false);
      if (r.length < r.n) out.length_below_n.push_back(name);
      if (r.size > r.size_bound) out.size_literal.push_back(name);
      if (r.size > r.square_bound) out.size_square.push_back(name);
      const auto fix = minimize(*entry.built);
      const BoundReport f = check_bounds(fix.result, true);
      if (f.k == 0) continue;
      ++out.fixpoints_with_internal;
      for (const auto& why : f.failures)
        if (why.rfind("size ", 0) != 0) out.fixpoint.push_back(name + ": " + why);
    }
  return out;
}

}  // namespace slimlat
