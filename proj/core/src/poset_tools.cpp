#include "slimlat/poset_tools.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "slimlat/error.hpp"

namespace slimlat {

namespace {

using Signature = std::array<int, 4>;

std::vector<Signature> signatures(const Poset& p) {
  std::vector<Signature> out(static_cast<std::size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) {
    int below = 0;
    int above = 0;
    for (Element y = 0; y < p.size(); ++y) {
      below += p.less(y, x) ? 1 : 0;
      above += p.less(x, y) ? 1 : 0;
    }
    out[x] = {below, above, static_cast<int>(p.lower_covers(x).size()), static_cast<int>(p.upper_covers(x).size())};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Poset& p, const Poset& q) : p_(p), q_(q), sp_(signatures(p)), sq_(signatures(q)) {
    order_.resize(static_cast<std::size_t>(p.size()));
    for (Element x = 0; x < p.size(); ++x) order_[x] = x;
    // Map elements with rare signatures first.
    std::vector<int> freq(static_cast<std::size_t>(p.size()), 0);
    for (Element x = 0; x < p.size(); ++x)
      freq[x] = static_cast<int>(std::count(sp_.begin(), sp_.end(), sp_[x]));
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) { return freq[a] < freq[b]; });
    image_.assign(static_cast<std::size_t>(p.size()), -1);
    used_.assign(static_cast<std::size_t>(q.size()), false);
  }

  std::optional<std::vector<Element>> run() {
    auto a = sp_;
    auto b = sq_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Element x = order_[depth];
    for (Element y = 0; y < q_.size(); ++y) {
      if (used_[y] || sq_[y] != sp_[x]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        const Element u = order_[d];
        const Element v = image_[u];
        consistent = p_.leq(u, x) == q_.leq(v, y) && p_.leq(x, u) == q_.leq(y, v);
      }
      if (!consistent) continue;
      image_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      image_[x] = -1;
    }
    return false;
  }

  const Poset& p_;
  const Poset& q_;
  std::vector<Signature> sp_;
  std::vector<Signature> sq_;
  std::vector<Element> order_;
  std::vector<Element> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Element>> poset_iso(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  return IsoSearch(p, q).run();
}

Poset poset_double(const Poset& p, Element j) {
  const int n = p.size();
  if (j < 0 || j >= n) fail(ErrorKind::invalid_input, "element " + std::to_string(j) + " is not in the poset");
  const Element low = n;
  std::vector<CoverPair> covers;
  for (const auto& [lo, hi] : p.covers()) covers.emplace_back(lo, hi == j ? low : hi);
  covers.emplace_back(low, j);
  return Poset::from_covers(n + 1, std::move(covers));
}

Poset named_poset(std::string_view name, int n) {
  std::vector<CoverPair> covers;
  if (name == "chain") {
    if (n < 1) fail(ErrorKind::invalid_input, "chain needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return Poset::from_covers(n, covers);
  }
  if (name == "antichain") {
    if (n < 1) fail(ErrorKind::invalid_input, "antichain needs n >= 1");
    return Poset::from_covers(n, covers);
  }
  if (name == "Y") return named_poset("P", 4);
  if (name == "P") {
    if (n < 4) fail(ErrorKind::invalid_input, "P_n needs n >= 4");
    const Element u = n - 3;
    for (Element c = 0; c < u; ++c) covers.emplace_back(c, u);
    covers.emplace_back(u, n - 2);
    covers.emplace_back(u, n - 1);
    return Poset::from_covers(n, covers);
  }
  if (name == "Q") {
    if (n < 3) fail(ErrorKind::invalid_input, "Q_n needs n >= 3");
    for (Element c = 0; c < n - 2; ++c) {
      covers.emplace_back(c, n - 2);
      covers.emplace_back(c, n - 1);
    }
    return Poset::from_covers(n, covers);
  }
  fail(ErrorKind::invalid_input, "unknown poset family '" + std::string(name) + "'");
}

}  // namespace slimlat
