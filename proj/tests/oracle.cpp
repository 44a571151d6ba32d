#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

Order from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  Order o{n, Matrix(n, std::vector<bool>(n, false))};
  for (int i = 0; i < n; ++i) o.leq[i][i] = true;
  for (auto [a, b] : covers) o.leq[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (o.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (o.leq[k][j]) o.leq[i][j] = true;
  return o;
}

Order from_poset(const slimlat::Poset& p) {
  std::vector<std::pair<int, int>> covers(p.covers().begin(), p.covers().end());
  return from_covers(p.size(), covers);
}

int meet(const Order& o, int a, int b) {
  int best = -1;
  for (int x = 0; x < o.n; ++x)
    if (o.leq[x][a] && o.leq[x][b] && (best < 0 || o.leq[best][x])) best = x;
  for (int x = 0; x < o.n; ++x)
    if (best >= 0 && o.leq[x][a] && o.leq[x][b] && !o.leq[x][best]) return -1;
  return best;
}

int join(const Order& o, int a, int b) {
  int best = -1;
  for (int x = 0; x < o.n; ++x)
    if (o.leq[a][x] && o.leq[b][x] && (best < 0 || o.leq[x][best])) best = x;
  for (int x = 0; x < o.n; ++x)
    if (best >= 0 && o.leq[a][x] && o.leq[b][x] && !o.leq[best][x]) return -1;
  return best;
}

namespace {

struct Tables {
  std::vector<std::vector<int>> m, j;
};

Tables tables(const Order& l) {
  Tables t{std::vector<std::vector<int>>(l.n, std::vector<int>(l.n)), std::vector<std::vector<int>>(l.n, std::vector<int>(l.n))};
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b) {
      t.m[a][b] = meet(l, a, b);
      t.j[a][b] = join(l, a, b);
    }
  return t;
}

Matrix close(const Order& l, const Tables& t, Matrix r) {
  const int n = l.n;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (r[i][k] || r[k][i])
          for (int j = 0; j < n; ++j)
            if ((r[k][j] || r[j][k]) && !r[i][j]) r[i][j] = r[j][i] = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        for (int c = 0; c < n; ++c) {
          for (auto [x, y] : {std::pair{t.m[a][c], t.m[b][c]}, std::pair{t.j[a][c], t.j[b][c]}})
            if (!r[x][y]) {
              r[x][y] = r[y][x] = true;
              changed = true;
            }
        }
      }
  }
  return r;
}

bool contains(const Matrix& big, const Matrix& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = 0; j < big.size(); ++j)
      if (small[i][j] && !big[i][j]) return false;
  return true;
}

}  // namespace

Matrix principal_congruence(const Order& lattice, int a, int b) {
  Matrix r(lattice.n, std::vector<bool>(lattice.n, false));
  r[a][b] = r[b][a] = true;
  return close(lattice, tables(lattice), std::move(r));
}

JirCon jir_con(const Order& l) {
  const Tables t = tables(l);
  JirCon out;
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b) {
      if (a == b || !l.leq[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < l.n && cover; ++c)
        if (c != a && c != b && l.leq[a][c] && l.leq[c][b]) cover = false;
      if (!cover) continue;
      Matrix r(l.n, std::vector<bool>(l.n, false));
      r[a][b] = r[b][a] = true;
      Matrix c = close(l, t, std::move(r));
      if (std::find(out.congruences.begin(), out.congruences.end(), c) != out.congruences.end()) continue;
      out.congruences.push_back(std::move(c));
      out.generators.emplace_back(a, b);
    }
  const int k = static_cast<int>(out.congruences.size());
  out.order = Order{k, Matrix(k, std::vector<bool>(k, false))};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out.order.leq[i][j] = contains(out.congruences[j], out.congruences[i]);
  return out;
}

int find(const JirCon& j, const Order& lattice, int a, int b) {
  const Matrix c = principal_congruence(lattice, a, b);
  for (std::size_t i = 0; i < j.congruences.size(); ++i)
    if (j.congruences[i] == c) return static_cast<int>(i);
  return -1;
}

long long count_congruences(const Order& l) {
  const Tables t = tables(l);
  std::vector<int> block(l.n, -1);
  long long count = 0;
  std::function<void(int, int)> go = [&](int x, int used) {
    if (x == l.n) {
      for (int a = 0; a < l.n; ++a)
        for (int b = 0; b < l.n; ++b) {
          if (block[a] != block[b]) continue;
          for (int c = 0; c < l.n; ++c)
            if (block[t.m[a][c]] != block[t.m[b][c]] || block[t.j[a][c]] != block[t.j[b][c]]) return;
        }
      ++count;
      return;
    }
    for (int b = 0; b <= used; ++b) {
      block[x] = b;
      go(x + 1, std::max(used, b + 1));
    }
  };
  go(0, 0);
  return count;
}

std::optional<std::vector<int>> iso(const Order& p, const Order& q) {
  if (p.n != q.n) return std::nullopt;
  const int n = p.n;
  auto degrees = [](const Order& o, int x) {
    int up = 0, down = 0;
    for (int y = 0; y < o.n; ++y) {
      up += o.leq[x][y];
      down += o.leq[y][x];
    }
    return std::pair{up, down};
  };
  std::vector<int> image(n, -1);
  std::vector<bool> taken(n, false);
  std::function<bool(int)> go = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (taken[y] || degrees(p, x) != degrees(q, y)) continue;
      bool fits = true;
      for (int z = 0; z < x && fits; ++z)
        fits = p.leq[x][z] == q.leq[y][image[z]] && p.leq[z][x] == q.leq[image[z]][y];
      if (!fits) continue;
      image[x] = y;
      taken[y] = true;
      if (go(x + 1)) return true;
      taken[y] = false;
    }
    image[x] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return image;
}

bool meet_closed_without(const Order& l, const std::vector<int>& removed) {
  std::vector<bool> gone(l.n, false);
  for (int x : removed) gone[x] = true;
  for (int a = 0; a < l.n; ++a)
    for (int b = 0; b < l.n; ++b)
      if (!gone[a] && !gone[b] && gone[meet(l, a, b)]) return false;
  return true;
}

int length(const Order& l) {
  std::vector<int> h(l.n, 0);
  std::vector<int> ids(l.n);
  for (int i = 0; i < l.n; ++i) ids[i] = i;
  auto below = [&](int x) {
    int c = 0;
    for (int y = 0; y < l.n; ++y) c += l.leq[y][x];
    return c;
  };
  std::sort(ids.begin(), ids.end(), [&](int a, int b) { return below(a) < below(b); });
  int best = 0;
  for (int x : ids) {
    for (int y : ids)
      if (y != x && l.leq[y][x]) h[x] = std::max(h[x], h[y] + 1);
    best = std::max(best, h[x]);
  }
  return best;
}

}  // namespace oracle
