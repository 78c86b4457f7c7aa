#pragma once

// Independent brute-force references used by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wcde/cde.hpp"
#include "wcde/lattice.hpp"
#include "wcde/shape.hpp"

namespace oracle {

using namespace wcde;

// The 12-element lattice with edges labelled by element names 2..7.
struct TwelveElement {
  FiniteLattice lattice;
  std::map<std::pair<int, int>, int> labels;  // (lo, hi) -> label, 1-based names
};

inline TwelveElement twelve_element() {
  const int e[16][3] = {{1, 2, 2},  {1, 3, 3},  {2, 4, 4},  {2, 5, 5},  {3, 6, 6},   {4, 7, 7},
                        {4, 8, 5},  {5, 8, 4},  {5, 9, 3},  {6, 9, 2},  {7, 10, 5},  {8, 10, 7},
                        {8, 11, 3}, {9, 11, 4}, {10, 12, 3}, {11, 12, 7}};
  std::vector<std::string> names;
  for (int k = 1; k <= 12; ++k) names.push_back(std::to_string(k));
  std::vector<std::pair<int, int>> covers;
  std::map<std::pair<int, int>, int> labels;
  for (const auto& r : e) {
    covers.emplace_back(r[0] - 1, r[1] - 1);
    labels[{r[0], r[1]}] = r[2];
  }
  return {FiniteLattice::build(names, covers), labels};
}

// Lexicographically least normalized skew shape reachable from d by row and column
// permutations, found by trying all of them.
inline std::optional<SkewShape> brute_skew_shape(const Diagram& d) {
  if (d.empty()) return SkewShape();
  auto rows = d.rows(), cols = d.cols();
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(cols.size());
  std::vector<int> rp(R), cp(C);
  std::optional<SkewShape> best;
  for (int i = 0; i < R; ++i) rp[i] = i;
  do {
    for (int i = 0; i < C; ++i) cp[i] = i;
    do {
      std::vector<std::vector<char>> g(R, std::vector<char>(C, 0));
      for (const Box& b : d.boxes()) {
        int r = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), b.row) - rows.begin());
        int c = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), b.col) - cols.begin());
        g[rp[r]][cp[c]] = 1;
      }
      std::vector<int> lam(R), nu(R);
      bool ok = true;
      for (int r = 0; r < R && ok; ++r) {
        int lo = -1, hi = -1;
        for (int c = 0; c < C; ++c)
          if (g[r][c]) {
            if (lo < 0) lo = c;
            hi = c;
          }
        for (int c = lo; c <= hi && ok; ++c) ok = g[r][c];
        nu[r] = lo;
        lam[r] = hi + 1;
        if (r && (lam[r] > lam[r - 1] || nu[r] > nu[r - 1])) ok = false;
      }
      if (!ok) continue;
      SkewShape s{Partition(lam), Partition(nu)};
      if (!best || s < *best) best = s;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return best;
}

// Number of multichains x_0 <= ... <= x_m containing each element, by explicit enumeration.
inline std::vector<long> literal_multichain_counts(const Hasse& h, int m) {
  const int n = h.size();
  auto ups = h.up_sets();
  std::vector<long> count(n, 0);
  std::vector<int> seq;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == m + 1) {
      std::set<int> s(seq.begin(), seq.end());
      for (int x : s) ++count[x];
      return;
    }
    for (int y = 0; y < n; ++y)
      if (seq.empty() || ups[seq.back()][y]) {
        seq.push_back(y);
        rec();
        seq.pop_back();
      }
  };
  rec();
  return count;
}

// Maximal chain counts through each element by explicit enumeration.
inline std::vector<long> literal_maxchain_counts(const Hasse& h) {
  std::vector<long> count(h.size(), 0);
  std::vector<int> path{h.bottom()};
  std::function<void(int)> rec = [&](int x) {
    if (x == h.top()) {
      for (int y : path) ++count[y];
      return;
    }
    for (int y : h.up(x)) {
      path.push_back(y);
      rec(y);
      path.pop_back();
    }
  };
  rec(h.bottom());
  return count;
}

// Values of E(mu; ddeg) over the vertices of the toggle-symmetric polytope, found by solving
// every square subsystem (double precision to screen, exact arithmetic to confirm).
inline std::set<Rational> vertex_ddeg_values(const GammaLabeling& gl) {
  const Hasse& h = gl.hasse();
  const int n = h.size();
  const auto& irr = gl.irreducibles();
  std::vector<std::vector<Rational>> rows;
  rows.emplace_back(n, Rational(1));
  for (int p : irr) {
    std::vector<Rational> r(n, 0);
    for (int y = 0; y < n; ++y) {
      if (gl.up_neighbor(y, p) >= 0) r[y] += 1;
      if (gl.down_neighbor(y, p) >= 0) r[y] -= 1;
    }
    rows.push_back(r);
  }
  auto rank = [n](std::vector<std::vector<Rational>> m) {
    int r = 0;
    for (int c = 0; c < n && r < static_cast<int>(m.size()); ++c) {
      int p = -1;
      for (int q = r; q < static_cast<int>(m.size()); ++q)
        if (sgn(m[q][c]) != 0) {
          p = q;
          break;
        }
      if (p < 0) continue;
      std::swap(m[r], m[p]);
      for (int q = r + 1; q < static_cast<int>(m.size()); ++q) {
        if (sgn(m[q][c]) == 0) continue;
        Rational f = m[q][c] / m[r][c];
        for (int x = c; x < n; ++x) m[q][x] -= f * m[r][x];
      }
      ++r;
    }
    return r;
  };
  // keep an independent set of rows, the first (mass) row included
  std::vector<std::vector<Rational>> basis;
  for (auto& r : rows) {
    basis.push_back(r);
    if (rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
  }
  const int k = static_cast<int>(basis.size());
  std::set<Rational> values;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      // floating-point screen
      std::vector<std::vector<double>> f(k, std::vector<double>(k + 1));
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) f[r][c] = basis[r][pick[c]].get_d();
        f[r][k] = r == 0 ? 1.0 : 0.0;
      }
      for (int c = 0; c < k; ++c) {
        int p = c;
        for (int r = c + 1; r < k; ++r)
          if (std::abs(f[r][c]) > std::abs(f[p][c])) p = r;
        if (std::abs(f[p][c]) < 1e-9) return;
        std::swap(f[c], f[p]);
        for (int r = 0; r < k; ++r) {
          if (r == c) continue;
          double m = f[r][c] / f[c][c];
          for (int q = c; q <= k; ++q) f[r][q] -= m * f[c][q];
        }
      }
      for (int c = 0; c < k; ++c)
        if (f[c][k] / f[c][c] < -1e-9) return;
      // exact solve of basis[:, pick] x = e_0
      std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
      for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) a[r][c] = basis[r][pick[c]];
        a[r][k] = r == 0 ? 1 : 0;
      }
      for (int c = 0; c < k; ++c) {
        int p = -1;
        for (int r = c; r < k; ++r)
          if (sgn(a[r][c]) != 0) {
            p = r;
            break;
          }
        if (p < 0) return;
        std::swap(a[c], a[p]);
        for (int r = 0; r < k; ++r) {
          if (r == c || sgn(a[r][c]) == 0) continue;
          Rational f = a[r][c] / a[c][c];
          for (int q = c; q <= k; ++q) a[r][q] -= f * a[c][q];
        }
      }
      Rational e = 0;
      for (int c = 0; c < k; ++c) {
        Rational x = a[c][k] / a[c][c];
        if (sgn(x) < 0) return;
        e += x * static_cast<long>(h.down(pick[c]).size());
      }
      values.insert(e);
      return;
    }
    for (int c = start; c <= n - (k - depth); ++c) {
      pick[depth] = c;
      rec(c + 1, depth + 1);
    }
  };
  rec(0, 0);
  return values;
}

// Classical rowmotion on order ideals of [a] x [b] (ideals = partitions inside b^a):
// the ideal generated by the minimal boxes of the complement.
inline Partition ideal_rowmotion(const Partition& nu, int a, int b) {
  std::vector<int> out(a, 0);
  for (int r = 1; r <= a; ++r) {
    int c = nu.part(r) + 1;
    bool minimal = c <= b && (r == 1 || nu.part(r - 1) >= c);
    if (!minimal) continue;
    // generate the principal ideal of (r, c)
    for (int q = 1; q <= r; ++q) out[q - 1] = std::max(out[q - 1], c);
  }
  return Partition(out);
}

// Rowmotion as the product of toggles from the top of a linear extension down.
inline Partition toggle_rowmotion(const Partition& nu, int a, int b) {
  std::vector<std::vector<char>> in(a + 2, std::vector<char>(b + 2, 0));
  for (int r = 1; r <= a; ++r)
    for (int c = 1; c <= nu.part(r); ++c) in[r][c] = 1;
  // linear extension by rank r + c; toggling in reverse order
  std::vector<std::pair<int, int>> order;
  for (int s = a + b; s >= 2; --s)
    for (int r = 1; r <= a; ++r) {
      int c = s - r;
      if (c >= 1 && c <= b) order.emplace_back(r, c);
    }
  for (auto [r, c] : order) {
    if (in[r][c]) {
      if (!in[r + 1][c] && !in[r][c + 1]) in[r][c] = 0;
    } else {
      bool below_ok = (r == 1 || in[r - 1][c]) && (c == 1 || in[r][c - 1]);
      if (below_ok) in[r][c] = 1;
    }
  }
  std::vector<int> out(a, 0);
  for (int r = 1; r <= a; ++r)
    for (int c = 1; c <= b; ++c)
      if (in[r][c]) out[r - 1] = c;
  return Partition(out);
}

}  // namespace oracle
