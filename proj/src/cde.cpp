#include "wcde/cde.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

CdeReport cde_check(const Hasse& h) {
  CdeReport r;
  Statistic dd = ddeg(h);
  r.uniform_expectation = expectation(uniform_distribution(h), dd);
  r.maxchain_expectation = expectation(maxchain_distribution(h), dd);
  r.edge_density = Rational(h.edge_count(), h.size());
  r.edge_density.canonicalize();
  r.is_cde = r.uniform_expectation == r.maxchain_expectation;
  return r;
}

CdeReport cde_check(const FiniteLattice& L) { return cde_check(L.hasse()); }

ToggleSymmetricSpace::ToggleSymmetricSpace(const GammaLabeling& gl) : n_(gl.size()), irr_(gl.irreducibles()) {
  const Hasse& h = gl.hasse();
  const int q = static_cast<int>(irr_.size()) + 1;
  std::vector<int> row_of(n_, -1);
  for (std::size_t k = 0; k < irr_.size(); ++k) row_of[irr_[k]] = static_cast<int>(k) + 1;
  std::vector<std::vector<Rational>> m(q, std::vector<Rational>(n_, 0));
  std::vector<std::vector<Rational>> e(q, std::vector<Rational>(q, 0));
  for (int r = 0; r < q; ++r) e[r][r] = 1;
  for (int y = 0; y < n_; ++y) {
    m[0][y] = 1;
    for (int k : h.up_edges(y)) m[row_of[gl.label(k)]][y] += 1;
    for (int k : h.down_edges(y)) m[row_of[gl.label(k)]][y] -= 1;
  }
  int r = 0;
  for (int col = 0; col < n_ && r < q; ++col) {
    int piv = -1;
    for (int s = r; s < q; ++s)
      if (sgn(m[s][col]) != 0) {
        piv = s;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    std::swap(e[r], e[piv]);
    Rational inv = 1 / m[r][col];
    for (auto& v : m[r])
      if (sgn(v) != 0) v *= inv;
    for (auto& v : e[r])
      if (sgn(v) != 0) v *= inv;
    for (int s = 0; s < q; ++s) {
      if (s == r || sgn(m[s][col]) == 0) continue;
      Rational f = m[s][col];
      for (int c = col; c < n_; ++c)
        if (sgn(m[r][c]) != 0) m[s][c] -= f * m[r][c];
      for (int c = 0; c < q; ++c)
        if (sgn(e[r][c]) != 0) e[s][c] -= f * e[r][c];
    }
    pivots_.push_back(col);
    ++r;
  }
  m.resize(r);
  e.resize(r);
  rows_ = std::move(m);
  combo_ = std::move(e);
  std::vector<char> is_piv(n_, 0);
  for (int c : pivots_) is_piv[c] = 1;
  for (int c = 0; c < n_; ++c)
    if (!is_piv[c]) free_.push_back(c);
}

std::vector<std::pair<int, Rational>> ToggleSymmetricSpace::null_vector(int f) const {
  std::vector<std::pair<int, Rational>> d{{f, Rational(1)}};
  for (std::size_t r = 0; r < pivots_.size(); ++r)
    if (sgn(rows_[r][f]) != 0) d.emplace_back(pivots_[r], -rows_[r][f]);
  std::sort(d.begin(), d.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return d;
}

bool ToggleSymmetricSpace::in_span(const std::vector<Rational>& f, std::vector<Rational>* coeffs,
                                   int* witness_col) const {
  for (int c : free_) {
    Rational res = f[c];
    for (std::size_t r = 0; r < pivots_.size(); ++r)
      if (sgn(rows_[r][c]) != 0) res -= f[pivots_[r]] * rows_[r][c];
    if (sgn(res) != 0) {
      if (witness_col) *witness_col = c;
      return false;
    }
  }
  if (coeffs) {
    const std::size_t q = irr_.size() + 1;
    coeffs->assign(q, 0);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational& w = f[pivots_[r]];
      if (sgn(w) == 0) continue;
      for (std::size_t s = 0; s < q; ++s)
        if (sgn(combo_[r][s]) != 0) (*coeffs)[s] += w * combo_[r][s];
    }
  }
  return true;
}

Distribution ToggleSymmetricSpace::sample(std::mt19937_64& rng) const {
  Distribution mu;
  mu.weights.assign(n_, Rational(1, n_));
  for (auto& w : mu.weights) w.canonicalize();
  if (free_.empty()) return mu;
  std::vector<Rational> d(n_, 0);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(free_.size()) - 1);
  std::uniform_int_distribution<int> num(-6, 6), den(1, 7);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    int v = 0;
    while (v == 0) v = num(rng);
    Rational coef(v, den(rng));
    coef.canonicalize();
    for (auto& [c, x] : null_vector(free_[pick(rng)])) d[c] += coef * x;
  }
  Rational most_negative = 0;
  for (const auto& x : d)
    if (x < most_negative) most_negative = x;
  if (sgn(most_negative) == 0) return mu;
  // scale so that the smallest weight stays in [0, 1/n)
  Rational t(1 + static_cast<long>(rng() % 16), 16);
  t.canonicalize();
  Rational eps = t * Rational(1, n_) / (-most_negative);
  for (int y = 0; y < n_; ++y) mu.weights[y] += eps * d[y];
  return mu;
}

TcdeResult tcde_check(const GammaLabeling& gl) {
  const Hasse& h = gl.hasse();
  ToggleSymmetricSpace space(gl);
  std::vector<Rational> dd(h.size());
  for (int y = 0; y < h.size(); ++y) dd[y] = static_cast<long>(h.down(y).size());
  TcdeResult res;
  res.density = Rational(h.edge_count(), h.size());
  res.density.canonicalize();
  std::vector<Rational> coeffs;
  int col = -1;
  if (space.in_span(dd, &coeffs, &col)) {
    TcdeCertificate cert;
    cert.constant = coeffs[0];
    for (std::size_t k = 0; k < space.irreducibles().size(); ++k)
      cert.coeffs.emplace_back(space.irreducibles()[k], coeffs[k + 1]);
    if (!verify_certificate(gl, cert)) throw std::logic_error("certificate failed pointwise verification");
    if (cert.constant != res.density) throw std::logic_error("certificate constant differs from edge density");
    res.certificate = std::move(cert);
    return res;
  }
  auto d = space.null_vector(col);
  Rational most_negative = 0;
  for (const auto& [c, x] : d)
    if (x < most_negative) most_negative = x;
  Distribution mu = uniform_distribution(h);
  Rational eps = Rational(1, h.size()) / (-most_negative);
  for (const auto& [c, x] : d) mu.weights[c] += eps * x;
  res.witness_expectation = expectation(mu, ddeg(h));
  if (!mu.valid() || !is_toggle_symmetric(mu, gl) || res.witness_expectation == res.density)
    throw std::logic_error("witness construction failed");
  res.witness = std::move(mu);
  return res;
}

TcdeResult tcde_check(const FiniteLattice& L) { return tcde_check(gamma_labeling(L)); }

bool verify_certificate(const GammaLabeling& gl, const TcdeCertificate& cert) {
  const Hasse& h = gl.hasse();
  std::vector<Rational> a(gl.size(), 0);
  for (const auto& [p, v] : cert.coeffs) a[p] = v;
  for (int y = 0; y < h.size(); ++y) {
    Rational val = cert.constant;
    for (int k : h.up_edges(y)) val += a[gl.label(k)];
    for (int k : h.down_edges(y)) val -= a[gl.label(k)];
    if (val != static_cast<long>(h.down(y).size())) return false;
  }
  return true;
}

McdeReport mcde_scan(const Hasse& h, int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be nonnegative");
  McdeReport r;
  Statistic dd = ddeg(h);
  for (int m = 0; m <= m_max; ++m) {
    r.values.push_back(expectation(multichain_distribution(h, m), dd));
    if (!r.first_difference && r.values.back() != r.values.front()) r.first_difference = m;
  }
  return r;
}

HomomesyReport homomesy_check(const GammaLabeling& gl, const Statistic& f) {
  if (static_cast<int>(f.size()) != gl.size()) throw DimensionMismatch("statistic size");
  Rowmotion row(gl);
  HomomesyReport rep;
  for (const auto& orb : row.orbits()) {
    Rational s = 0;
    for (int y : orb) s += f[y];
    OrbitAverage oa{orb.front(), static_cast<int>(orb.size()), s / static_cast<long>(orb.size())};
    oa.average.canonicalize();
    rep.orbits.push_back(std::move(oa));
  }
  rep.homomesic = std::all_of(rep.orbits.begin(), rep.orbits.end(),
                              [&](const OrbitAverage& o) { return o.average == rep.orbits.front().average; });
  return rep;
}

Statistic refined_statistic(const WeakInterval& full, int k) {
  const int n = full.n();
  if (k < 1 || k >= n) throw KOutOfRange(std::to_string(k));
  if (full.top() != Permutation::longest(n)) throw std::invalid_argument("refined statistics live on the full weak order");
  Statistic f(full.size());
  for (int j = 1; j <= k; ++j) f += aggregated_toggleability(full, {j, k + 1}).minus;
  for (int j = k + 1; j <= n; ++j) f += aggregated_toggleability(full, {k, j}).minus;
  return f;
}

Statistic refined_statistic(int n, int k) {
  if (k < 1 || k >= n) throw KOutOfRange(std::to_string(k));
  return refined_statistic(WeakInterval::build(Permutation::longest(n)), k);
}

RefinedReport verify_refined(int n) {
  RefinedReport rep;
  rep.n = n;
  WeakInterval full = WeakInterval::build(Permutation::longest(n));
  GammaLabeling gl = full.gamma_labeling();
  Rowmotion row(gl);
  Distribution uni = uniform_distribution(full.hasse());
  Statistic sum(full.size());
  auto fail = [&](const std::string& m) {
    rep.ok = false;
    rep.failures.push_back(m);
  };
  for (int k = 1; k < n; ++k) {
    Statistic f = refined_statistic(full, k);
    sum += f;
    if (expectation(uni, f) != 1) fail("E(uniform; f_" + std::to_string(k) + ") != 1");
    for (const auto& orb : row.orbits()) {
      if (expectation(orbit_uniform(full.size(), orb), f) != 1)
        fail("orbit average of f_" + std::to_string(k) + " != 1");
      int lhs = 0, rhs = 0;
      for (int x : orb) {
        const Permutation& w = full.element(x);
        Permutation winv = w.inverse();
        auto at = [&](int p) { return p == 0 ? 0 : p == n + 1 ? n + 1 : w(p); };
        if (at(winv(k) - 1) > k) ++lhs;
        if (at(winv(k + 1) + 1) > k + 1) ++rhs;
      }
      if (lhs != rhs) fail("set-counting identity fails for k=" + std::to_string(k));
    }
  }
  if (sum != Rational(2) * ddeg(full.hasse())) fail("sum of f_k != 2 ddeg");
  return rep;
}

std::optional<SkewMatch> connected_balanced_match(const Permutation& w) {
  Diagram d = rothe_diagram(w);
  if (d.empty() || connected_components(d).size() != 1) return std::nullopt;
  auto m = match_skew_shape(d);
  if (!m || !is_balanced(m->shape)) return std::nullopt;
  return m;
}

std::optional<TheoremRecord> theorem_instance(const Permutation& w) {
  auto m = connected_balanced_match(w);
  if (!m) return std::nullopt;
  TheoremRecord rec;
  rec.w = w;
  rec.shape = m->shape;
  rec.a = m->shape.height();
  rec.b = m->shape.width();
  WeakInterval iv = WeakInterval::build(w);
  rec.elements = iv.size();
  rec.edges = iv.hasse().edge_count();
  CdeReport c = cde_check(iv.hasse());
  rec.density = c.edge_density;
  rec.cde = c.is_cde;
  TcdeResult t = tcde_check(iv.gamma_labeling());
  rec.tcde = t.is_tcde();
  if (rec.tcde) rec.tcde_constant = t.certificate->constant;
  Rational expected(rec.a * rec.b, rec.a + rec.b);
  expected.canonicalize();
  rec.ok = rec.tcde && rec.tcde_constant == expected && rec.cde && rec.density == expected;
  return rec;
}

namespace {

TheoremReport assemble(int n, std::vector<std::optional<TheoremRecord>>& slots) {
  TheoremReport rep;
  rep.n = n;
  rep.permutations = slots.size();
  for (auto& s : slots) {
    if (!s) continue;
    if (!s->ok) rep.violations.push_back(s->w.str());
    rep.records.push_back(std::move(*s));
  }
  return rep;
}

}  // namespace

TheoremReport verify_main_theorem_serial(int n) {
  std::vector<std::optional<TheoremRecord>> slots;
  for (const Permutation& w : all_permutations(n)) slots.push_back(theorem_instance(w));
  return assemble(n, slots);
}

TheoremReport verify_main_theorem(int n) {
  const auto total = static_cast<long long>(factorial(n));
  std::vector<std::optional<TheoremRecord>> slots(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < total; ++k)
    slots[static_cast<std::size_t>(k)] = theorem_instance(Permutation::unrank(n, static_cast<std::uint64_t>(k)));
  return assemble(n, slots);
}

}  // namespace wcde
