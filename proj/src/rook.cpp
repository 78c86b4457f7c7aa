#include "wcde/rook.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

namespace {

std::string box_str(Box b) { return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")"; }

bool addable(const Partition& nu, int a, int b, Box x) {
  if (x.row < 1 || x.row > a || x.col < 1 || x.col > b) return false;
  return x.col == nu.part(x.row) + 1 && (x.row == 1 || nu.part(x.row - 1) >= x.col);
}

bool removable(const Partition& nu, Box x) {
  return x.col >= 1 && x.col == nu.part(x.row) && nu.part(x.row + 1) < x.col;
}

}  // namespace

std::string to_string(const RectTerm& t) {
  return std::string(t.sign > 0 ? "+" : "-") + (t.plus ? "T+" : "T-") + box_str(t.box);
}

std::string to_string(const PermTerm& t) {
  return std::string(t.sign > 0 ? "+" : "-") + (t.plus ? "T+" : "T-") + t.label.str();
}

int rect_rook_eval(int a, int b, Box anchor, const Partition& nu, std::vector<RectTerm>* terms) {
  if (anchor.row < 1 || anchor.row > a || anchor.col < 1 || anchor.col > b)
    throw AnchorOutOfRange(box_str(anchor));
  if (nu.length() > a || nu.part(1) > b) throw PartitionTooBig(nu.str());
  const int i = anchor.row, j = anchor.col;
  int total = 0;
  std::vector<RectTerm> out;
  for (int r = 1; r <= a; ++r) {
    Box add{r, nu.part(r) + 1};
    if (addable(nu, a, b, add)) {
      int c = (add.row <= i && add.col <= j) - (add.row > i && add.col > j);
      if (c) out.push_back({c, true, add});
    }
    Box rem{r, nu.part(r)};
    if (removable(nu, rem)) {
      int c = (rem.row >= i && rem.col >= j) - (rem.row < i && rem.col < j);
      if (c) out.push_back({c, false, rem});
    }
  }
  for (const auto& t : out) total += t.sign;
  if (terms) *terms = std::move(out);
  return total;
}

Statistic rect_rook_statistic(int a, int b, Box anchor) {
  auto parts = young_interval_partitions(rectangle(a, b));
  Statistic s(parts.size());
  for (std::size_t x = 0; x < parts.size(); ++x) s[x] = rect_rook_eval(a, b, anchor, parts[x]);
  return s;
}

RootPair RectDecomposition::pi(RootPair p) const {
  std::vector<int> uinv(k + 1), vinv(n - k + 1);
  for (int q = 1; q <= k; ++q) uinv[u(q)] = q;
  for (int q = 1; q <= n - k; ++q) vinv[v(q)] = q;
  return {uinv[p.i], k + vinv[p.j - k]};
}

RectDecomposition rect_decomposition(const Permutation& w_prime, int k) {
  const int n = w_prime.size();
  if (k < 1 || k >= n) throw KOutOfRange(std::to_string(k));
  RectDecomposition d;
  d.n = n;
  d.k = k;
  std::vector<int> small, large;
  for (int x : w_prime.word()) (x <= k ? small : large).push_back(x <= k ? x : x - k);
  d.u = Permutation(small);
  d.v = Permutation(large);
  std::vector<int> uinv(k + 1), vinv(n - k + 1);
  for (int q = 1; q <= k; ++q) uinv[d.u(q)] = q;
  for (int q = 1; q <= n - k; ++q) vinv[d.v(q)] = q;
  std::vector<int> rows(n - k + 1, 0);
  for (const RootPair& p : inversion_set(w_prime, Side::inverse).pairs()) {
    if (p.i > k || p.j <= k) continue;
    RootPair q{uinv[p.i], k + vinv[p.j - k]};
    d.s.push_back(q);
    ++rows[q.j - k];
  }
  std::sort(d.s.begin(), d.s.end());
  d.nu = Partition(std::vector<int>(rows.begin() + 1, rows.end()));
  for (const RootPair& q : d.s) {
    Box x = d.psi(q);
    if (x.col > d.nu.part(x.row)) throw std::logic_error("rotated set is not a partition");
  }
  return d;
}

std::string validate_toggle_correspondence(const Permutation& w_prime, int k) {
  const int n = w_prime.size();
  RectDecomposition d = rect_decomposition(w_prime, k);
  InversionSet inv = inversion_set(w_prime, Side::inverse);
  std::vector<int> uv = d.u.word();
  for (int x : d.v.word()) uv.push_back(x + k);
  InversionSet outside = inversion_set(Permutation(uv), Side::inverse);
  for (const RootPair& p : inv.pairs())
    if ((p.i > k || p.j <= k) != outside.contains(p.i, p.j)) return "complement of box_k differs from Inv^{-1}((u,v))";
  for (const RootPair& p : outside.pairs())
    if (!inv.contains(p.i, p.j)) return "complement of box_k differs from Inv^{-1}((u,v))";
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) {
      Box x = d.rect_box({i, j});
      bool perm_ok, rect_ok;
      if (!inv.contains(i, j)) {
        perm_ok = is_valid_inversion_set(inv.with(i, j));
        rect_ok = addable(d.nu, n - k, k, x);
      } else {
        perm_ok = is_valid_inversion_set(inv.without(i, j));
        rect_ok = removable(d.nu, x);
      }
      if (perm_ok != rect_ok)
        return "toggle mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ") for " + w_prime.str();
    }
  return {};
}

std::pair<int, int> perm_rook_coefficient(Box anchor, const GrassLabel& g) {
  const int i = anchor.row, j = anchor.col;
  const bool ix = g.contains(i), jx = g.contains(j);
  if (g.i > i && g.j < j) return {1, -1};
  if (g.i == i && g.j < j) return {1, 0};
  if (g.i > i && g.j == j) return {1, 0};
  if (g.i == i && g.j == j) return {1, 1};
  if (g.i < i && g.j < j) return ix ? std::pair{1, -1} : std::pair{0, 0};
  if (g.i > i && g.j > j) return !jx ? std::pair{1, -1} : std::pair{0, 0};
  if (g.i == i && g.j > j) return jx ? std::pair{0, 1} : std::pair{1, 0};
  if (g.i < i && g.j == j) return !ix ? std::pair{0, 1} : std::pair{1, 0};
  if (ix && !jx) return {1, -1};
  if (!ix && jx) return {-1, 1};
  return {0, 0};
}

PermRookContext::PermRookContext(const Permutation& w, Box anchor) : w_(w), anchor_(anchor) {
  const int n = w.size();
  InversionSet inv = inversion_set(w, Side::inverse);
  mask_ = inv.mask();
  if (anchor.row < 1 || anchor.col > n || anchor.row >= anchor.col || !inv.contains(anchor.row, anchor.col))
    throw NotCrossSaturated(box_str(anchor) + " is not in Inv^{-1}(" + w.str() + ")");
  auto c = cross_saturation(to_diagram(inv), anchor);
  if (!c) throw NotCrossSaturated(box_str(anchor) + " in Inv^{-1}(" + w.str() + ")");
  cross_ = std::move(*c);
  int found = 0;
  for (const Box& b : cross_) {
    cross_mask_ |= std::uint64_t{1} << pair_index(b.row, b.col, n);
    if (b.col == b.row + 1) {
      k_ = b.row;
      ++found;
    }
  }
  if (found != 1) throw std::logic_error("cross-saturation meets the first subdiagonal " + std::to_string(found) + " times");
  for (const Box& b : cross_)
    if (b.row > k_ || b.col <= k_) throw std::logic_error("cross-saturation leaves box_k");
  for (int r = anchor.row; r <= k_; ++r)
    for (int s = k_ + 1; s <= anchor.col; ++s)
      if (!in_cross(r, s)) throw std::logic_error("cross-saturation misses the anchor rectangle");
}

bool PermRookContext::in_cross(int i, int j) const {
  return (cross_mask_ >> pair_index(i, j, w_.size())) & 1;
}

int PermRookContext::eval(const Permutation& w_prime, std::vector<PermTerm>* terms, bool check) const {
  const int n = w_.size();
  if (w_prime.size() != n) throw NotInInterval(w_prime.str());
  const std::uint64_t m = inverse_mask(w_prime);
  if (m & ~mask_) throw NotInInterval(w_prime.str() + " is not below " + w_.str());
  std::vector<PermTerm> out;
  for (int p = 1; p < n; ++p) {
    const int x = w_prime(p), y = w_prime(p + 1);
    if (x < y) {
      if (!((mask_ >> pair_index(x, y, n)) & 1) || !in_cross(x, y)) continue;
      GrassLabel g = cover_label(w_prime.swap_positions(p), p);
      int c = perm_rook_coefficient(anchor_, g).first;
      if (c) out.push_back({c, true, std::move(g)});
    } else {
      if (!in_cross(y, x)) continue;
      GrassLabel g = cover_label(w_prime, p);
      int c = perm_rook_coefficient(anchor_, g).second;
      if (c) out.push_back({c, false, std::move(g)});
    }
  }
  int total = 0;
  for (const auto& t : out) total += t.sign;
  if (check) {
    RectDecomposition d = rect_decomposition(w_prime, k_);
    std::vector<RectTerm> rect, mapped;
    rect_rook_eval(n - k_, k_, d.rect_box({anchor_.row, anchor_.col}), d.nu, &rect);
    for (const auto& t : out) mapped.push_back({t.sign, t.plus, d.rect_box({t.label.i, t.label.j})});
    std::sort(rect.begin(), rect.end());
    std::sort(mapped.begin(), mapped.end());
    if (rect != mapped)
      throw std::logic_error("rook terms do not match the rectangle rook at " + w_prime.str());
  }
  if (total != 1)
    throw std::logic_error("rook " + box_str(anchor_) + " of " + w_.str() + " evaluates to " +
                           std::to_string(total) + " at " + w_prime.str());
  if (terms) *terms = std::move(out);
  return total;
}

BoxSquare box_square_k(const Permutation& w, Box anchor) {
  PermRookContext ctx(w, anchor);
  return {ctx.k(), ctx.cross()};
}

int perm_rook_eval(const Permutation& w, Box anchor, const Permutation& w_prime, std::vector<PermTerm>* terms,
                   bool check) {
  return PermRookContext(w, anchor).eval(w_prime, terms, check);
}

std::map<int, std::pair<int, int>> perm_rook_map(const WeakInterval& iv, Box anchor) {
  PermRookContext ctx(iv.top(), anchor);
  std::map<int, std::pair<int, int>> out;
  for (int e = 0; e < iv.hasse().edge_count(); ++e) {
    const GrassLabel& g = iv.edge_label(e);
    if (!ctx.in_cross(g.i, g.j)) continue;
    auto c = perm_rook_coefficient(anchor, g);
    if (c.first || c.second) out[iv.index_of(g.perm(iv.n()))] = c;
  }
  return out;
}

Statistic perm_rook_statistic(const WeakInterval& iv, Box anchor) {
  PermRookContext ctx(iv.top(), anchor);
  Statistic s(iv.size());
  for (int e = 0; e < iv.hasse().edge_count(); ++e) {
    const GrassLabel& g = iv.edge_label(e);
    if (!ctx.in_cross(g.i, g.j)) continue;
    auto [cp, cm] = perm_rook_coefficient(anchor, g);
    const Edge& ed = iv.hasse().edges()[e];
    s[ed.lo] += cp;
    s[ed.hi] += cm;
  }
  return s;
}

std::vector<Box> cross_saturated_boxes(const Permutation& w) {
  InversionSet inv = inversion_set(w, Side::inverse);
  Diagram d = to_diagram(inv);
  std::vector<Box> out;
  for (const Box& b : d.boxes())
    if (cross_saturation(d, b)) out.push_back(b);
  return out;
}

CertificateReport theorem_certificate(const Permutation& w, std::uint64_t seed) {
  InversionSet inv = inversion_set(w, Side::inverse);
  Diagram d = to_diagram(inv);
  if (d.empty() || connected_components(d).size() != 1) throw NotBalancedShape(w.str());
  auto m = match_skew_shape(d);
  if (!m || !is_balanced(m->shape)) throw NotBalancedShape(w.str());
  CertificateReport rep;
  rep.w = w;
  rep.shape = m->shape;
  rep.a = m->shape.height();
  rep.b = m->shape.width();
  rep.constant = static_cast<long>(rep.a) * rep.b;
  rep.coefficients = transport(balanced_rook_coefficients(m->shape), *m);

  WeakInterval iv = WeakInterval::build(w);
  GammaLabeling gl = iv.gamma_labeling();
  const Hasse& h = iv.hasse();
  rep.density = Rational(h.edge_count(), h.size());
  rep.density.canonicalize();
  Rational expected(rep.constant, rep.a + rep.b);
  expected.canonicalize();
  if (rep.density != expected) throw CoefficientMismatch("edge density " + to_string(rep.density));

  std::map<Box, Statistic> rooks;
  Statistic f(iv.size());
  for (const auto& [box, c] : rep.coefficients) {
    if (c == 0) continue;
    Statistic r = perm_rook_statistic(iv, box);
    for (int y = 0; y < iv.size(); ++y)
      if (r[y] != 1) throw CoefficientMismatch("rook " + box_str(box) + " is not identically 1");
    f += Rational(c) * r;
    rooks.emplace(box, std::move(r));
  }
  for (int y = 0; y < iv.size(); ++y)
    if (f[y] != rep.constant) throw CoefficientMismatch("f is not constant at " + iv.element(y).str());

  std::map<Box, Statistic> tminus;
  for (const Box& b : d.boxes()) tminus.emplace(b, aggregated_toggleability(iv, {b.row, b.col}).minus);
  Statistic dd = ddeg(h);

  std::vector<Distribution> mus{uniform_distribution(h)};
  Rowmotion row(gl);
  for (const auto& orb : row.orbits()) mus.push_back(orbit_uniform(iv.size(), orb));
  ToggleSymmetricSpace space(gl);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 8; ++t) mus.push_back(space.sample(rng));

  for (const Distribution& mu : mus) {
    if (!mu.valid() || !is_toggle_symmetric(mu, gl)) throw CoefficientMismatch("distribution is not toggle-symmetric");
    if (expectation(mu, f) != Rational(rep.a + rep.b) * expectation(mu, dd))
      throw CoefficientMismatch("E(f) != (a+b) E(ddeg)");
    for (const auto& [box, r] : rooks) {
      Rational attack = 0;
      for (const auto& [b2, t] : tminus)
        if (b2.row == box.row || b2.col == box.col) attack += expectation(mu, t);
      attack += expectation(mu, tminus.at(box));
      if (expectation(mu, r) != attack) throw CoefficientMismatch("attack identity fails for " + box_str(box));
    }
    ++rep.distributions_checked;
  }
  return rep;
}

RookCensus verify_perm_rooks_for(const Permutation& w, bool check_matching) {
  RookCensus rc;
  rc.n = w.size();
  rc.permutations = 1;
  auto anchors = cross_saturated_boxes(w);
  if (anchors.empty()) return rc;
  WeakInterval iv = WeakInterval::build(w);
  for (const Box& b : anchors) {
    ++rc.anchors;
    PermRookContext ctx(w, b);
    for (const Permutation& u : iv.elements()) {
      ++rc.evaluations;
      try {
        ctx.eval(u, nullptr, check_matching);
      } catch (const std::logic_error& e) {
        rc.failures.push_back(e.what());
      }
    }
  }
  return rc;
}

namespace {

void merge(RookCensus& into, const RookCensus& part) {
  into.permutations += part.permutations;
  into.anchors += part.anchors;
  into.evaluations += part.evaluations;
  into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
}

}  // namespace

RookCensus verify_perm_rooks_serial(int n, bool check_matching) {
  RookCensus rc;
  rc.n = n;
  for (const Permutation& w : all_permutations(n)) merge(rc, verify_perm_rooks_for(w, check_matching));
  return rc;
}

RookCensus verify_perm_rooks(int n, bool check_matching) {
  const auto total = static_cast<long long>(factorial(n));
  std::vector<RookCensus> parts(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 4)
  for (long long k = 0; k < total; ++k)
    parts[static_cast<std::size_t>(k)] =
        verify_perm_rooks_for(Permutation::unrank(n, static_cast<std::uint64_t>(k)), check_matching);
  RookCensus rc;
  rc.n = n;
  for (const auto& p : parts) merge(rc, p);
  return rc;
}

}  // namespace wcde
