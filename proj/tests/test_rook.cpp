#include <doctest.h>

#include <random>

#include "wcde/cde.hpp"
#include "wcde/errors.hpp"
#include "wcde/rook.hpp"

using namespace wcde;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

GrassLabel G(int i, int j, std::vector<int> x = {}) { return GrassLabel{i, j, std::move(x)}; }

const char* kW = "10 7 3 1 8 5 6 11 9 4 2";

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("rectangle rook examples") {
  std::vector<RectTerm> t;
  CHECK(rect_rook_eval(1, 1, {1, 1}, Partition(), &t) == 1);
  CHECK(t == std::vector<RectTerm>{{1, true, {1, 1}}});

  CHECK(rect_rook_eval(5, 6, {3, 4}, Partition({4, 2, 1, 1}), &t) == 1);
  std::vector<int> signs;
  for (const auto& x : t) signs.push_back(x.sign);
  CHECK(sorted(signs) == std::vector<int>{-1, 1, 1});

  CHECK(rect_rook_eval(5, 6, {2, 3}, Partition({5, 4, 3}), &t) == 1);
  signs.clear();
  for (const auto& x : t) signs.push_back(x.sign);
  CHECK(sorted(signs) == std::vector<int>{-1, 1, 1});

  CHECK_THROWS_AS(rect_rook_eval(2, 2, {3, 1}, Partition()), AnchorOutOfRange);
  CHECK_THROWS_AS(rect_rook_eval(2, 2, {1, 1}, Partition({3})), PartitionTooBig);
  CHECK_THROWS_AS(rect_rook_eval(2, 2, {1, 1}, Partition({1, 1, 1})), PartitionTooBig);
}

TEST_CASE("rectangle rooks are identically one") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
          Statistic s = rect_rook_statistic(a, b, {i, j});
          CHECK(s == Statistic::constant(s.size(), 1));
        }
}

TEST_CASE("box_k and the rectangle decomposition") {
  Permutation w = P(kW);
  BoxSquare bs = box_square_k(w, {5, 8});
  CHECK(bs.k == 6);
  for (Box b : std::vector<Box>{{5, 7}, {5, 8}, {6, 7}, {6, 8}})
    CHECK(std::find(bs.cross.begin(), bs.cross.end(), b) != bs.cross.end());
  for (const Box& b : bs.cross) {
    CHECK(b.row <= 6);
    CHECK(b.col >= 7);
  }
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) CHECK(box_square_k(Permutation::longest(n), {k, k + 1}).k == k);
  CHECK(box_square_k(P("21"), {1, 2}).k == 1);
  CHECK_THROWS_AS(box_square_k(P("321"), {1, 3}), NotCrossSaturated);

  CHECK(rect_decomposition(w, 6).nu == Partition({6, 6, 4, 2, 2}));
  RectDecomposition d1 = rect_decomposition(P("3 1 10 5 2 7 6 8 9 4 11"), 6);
  CHECK(d1.nu == Partition({4, 2, 1, 1}));
  CHECK(d1.rect_box({5, 8}) == Box{3, 4});
  RectDecomposition d2 = rect_decomposition(P("1 7 3 8 2 10 5 4 6 11 9"), 6);
  CHECK(d2.nu == Partition({5, 4, 3}));
  CHECK(d2.rect_box({5, 8}) == Box{2, 3});
  for (int k = 1; k < 5; ++k) {
    RectDecomposition e = rect_decomposition(Permutation::identity(5), k);
    CHECK(e.nu.empty());
    CHECK(e.u.is_identity());
    CHECK(e.v.is_identity());
    CHECK(e.s.empty());
  }
  CHECK_THROWS_AS(rect_decomposition(Permutation::identity(4), 0), KOutOfRange);
  CHECK_THROWS_AS(rect_decomposition(Permutation::identity(4), 4), KOutOfRange);
}

TEST_CASE("toggle correspondence between box_k and the rectangle") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& w : all_permutations(n))
      for (int k = 1; k < n; ++k) CHECK(validate_toggle_correspondence(w, k) == "");
}

TEST_CASE("permutation rook coefficients") {
  const Box a{3, 6};
  CHECK(perm_rook_coefficient(a, G(4, 5)) == std::pair{1, -1});
  CHECK(perm_rook_coefficient(a, G(3, 5)) == std::pair{1, 0});
  CHECK(perm_rook_coefficient(a, G(4, 6)) == std::pair{1, 0});
  CHECK(perm_rook_coefficient(a, G(3, 6)) == std::pair{1, 1});
  CHECK(perm_rook_coefficient(a, G(1, 5, {3})) == std::pair{1, -1});
  CHECK(perm_rook_coefficient(a, G(1, 5)) == std::pair{0, 0});
  CHECK(perm_rook_coefficient(a, G(4, 8)) == std::pair{1, -1});
  CHECK(perm_rook_coefficient(a, G(4, 8, {6})) == std::pair{0, 0});
  CHECK(perm_rook_coefficient(a, G(3, 8, {6})) == std::pair{0, 1});
  CHECK(perm_rook_coefficient(a, G(3, 8)) == std::pair{1, 0});
  CHECK(perm_rook_coefficient(a, G(1, 6)) == std::pair{0, 1});
  CHECK(perm_rook_coefficient(a, G(1, 6, {3})) == std::pair{1, 0});
  CHECK(perm_rook_coefficient(a, G(1, 8, {3})) == std::pair{1, -1});
  CHECK(perm_rook_coefficient(a, G(1, 8, {6})) == std::pair{-1, 1});
  CHECK(perm_rook_coefficient(a, G(1, 8, {3, 6})) == std::pair{0, 0});
  CHECK(perm_rook_coefficient(a, G(1, 8)) == std::pair{0, 0});
}

TEST_CASE("permutation rook worked examples") {
  Permutation w = P(kW);
  std::vector<PermTerm> t;
  CHECK(perm_rook_eval(w, {5, 8}, P("3 1 10 5 2 7 6 8 9 4 11"), &t, true) == 1);
  CHECK(sorted(t) == sorted(std::vector<PermTerm>{{1, true, G(2, 7, {3, 5})},
                                                  {1, true, G(6, 8, {7})},
                                                  {-1, false, G(6, 7)}}));
  CHECK(perm_rook_eval(w, {5, 8}, P("1 7 3 8 2 10 5 4 6 11 9"), &t, true) == 1);
  CHECK(sorted(t) == sorted(std::vector<PermTerm>{{-1, true, G(2, 10, {3, 7, 8})},
                                                  {1, false, G(2, 8, {3, 7})},
                                                  {1, false, G(5, 10, {7, 8})}}));
  // at the identity only the addable pair (k,k+1) contributes
  CHECK(perm_rook_eval(w, {5, 8}, Permutation::identity(11), &t, true) == 1);
  CHECK(t == std::vector<PermTerm>{{1, true, G(6, 7)}});
  CHECK(to_string(t[0]) == "+T+g((6,7),{})");

  CHECK_THROWS_AS(perm_rook_eval(w, {1, 2}, Permutation::identity(11)), NotCrossSaturated);
  CHECK_THROWS_AS(perm_rook_eval(P("321"), {1, 3}, Permutation::identity(3)), NotCrossSaturated);
  CHECK_THROWS_AS(perm_rook_eval(P("321"), {1, 2}, P("1234")), NotInInterval);
  CHECK_THROWS_AS(perm_rook_eval(P("231"), {1, 3}, P("312")), NotInInterval);
}

TEST_CASE("permutation rooks are identically one") {
  for (int n = 2; n <= 5; ++n) {
    RookCensus par = verify_perm_rooks(n, true);
    RookCensus ser = verify_perm_rooks_serial(n, true);
    CHECK(par == ser);
    CHECK(par.failures.empty());
    CHECK(par.permutations == factorial(n));
  }
  CHECK(verify_perm_rooks(5).anchors == 408);
  CHECK(verify_perm_rooks_for(P(kW), false).failures.empty());
  // the statistic form agrees with pointwise evaluation
  for (const char* s : {"31542", "53124", "4321", "35142"}) {
    WeakInterval iv = WeakInterval::build(P(s));
    for (const Box& b : cross_saturated_boxes(iv.top())) {
      Statistic st = perm_rook_statistic(iv, b);
      CHECK(st == Statistic::constant(iv.size(), 1));
      GammaLabeling gl = iv.gamma_labeling();
      Statistic rebuilt(iv.size());
      for (auto [p, c] : perm_rook_map(iv, b))
        rebuilt += Rational(c.first) * toggle_plus(gl, p) + Rational(c.second) * toggle_minus(gl, p);
      CHECK(rebuilt == st);
    }
  }
}

TEST_CASE("certificates") {
  struct Row {
    const char* w;
    long ab;
    Rational density;
  };
  for (const Row& r : {Row{"31542", 9, make_rational(3, 2)}, Row{"53124", 8, make_rational(4, 3)},
                       Row{"4321", 9, make_rational(3, 2)}}) {
    CertificateReport c = theorem_certificate(P(r.w), 3);
    CHECK(c.constant == r.ab);
    CHECK(c.density == r.density);
    CHECK(c.distributions_checked > 8);
    long rows = 0;
    for (auto [box, v] : c.coefficients) rows += v;
    CHECK(rows == r.ab);
  }
  CHECK_THROWS_AS(theorem_certificate(P("21435")), NotBalancedShape);
  CHECK_THROWS_AS(theorem_certificate(P("246153")), NotBalancedShape);
  CHECK_THROWS_AS(theorem_certificate(Permutation::identity(3)), NotBalancedShape);
  // every balanced connected instance in S_5 has a certificate
  for (const auto& w : all_permutations(5))
    if (connected_balanced_match(w)) CHECK_NOTHROW(theorem_certificate(w));
}

TEST_CASE("refined statistics and the (k,k+1) rook") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    WeakInterval full = WeakInterval::build(Permutation::longest(n));
    GammaLabeling gl = full.gamma_labeling();
    ToggleSymmetricSpace sp(gl);
    std::vector<Distribution> mus{uniform_distribution(full.hasse())};
    for (int t = 0; t < 5; ++t) mus.push_back(sp.sample(rng));
    for (int k = 1; k < n; ++k) {
      Statistic f = refined_statistic(full, k);
      Statistic r = perm_rook_statistic(full, {k, k + 1});
      for (const auto& mu : mus) {
        CHECK(expectation(mu, f) == 1);
        CHECK(expectation(mu, r) == expectation(mu, f));
      }
    }
  }
}
