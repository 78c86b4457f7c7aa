#include <doctest.h>

#include <set>

#include "wcde/errors.hpp"
#include "wcde/perm.hpp"
#include "wcde/weakinterval.hpp"

using namespace wcde;

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("31542").word() == std::vector<int>{3, 1, 5, 4, 2});
  CHECK(Permutation::parse("3 1 5 4 2") == Permutation::parse("31542"));
  Permutation w = Permutation::parse("10 7 3 1 8 5 6 11 9 4 2");
  CHECK(w.size() == 11);
  CHECK(w.str() == "10 7 3 1 8 5 6 11 9 4 2");
  CHECK(Permutation::parse("31542").str() == "31542");
  CHECK_THROWS_AS(Permutation::parse("31x42"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("3152"), ParseError);
  CHECK_THROWS_AS(Permutation::parse("1 1 2"), ParseError);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 2}), std::invalid_argument);
}

TEST_CASE("basic operations") {
  Permutation w = Permutation::parse("31542");
  CHECK(w.inverse() == Permutation::parse("25143"));
  CHECK(w.compose(w.inverse()).is_identity());
  CHECK(w.length() == 5);
  CHECK(w.descents() == std::vector<int>{1, 3, 4});
  CHECK(w.swap_positions(1) == Permutation::parse("13542"));
  CHECK(w.swap_values(1, 3) == Permutation::parse("13542"));
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(Permutation::longest(4).reverse_complement() == Permutation::longest(4));
  CHECK(w.reverse_complement() == Permutation::parse("42153"));
  CHECK(Permutation::parse("21345").strip_fixed_points() == Permutation::parse("21"));
}

TEST_CASE("unrank enumerates lexicographically") {
  auto all = all_permutations(5);
  REQUIRE(all.size() == 120);
  for (std::size_t k = 0; k < all.size(); ++k) CHECK(Permutation::unrank(5, k) == all[k]);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(factorial(6) == 720);
}

TEST_CASE("pair index round trip") {
  for (int n = 2; n <= kMaxMaskN; ++n) {
    int k = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(pair_index(i, j, n) == k);
        CHECK(pair_at(k, n) == RootPair{i, j});
        ++k;
      }
  }
}

TEST_CASE("inverse inversions: b appears before a") {
  Permutation w = Permutation::parse("31542");
  InversionSet inv = inversion_set(w, Side::inverse);
  std::set<std::pair<int, int>> got;
  for (auto p : inv.pairs()) got.insert({p.i, p.j});
  std::set<std::pair<int, int>> want{{1, 3}, {2, 3}, {2, 4}, {2, 5}, {4, 5}};
  CHECK(got == want);
  CHECK(inversion_set(w, Side::inverse) == inversion_set(w.inverse(), Side::direct));
  CHECK(inv.size() == w.length());
}

TEST_CASE("inversion sets characterize permutations") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> masks;
    for (const auto& w : all_permutations(n)) {
      InversionSet s = inversion_set(w, Side::inverse);
      CHECK(is_valid_inversion_set(s));
      CHECK(permutation_from_inversions(inversion_set(w, Side::direct)) == w);
      masks.insert(s.mask());
    }
    // exactly n! of the 2^(n choose 2) subsets are inversion sets
    std::size_t valid = 0;
    const int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      bool ok = is_valid_inversion_set(InversionSet(n, mask));
      valid += ok;
      CHECK(ok == (masks.count(mask) == 1));
    }
    CHECK(valid == factorial(n));
  }
  Triple t{};
  InversionSet bad = InversionSet::from_pairs(3, {{1, 3}});
  CHECK_FALSE(is_valid_inversion_set(bad, &t));
  CHECK(t.a == 1);
  CHECK(t.b == 2);
  CHECK(t.c == 3);
  CHECK_THROWS_AS(permutation_from_inversions(bad), InvalidInversionSet);
}

TEST_CASE("inversion round trip up to n = 7") {
  for (int n = 6; n <= 7; ++n)
    for (const auto& w : all_permutations(n)) {
      InversionSet s = inversion_set(w, Side::direct);
      REQUIRE(is_valid_inversion_set(s));
      CHECK(permutation_from_inversions(s) == w);
    }
}

TEST_CASE("weak order covers and comparisons") {
  Permutation w = Permutation::parse("321");
  auto downs = weak_covers(w, CoverDirection::down);
  CHECK(downs.size() == 2);
  CHECK(weak_covers(Permutation::identity(3), CoverDirection::up).size() == 2);
  auto all = all_permutations(4);
  for (const auto& u : all)
    for (const auto& v : all) {
      bool sub = inversion_set(u, Side::inverse).subset_of(inversion_set(v, Side::inverse));
      CHECK(weak_leq(u, v) == sub);
    }
  // reachability through down covers agrees with the inversion-set order
  for (const auto& v : all) {
    std::set<Permutation> reach{v};
    std::vector<Permutation> stack{v};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (const auto& y : weak_covers(x, CoverDirection::down))
        if (reach.insert(y).second) stack.push_back(y);
    }
    for (const auto& u : all) CHECK((reach.count(u) == 1) == weak_leq(u, v));
  }
}

TEST_CASE("Lehmer codes") {
  CHECK(code(Permutation::parse("31542")) == Code{2, 0, 2, 1, 0});
  CHECK(is_valid_code(code(Permutation::longest(5))));
  CHECK_FALSE(is_valid_code(Code{3, 0, 0}));
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      CHECK(is_valid_code(code(w)));
      CHECK(is_vexillary_code(code(w)) == pattern_avoids(w, Permutation::parse("2143")));
    }
}

TEST_CASE("class counts match pattern-avoidance enumerations") {
  // |Av_n(132)| = |Av_n(321)| = Catalan, |Av_n(2143)| = 1, 2, 6, 23, 103, 513
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  const int vex[] = {1, 1, 2, 6, 23, 103, 513};
  for (int n = 1; n <= 6; ++n) {
    int dom = 0, fc = 0, vx = 0, gr = 0, igr = 0;
    for (const auto& w : all_permutations(n)) {
      PermClass c = classify(w);
      dom += c.dominant;
      fc += c.fully_commutative;
      vx += c.vexillary;
      gr += c.grassmannian;
      igr += c.inverse_grassmannian;
      CHECK(c.dominant == pattern_avoids(w, Permutation::parse("132")));
      CHECK(c.fully_commutative == pattern_avoids(w, Permutation::parse("321")));
      CHECK(c.grassmannian == (w.descents().size() <= 1));
      CHECK(c.inverse_grassmannian == classify(w.inverse()).grassmannian);
    }
    CHECK(dom == catalan[n]);
    CHECK(fc == catalan[n]);
    CHECK(vx == vex[n]);
    CHECK(gr == (1 << n) - n);
    CHECK(igr == gr);
  }
}

TEST_CASE("pattern containment") {
  CHECK_FALSE(pattern_avoids(Permutation::parse("246153"), Permutation::parse("2143")));
  CHECK(pattern_avoids(Permutation::parse("12345"), Permutation::parse("21")));
  CHECK_FALSE(pattern_avoids(Permutation::parse("31542"), Permutation::parse("321")));
}

TEST_CASE("reduced word counts") {
  CHECK(reduced_word_count(Permutation::longest(3)) == 2);
  CHECK(reduced_word_count(Permutation::longest(4)) == 16);
  CHECK(reduced_word_count(Permutation::longest(5)) == 768);
  CHECK(reduced_word_count(Permutation::identity(4)) == 1);
}
