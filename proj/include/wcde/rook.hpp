#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcde/cde.hpp"
#include "wcde/lattice.hpp"
#include "wcde/shape.hpp"
#include "wcde/weakinterval.hpp"

namespace wcde {

// One nonzero signed toggleability term: sign * T^{+/-} at a box of the rectangle.
struct RectTerm {
  int sign = 0;
  bool plus = false;
  Box box;
  auto operator<=>(const RectTerm&) const = default;
};

struct PermTerm {
  int sign = 0;
  bool plus = false;
  GrassLabel label;
  auto operator<=>(const PermTerm&) const = default;
};

std::string to_string(const RectTerm& t);
std::string to_string(const PermTerm& t);

// R_(i,j) on [0, b^a] evaluated at nu.
int rect_rook_eval(int a, int b, Box anchor, const Partition& nu, std::vector<RectTerm>* terms = nullptr);
// The same rook as a statistic on young_interval(rectangle(a, b)).
Statistic rect_rook_statistic(int a, int b, Box anchor);

struct BoxSquare {
  int k = 0;
  std::vector<Box> cross;  // cross-saturation of the anchor in Inv^{-1}(w)
};
BoxSquare box_square_k(const Permutation& w, Box anchor);

struct RectDecomposition {
  int n = 0, k = 0;
  Permutation u;  // in S_k: small values in the order they appear
  Permutation v;  // in S_{n-k}: large values (shifted down by k) in order
  std::vector<RootPair> s;  // Pi(Inv^{-1}(w') cap box_k), sorted
  Partition nu;             // Psi(s) inside k^{n-k}

  RootPair pi(RootPair p) const;
  Box psi(RootPair p) const { return {p.j - k, k - p.i + 1}; }
  Box rect_box(RootPair p) const { return psi(pi(p)); }
};
RectDecomposition rect_decomposition(const Permutation& w_prime, int k);
// Both toggle bullets: adding/removing a box of box_k keeps an inversion set iff the
// rotated box can be added to/removed from nu. Empty string on success.
std::string validate_toggle_correspondence(const Permutation& w_prime, int k);

// Coefficients (of T^+, of T^-) of label g in the permutation rook anchored at (i,j),
// assuming (g.i, g.j) lies in the cross-saturation.
std::pair<int, int> perm_rook_coefficient(Box anchor, const GrassLabel& g);

class PermRookContext {
 public:
  PermRookContext(const Permutation& w, Box anchor);
  const Permutation& w() const { return w_; }
  Box anchor() const { return anchor_; }
  int k() const { return k_; }
  const std::vector<Box>& cross() const { return cross_; }
  bool in_cross(int i, int j) const;
  // Evaluation at w' <= w. With check set, replays the rectangle matching and throws on mismatch.
  int eval(const Permutation& w_prime, std::vector<PermTerm>* terms = nullptr, bool check = false) const;

 private:
  Permutation w_;
  std::uint64_t mask_ = 0;
  Box anchor_;
  int k_ = 0;
  std::vector<Box> cross_;
  std::uint64_t cross_mask_ = 0;
};

int perm_rook_eval(const Permutation& w, Box anchor, const Permutation& w_prime,
                   std::vector<PermTerm>* terms = nullptr, bool check = false);
// Sparse coefficient map over the irreducibles of [e,w]: index -> (coef of T^+, coef of T^-).
std::map<int, std::pair<int, int>> perm_rook_map(const WeakInterval& iv, Box anchor);
Statistic perm_rook_statistic(const WeakInterval& iv, Box anchor);
// Anchors of Inv^{-1}(w) that are cross-saturated.
std::vector<Box> cross_saturated_boxes(const Permutation& w);

struct CertificateReport {
  Permutation w;
  SkewShape shape;
  int a = 0, b = 0;
  RookCoefficients coefficients;  // on boxes of Inv^{-1}(w)
  long constant = 0;              // ab
  Rational density;
  int distributions_checked = 0;
};
CertificateReport theorem_certificate(const Permutation& w, std::uint64_t seed = 1);

struct RookCensus {
  int n = 0;
  std::uint64_t permutations = 0;
  std::uint64_t anchors = 0;
  std::uint64_t evaluations = 0;
  std::vector<std::string> failures;
  bool operator==(const RookCensus&) const = default;
};
RookCensus verify_perm_rooks(int n, bool check_matching = false);
RookCensus verify_perm_rooks_serial(int n, bool check_matching = false);
// Exhaustive evaluation over one interval.
RookCensus verify_perm_rooks_for(const Permutation& w, bool check_matching = false);

}  // namespace wcde
