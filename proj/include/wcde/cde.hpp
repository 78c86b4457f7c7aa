#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wcde/lattice.hpp"
#include "wcde/shape.hpp"
#include "wcde/weakinterval.hpp"

namespace wcde {

struct CdeReport {
  Rational uniform_expectation;
  Rational maxchain_expectation;
  bool is_cde = false;
  Rational edge_density;
};
CdeReport cde_check(const Hasse& h);
CdeReport cde_check(const FiniteLattice& L);

struct TcdeCertificate {
  std::vector<std::pair<int, Rational>> coeffs;  // (irreducible, a_p), sorted by irreducible
  Rational constant;
};

struct TcdeResult {
  std::optional<TcdeCertificate> certificate;
  std::optional<Distribution> witness;
  Rational density;
  Rational witness_expectation;
  bool is_tcde() const { return certificate.has_value(); }
};

// The affine set of toggle-symmetric distributions, via an exact reduced row echelon
// form of the constraint matrix [1; T_p (p irreducible)].
class ToggleSymmetricSpace {
 public:
  explicit ToggleSymmetricSpace(const GammaLabeling& gl);

  int elements() const { return n_; }
  int rank() const { return static_cast<int>(pivots_.size()); }
  const std::vector<int>& free_columns() const { return free_; }
  // Null vector with 1 at free column f.
  std::vector<std::pair<int, Rational>> null_vector(int f) const;
  // Random point of the relative interior direction set, clipped into the simplex.
  Distribution sample(std::mt19937_64& rng) const;
  // ddeg-style membership test: returns coefficients over [1, T_p...] or, failing that,
  // the first free column whose null vector pairs nontrivially with f.
  bool in_span(const std::vector<Rational>& f, std::vector<Rational>* coeffs, int* witness_col) const;
  const std::vector<int>& irreducibles() const { return irr_; }

 private:
  int n_ = 0;
  std::vector<int> irr_;
  std::vector<std::vector<Rational>> rows_;   // rank rows over the element columns
  std::vector<std::vector<Rational>> combo_;  // rank rows over the constraint rows
  std::vector<int> pivots_, free_;
};

TcdeResult tcde_check(const GammaLabeling& gl);
TcdeResult tcde_check(const FiniteLattice& L);
// Pointwise check of sum a_p T_p + c = ddeg.
bool verify_certificate(const GammaLabeling& gl, const TcdeCertificate& cert);

struct McdeReport {
  std::vector<Rational> values;  // index m
  std::optional<int> first_difference;
};
McdeReport mcde_scan(const Hasse& h, int m_max);

struct OrbitAverage {
  int representative = 0;
  int size = 0;
  Rational average;
};
struct HomomesyReport {
  std::vector<OrbitAverage> orbits;
  bool homomesic = false;
};
HomomesyReport homomesy_check(const GammaLabeling& gl, const Statistic& f);

// f_k on [e, w0] indexed like WeakInterval::build(w0).
Statistic refined_statistic(const WeakInterval& full, int k);
Statistic refined_statistic(int n, int k);

struct RefinedReport {
  int n = 0;
  bool ok = true;
  std::vector<std::string> failures;
};
RefinedReport verify_refined(int n);

struct TheoremRecord {
  Permutation w;
  SkewShape shape;
  int a = 0, b = 0;
  int elements = 0, edges = 0;
  Rational density;
  bool tcde = false;
  Rational tcde_constant;
  bool cde = false;
  bool ok = false;
};
struct TheoremReport {
  int n = 0;
  std::uint64_t permutations = 0;
  std::vector<TheoremRecord> records;
  std::vector<std::string> violations;
};
std::optional<TheoremRecord> theorem_instance(const Permutation& w);
TheoremReport verify_main_theorem(int n);
TheoremReport verify_main_theorem_serial(int n);

// Connected balanced shape of a skew-vexillary w, if any.
std::optional<SkewMatch> connected_balanced_match(const Permutation& w);

}  // namespace wcde
