#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wcde {

// One-line notation; values and positions are 1-based in the public API.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation longest(int n);
  static Permutation parse(std::string_view text);
  // k-th permutation of S_n in lexicographic order, k in [0, n!).
  static Permutation unrank(int n, std::uint64_t k);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  Permutation reverse_complement() const;
  Permutation strip_fixed_points() const;
  int length() const;
  bool has_descent(int k) const { return word_[k - 1] > word_[k]; }
  std::vector<int> descents() const;
  Permutation swap_positions(int k) const;    // w s_k
  Permutation swap_values(int a, int b) const;  // s_(a,b) w
  Permutation compose(const Permutation& v) const;  // (w v)(i) = w(v(i))
  bool is_identity() const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> word_;
};

std::vector<Permutation> all_permutations(int n);
std::uint64_t factorial(int n);

struct RootPair {
  int i = 0;
  int j = 0;
  auto operator<=>(const RootPair&) const = default;
};

// Lexicographic index of (i,j) in Phi+; n <= 11 so the mask fits 64 bits.
constexpr int kMaxMaskN = 11;
int pair_index(int i, int j, int n);
RootPair pair_at(int index, int n);

class InversionSet {
 public:
  InversionSet() = default;
  InversionSet(int n, std::uint64_t mask);
  static InversionSet from_pairs(int n, const std::vector<RootPair>& pairs);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i, int j) const;
  int size() const;
  std::vector<RootPair> pairs() const;
  bool subset_of(const InversionSet& o) const { return (mask_ & ~o.mask_) == 0; }

  InversionSet with(int i, int j) const;
  InversionSet without(int i, int j) const;

  bool operator==(const InversionSet&) const = default;

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

enum class Side { direct, inverse };

InversionSet inversion_set(const Permutation& w, Side side);
std::uint64_t inverse_mask(const Permutation& w);

struct Triple {
  int a, b, c;
};
// First violated closure triple, if any.
bool is_valid_inversion_set(const InversionSet& s, Triple* violation = nullptr);
Permutation permutation_from_inversions(const InversionSet& s);

enum class CoverDirection { down, up };
std::vector<Permutation> weak_covers(const Permutation& w, CoverDirection dir);
// u <= w in weak order.
bool weak_leq(const Permutation& u, const Permutation& w);

using Code = std::vector<int>;
Code code(const Permutation& w);
bool is_valid_code(const Code& c);
bool is_vexillary_code(const Code& c);

bool pattern_avoids(const Permutation& w, const Permutation& pi);

struct PermClass {
  bool grassmannian = false;
  bool inverse_grassmannian = false;
  bool dominant = false;
  bool vexillary = false;
  bool fully_commutative = false;
};
PermClass classify(const Permutation& w);

}  // namespace wcde

template <>
struct std::hash<wcde::Permutation> {
  std::size_t operator()(const wcde::Permutation& p) const noexcept {
    std::size_t h = 0;
    for (int x : p.word()) h = h * 31 + static_cast<std::size_t>(x);
    return h;
  }
};
