#include "wcde/perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int x : word_) {
    if (x < 1 || x > n || seen[x])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    } else {
      throw ParseError("unexpected character in permutation: " + std::string(text));
    }
  }
  if (!cur.empty()) tokens.push_back(cur);
  if (tokens.empty()) throw ParseError("empty permutation");
  std::vector<int> w;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char ch : tokens[0]) w.push_back(ch - '0');
  } else {
    for (const auto& t : tokens) w.push_back(std::stoi(t));
  }
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a permutation: " + std::string(text));
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::unrank(int n, std::uint64_t k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(n);
  for (int i = n; i >= 1; --i) {
    std::uint64_t f = factorial(i - 1);
    auto d = static_cast<std::size_t>(k / f);
    k %= f;
    w.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 0; i < size(); ++i) inv[word_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::reverse_complement() const {
  const int n = size();
  std::vector<int> rc(n);
  for (int i = 0; i < n; ++i) rc[i] = n + 1 - word_[n - 1 - i];
  return Permutation(std::move(rc));
}

Permutation Permutation::strip_fixed_points() const {
  const int n = size();
  int lo = 0;
  while (lo < n && word_[lo] == lo + 1) ++lo;
  if (lo == n) return identity(1);
  int hi = n;
  while (hi > lo && word_[hi - 1] == hi) --hi;
  std::vector<int> w;
  for (int i = lo; i < hi; ++i) w.push_back(word_[i] - lo);
  return Permutation(std::move(w));
}

int Permutation::length() const {
  int len = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (word_[i] > word_[j]) ++len;
  return len;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int k = 1; k < size(); ++k)
    if (has_descent(k)) d.push_back(k);
  return d;
}

Permutation Permutation::swap_positions(int k) const {
  Permutation p = *this;
  std::swap(p.word_[k - 1], p.word_[k]);
  return p;
}

Permutation Permutation::swap_values(int a, int b) const {
  Permutation p = *this;
  for (int& x : p.word_) {
    if (x == a)
      x = b;
    else if (x == b)
      x = a;
  }
  return p;
}

Permutation Permutation::compose(const Permutation& v) const {
  std::vector<int> r(v.word_.size());
  for (int i = 0; i < v.size(); ++i) r[i] = word_[v.word_[i] - 1];
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (word_[i] != i + 1) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  const bool sep = size() > 9;
  for (int i = 0; i < size(); ++i) {
    if (sep && i) s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

int pair_index(int i, int j, int n) {
  // rows 1..i-1 contribute (n-r) pairs each
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

RootPair pair_at(int index, int n) {
  int i = 1;
  while (index >= n - i) {
    index -= n - i;
    ++i;
  }
  return {i, i + 1 + index};
}

InversionSet::InversionSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n > kMaxMaskN) throw std::invalid_argument("inversion sets support n <= 11");
}

InversionSet InversionSet::from_pairs(int n, const std::vector<RootPair>& pairs) {
  std::uint64_t m = 0;
  for (auto [i, j] : pairs) {
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("pair outside Phi+");
    m |= std::uint64_t{1} << pair_index(i, j, n);
  }
  return InversionSet(n, m);
}

bool InversionSet::contains(int i, int j) const {
  return (mask_ >> pair_index(i, j, n_)) & 1U;
}

int InversionSet::size() const { return std::popcount(mask_); }

std::vector<RootPair> InversionSet::pairs() const {
  std::vector<RootPair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (contains(i, j)) out.push_back({i, j});
  return out;
}

InversionSet InversionSet::with(int i, int j) const {
  return InversionSet(n_, mask_ | (std::uint64_t{1} << pair_index(i, j, n_)));
}

InversionSet InversionSet::without(int i, int j) const {
  return InversionSet(n_, mask_ & ~(std::uint64_t{1} << pair_index(i, j, n_)));
}

InversionSet inversion_set(const Permutation& w, Side side) {
  const Permutation& v = side == Side::direct ? w : w.inverse();
  const int n = v.size();
  std::uint64_t m = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (v(i) > v(j)) m |= std::uint64_t{1} << pair_index(i, j, n);
  return InversionSet(n, m);
}

std::uint64_t inverse_mask(const Permutation& w) {
  // (a,b) in Inv^{-1}(w) iff b appears before a in w
  const int n = w.size();
  std::uint64_t m = 0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      int hi = w.word()[p], lo = w.word()[q];
      if (hi > lo) m |= std::uint64_t{1} << pair_index(lo, hi, n);
    }
  return m;
}

bool is_valid_inversion_set(const InversionSet& s, Triple* violation) {
  const int n = s.n();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        bool ab = s.contains(a, b), bc = s.contains(b, c), ac = s.contains(a, c);
        if ((ac && !ab && !bc) || (ab && bc && !ac)) {
          if (violation) *violation = {a, b, c};
          return false;
        }
      }
  return true;
}

Permutation permutation_from_inversions(const InversionSet& s) {
  Triple t{};
  if (!is_valid_inversion_set(s, &t))
    throw InvalidInversionSet("violated triple (" + std::to_string(t.a) + "," +
                              std::to_string(t.b) + "," + std::to_string(t.c) + ")");
  const int n = s.n();
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (s.contains(i, j)) ++smaller;
    for (int j = 1; j < i; ++j)
      if (!s.contains(j, i)) ++smaller;
    w[i - 1] = smaller + 1;
  }
  return Permutation(std::move(w));
}

std::vector<Permutation> weak_covers(const Permutation& w, CoverDirection dir) {
  std::vector<Permutation> out;
  for (int k = 1; k < w.size(); ++k)
    if (w.has_descent(k) == (dir == CoverDirection::down)) out.push_back(w.swap_positions(k));
  return out;
}

bool weak_leq(const Permutation& u, const Permutation& w) {
  std::uint64_t mu = inverse_mask(u), mw = inverse_mask(w);
  return (mu & ~mw) == 0;
}

Code code(const Permutation& w) {
  const int n = w.size();
  Code c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++c[i - 1];
  return c;
}

bool is_valid_code(const Code& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 1; i <= n; ++i)
    if (c[i - 1] < 0 || c[i - 1] > n - i) return false;
  return true;
}

bool is_vexillary_code(const Code& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (c[i] > c[j]) {
        int cnt = 0;
        for (int k = i + 1; k < j; ++k)
          if (c[k] < c[j]) ++cnt;
        if (cnt > c[i] - c[j]) return false;
      } else {
        for (int k = i + 1; k < j; ++k)
          if (c[k] < c[i]) return false;
      }
    }
  return true;
}

namespace {

bool embed(const std::vector<int>& w, const std::vector<int>& pi, std::vector<int>& chosen,
           int start) {
  const int t = static_cast<int>(chosen.size());
  const int m = static_cast<int>(pi.size());
  if (t == m) return true;
  const int n = static_cast<int>(w.size());
  for (int pos = start; pos <= n - (m - t); ++pos) {
    bool ok = true;
    for (int s = 0; s < t && ok; ++s)
      ok = (w[chosen[s]] < w[pos]) == (pi[s] < pi[t]);
    if (!ok) continue;
    chosen.push_back(pos);
    if (embed(w, pi, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool pattern_avoids(const Permutation& w, const Permutation& pi) {
  if (pi.size() > w.size()) return true;
  std::vector<int> chosen;
  return !embed(w.word(), pi.word(), chosen, 0);
}

PermClass classify(const Permutation& w) {
  static const Permutation p132({1, 3, 2}), p321({3, 2, 1}), p2143({2, 1, 4, 3});
  PermClass c;
  c.grassmannian = w.descents().size() <= 1;
  c.inverse_grassmannian = w.inverse().descents().size() <= 1;
  c.dominant = pattern_avoids(w, p132);
  c.vexillary = pattern_avoids(w, p2143);
  c.fully_commutative = pattern_avoids(w, p321);
  return c;
}

}  // namespace wcde
