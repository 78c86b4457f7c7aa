#include "wcde/weakinterval.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

Permutation GrassLabel::perm(int n) const {
  std::vector<int> w;
  for (int v = 1; v < i; ++v) w.push_back(v);
  for (int v : x) w.push_back(v);
  w.push_back(j);
  w.push_back(i);
  for (int v = i + 1; v < j; ++v)
    if (!contains(v)) w.push_back(v);
  for (int v = j + 1; v <= n; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

bool GrassLabel::contains(int v) const { return std::binary_search(x.begin(), x.end(), v); }

std::string GrassLabel::str() const {
  std::string s = "g((" + std::to_string(i) + "," + std::to_string(j) + "),{";
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(x[k]);
  }
  return s + "})";
}

GrassLabel cover_label(const Permutation& w, int k) {
  GrassLabel g;
  g.i = w(k + 1);
  g.j = w(k);
  for (int p = 1; p <= w.size() && w(p) != g.i; ++p)
    if (w(p) > g.i && w(p) < g.j) g.x.push_back(w(p));
  std::sort(g.x.begin(), g.x.end());
  return g;
}

GrassLabel explicit_gamma_label(const Permutation& u, const Permutation& w) {
  if (u.size() != w.size()) throw NotACover("sizes differ");
  for (int k = 1; k < w.size(); ++k)
    if (w.has_descent(k) && w.swap_positions(k) == u) return cover_label(w, k);
  throw NotACover(u.str() + " is not covered by " + w.str());
}

WeakInterval WeakInterval::build(const Permutation& w) {
  if (w.size() > kMaxMaskN) throw std::invalid_argument("weak intervals support n <= 11");
  WeakInterval iv;
  iv.w_ = w;
  std::unordered_map<std::uint64_t, Permutation> found;
  std::queue<Permutation> q;
  found.emplace(inverse_mask(w), w);
  q.push(w);
  while (!q.empty()) {
    Permutation v = q.front();
    q.pop();
    for (int k : v.descents()) {
      Permutation u = v.swap_positions(k);
      if (found.emplace(inverse_mask(u), u).second) q.push(u);
    }
  }
  for (auto& [m, p] : found) iv.elements_.push_back(p);
  std::sort(iv.elements_.begin(), iv.elements_.end(), [](const Permutation& a, const Permutation& b) {
    int la = a.length(), lb = b.length();
    return la != lb ? la < lb : a < b;
  });
  std::vector<std::string> payloads;
  for (std::size_t x = 0; x < iv.elements_.size(); ++x) {
    std::uint64_t m = inverse_mask(iv.elements_[x]);
    iv.masks_.push_back(m);
    iv.index_[m] = static_cast<int>(x);
    payloads.push_back(iv.elements_[x].str());
  }
  std::vector<std::pair<int, int>> covers;
  std::map<std::pair<int, int>, GrassLabel> lab;
  for (int y = 0; y < iv.size(); ++y) {
    const Permutation& v = iv.elements_[y];
    for (int k : v.descents()) {
      int x = iv.index_of(v.swap_positions(k));
      covers.emplace_back(x, y);
      lab[{x, y}] = cover_label(v, k);
    }
  }
  iv.hasse_ = std::make_shared<const Hasse>(std::move(payloads), covers);
  for (const Edge& e : iv.hasse_->edges()) iv.labels_.push_back(lab.at({e.lo, e.hi}));
  return iv;
}

int WeakInterval::index_of(const Permutation& u) const {
  if (u.size() != n()) return -1;
  return index_of_mask(inverse_mask(u));
}

int WeakInterval::index_of_mask(std::uint64_t m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

GammaLabeling WeakInterval::gamma_labeling() const {
  std::vector<int> lab;
  lab.reserve(labels_.size());
  for (const GrassLabel& g : labels_) {
    int p = index_of(g.perm(n()));
    if (p < 0) throw std::logic_error("label " + g.str() + " outside the interval");
    lab.push_back(p);
  }
  return GammaLabeling(hasse_, std::move(lab));
}

FiniteLattice WeakInterval::lattice() const {
  std::vector<std::pair<int, int>> covers;
  for (const Edge& e : hasse_->edges()) covers.emplace_back(e.lo, e.hi);
  return FiniteLattice::build(hasse_->payloads(), covers);
}

namespace {

void require_pair(const Permutation& w, RootPair pr) {
  if (pr.i < 1 || pr.j > w.size() || pr.i >= pr.j ||
      !inversion_set(w, Side::inverse).contains(pr.i, pr.j))
    throw PairNotInInverseInversions("(" + std::to_string(pr.i) + "," + std::to_string(pr.j) + ")");
}

int toggle_value_unchecked(const Permutation& u, RootPair pr) {
  const auto& word = u.word();
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    if (word[p] == pr.i && word[p + 1] == pr.j) return 1;
    if (word[p] == pr.j && word[p + 1] == pr.i) return -1;
  }
  return 0;
}

}  // namespace

int aggregated_toggle_value(const Permutation& u, const Permutation& w, RootPair pair) {
  require_pair(w, pair);
  if (!weak_leq(u, w)) throw NotInInterval(u.str());
  return toggle_value_unchecked(u, pair);
}

AggregatedToggles aggregated_toggleability(const WeakInterval& iv, RootPair pair) {
  require_pair(iv.top(), pair);
  AggregatedToggles t{Statistic(iv.size()), Statistic(iv.size()), Statistic(iv.size())};
  for (int x = 0; x < iv.size(); ++x) {
    int v = toggle_value_unchecked(iv.element(x), pair);
    t.plus[x] = v > 0 ? 1 : 0;
    t.minus[x] = v < 0 ? 1 : 0;
    t.total[x] = v;
  }
  return t;
}

bool is_max_chain(const WeakInterval& iv, const MaxChain& c) {
  const Permutation& w = iv.top();
  if (static_cast<int>(c.size()) != w.length() + 1) return false;
  if (!c.front().is_identity() || c.back() != w) return false;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    auto downs = weak_covers(c[k + 1], CoverDirection::down);
    if (std::find(downs.begin(), downs.end(), c[k]) == downs.end()) return false;
  }
  return true;
}

int chain_statistic(const MaxChain& c, const Permutation& w, RootPair pair) {
  require_pair(w, pair);
  int s = 0;
  for (const auto& u : c) s += toggle_value_unchecked(u, pair);
  return s;
}

MaxChain chain_involution(const WeakInterval& iv, const MaxChain& c, RootPair pair) {
  require_pair(iv.top(), pair);
  if (!is_max_chain(iv, c)) throw InvalidChain("not a maximal chain of the interval");
  const int L = static_cast<int>(c.size()) - 1;
  std::vector<int> minus, plus;  // minus descending, plus ascending
  for (int k = L; k >= 0; --k)
    if (toggle_value_unchecked(c[k], pair) < 0) minus.push_back(k);
  for (int k = 0; k <= L; ++k)
    if (toggle_value_unchecked(c[k], pair) > 0) plus.push_back(k);
  const int a = static_cast<int>(minus.size()), b = static_cast<int>(plus.size());
  if (a < 1 || b < 1) throw std::logic_error("chain without both toggle signs");
  if (a == b) return c;
  auto s = [&](const Permutation& u) { return u.swap_values(pair.i, pair.j); };
  MaxChain out;
  if (a > b) {
    const int lo = minus[a - 1], hi = minus[b - 1];
    for (int k = 0; k < lo; ++k) out.push_back(c[k]);
    for (int k = lo + 1; k <= hi; ++k) out.push_back(s(c[k]));
    for (int k = hi; k <= L; ++k) out.push_back(c[k]);
  } else {
    const int lo = plus[a - 1], hi = plus[b - 1];
    for (int k = 0; k <= lo; ++k) out.push_back(c[k]);
    for (int k = lo; k < hi; ++k) out.push_back(s(c[k]));
    for (int k = hi + 1; k <= L; ++k) out.push_back(c[k]);
  }
  if (!is_max_chain(iv, out)) throw std::logic_error("involution left the set of maximal chains");
  return out;
}

void for_each_max_chain(const WeakInterval& iv, const std::function<bool(const MaxChain&)>& f) {
  const Hasse& h = iv.hasse();
  std::vector<int> path{h.bottom()};
  MaxChain chain;
  bool stop = false;
  std::function<void(int)> rec = [&](int x) {
    if (stop) return;
    if (x == h.top()) {
      chain.clear();
      for (int y : path) chain.push_back(iv.element(y));
      if (!f(chain)) stop = true;
      return;
    }
    for (int y : h.up(x)) {
      path.push_back(y);
      rec(y);
      path.pop_back();
      if (stop) return;
    }
  };
  rec(h.bottom());
}

BigInt reduced_word_count(const Permutation& w) {
  std::unordered_map<std::uint64_t, BigInt> memo;
  std::function<BigInt(const Permutation&)> count = [&](const Permutation& v) -> BigInt {
    if (v.is_identity()) return 1;
    std::uint64_t m = inverse_mask(v);
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (int k : v.descents()) total += count(v.swap_positions(k));
    memo.emplace(m, total);
    return total;
  };
  return count(w);
}

}  // namespace wcde
