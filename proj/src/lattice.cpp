#include "wcde/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

Hasse::Hasse(std::vector<std::string> payloads, const std::vector<std::pair<int, int>>& covers)
    : payload_(std::move(payloads)) {
  const int n = size();
  if (n == 0) throw NotALattice("no elements");
  std::set<std::pair<int, int>> seen;
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
      throw NotALattice("bad cover (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
    if (!seen.insert({lo, hi}).second)
      throw NotTransitiveReduction("duplicate cover " + payload_[lo] + " < " + payload_[hi]);
  }
  up_.resize(n);
  down_.resize(n);
  up_e_.resize(n);
  down_e_.resize(n);
  for (auto [lo, hi] : seen) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({lo, hi});
    up_[lo].push_back(hi);
    up_e_[lo].push_back(id);
    down_[hi].push_back(lo);
    down_e_[hi].push_back(id);
  }
  std::vector<int> indeg(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int x = 0; x < n; ++x) {
    indeg[x] = static_cast<int>(down_[x].size());
    if (!indeg[x]) ready.push(x);
  }
  while (!ready.empty()) {
    int x = ready.top();
    ready.pop();
    topo_.push_back(x);
    for (int y : up_[x])
      if (--indeg[y] == 0) ready.push(y);
  }
  if (static_cast<int>(topo_.size()) != n) throw NotALattice("cover relation has a cycle");
  std::vector<int> mins, maxs;
  for (int x = 0; x < n; ++x) {
    if (down_[x].empty()) mins.push_back(x);
    if (up_[x].empty()) maxs.push_back(x);
  }
  if (mins.size() != 1)
    throw NotALattice("pair (" + payload_[mins[0]] + "," + payload_[mins[1]] + ") has no meet");
  if (maxs.size() != 1)
    throw NotALattice("pair (" + payload_[maxs[0]] + "," + payload_[maxs[1]] + ") has no join");
  bottom_ = mins[0];
  top_ = maxs[0];
}

int Hasse::edge_id(int lo, int hi) const {
  for (int e : up_e_[lo])
    if (edges_[e].hi == hi) return e;
  return -1;
}

std::vector<Bitset> Hasse::up_sets() const {
  const int n = size();
  std::vector<Bitset> up(n, Bitset(n));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int x = *it;
    up[x].set(x);
    for (int y : up_[x]) up[x] |= up[y];
  }
  return up;
}

std::vector<Bitset> Hasse::down_sets() const {
  const int n = size();
  std::vector<Bitset> down(n, Bitset(n));
  for (int x : topo_) {
    down[x].set(x);
    for (int y : down_[x]) down[x] |= down[y];
  }
  return down;
}

namespace {

// Unique least element of `s` w.r.t. the order whose principal filters are `filter`.
int least_element(const Bitset& s, const std::vector<Bitset>& filter, const std::vector<std::size_t>& weight) {
  int best = -1;
  for (auto z = s.find_first(); z != Bitset::npos; z = s.find_next(z))
    if (best < 0 || weight[z] < weight[best]) best = static_cast<int>(z);
  if (best < 0 || !s.is_subset_of(filter[best])) return -1;
  return best;
}

}  // namespace

FiniteLattice FiniteLattice::build(std::vector<std::string> payloads,
                                   const std::vector<std::pair<int, int>>& covers) {
  FiniteLattice L;
  L.hasse_ = std::make_shared<const Hasse>(std::move(payloads), covers);
  const Hasse& h = *L.hasse_;
  const int n = h.size();
  if (n > 65535) throw NotALattice("too many elements");
  L.up_ = h.up_sets();
  L.down_ = h.down_sets();
  for (const Edge& e : h.edges())
    for (int z : h.up(e.lo))
      if (z != e.hi && L.up_[z][e.hi])
        throw NotTransitiveReduction(h.payload(e.lo) + " < " + h.payload(z) + " < " + h.payload(e.hi));
  std::vector<std::size_t> below(n), above(n);
  for (int x = 0; x < n; ++x) {
    below[x] = L.down_[x].count();
    above[x] = L.up_[x].count();
  }
  L.join_.assign(static_cast<std::size_t>(n) * n, 0);
  L.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int j, m;
      if (L.up_[x][y]) {
        j = y;
        m = x;
      } else if (L.up_[y][x]) {
        j = x;
        m = y;
      } else {
        j = least_element(L.up_[x] & L.up_[y], L.up_, below);
        m = least_element(L.down_[x] & L.down_[y], L.down_, above);
        if (j < 0) throw NotALattice("pair (" + h.payload(x) + "," + h.payload(y) + ") has no join");
        if (m < 0) throw NotALattice("pair (" + h.payload(x) + "," + h.payload(y) + ") has no meet");
      }
      L.join_[L.idx(x, y)] = L.join_[L.idx(y, x)] = static_cast<std::uint16_t>(j);
      L.meet_[L.idx(x, y)] = L.meet_[L.idx(y, x)] = static_cast<std::uint16_t>(m);
    }
  return L;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (hasse_->down(x).size() == 1) out.push_back(x);
  return out;
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<std::pair<int, int>> covers;
  for (const Edge& e : hasse_->edges()) covers.emplace_back(e.hi, e.lo);
  return build(hasse_->payloads(), covers);
}

GammaLabeling::GammaLabeling(std::shared_ptr<const Hasse> h, std::vector<int> edge_label)
    : hasse_(std::move(h)), label_(std::move(edge_label)) {
  const Hasse& H = *hasse_;
  const int n = H.size();
  if (static_cast<int>(label_.size()) != H.edge_count()) throw DimensionMismatch("one label per edge");
  is_irr_.assign(n, 0);
  for (int p : label_) {
    if (p < 0 || p >= n || H.down(p).size() != 1)
      throw LabelingMismatch("label " + std::to_string(p) + " is not join-irreducible");
    is_irr_[p] = 1;
  }
  for (int p = 0; p < n; ++p)
    if (is_irr_[p]) irr_.push_back(p);
  down_labels_.resize(n);
  up_labels_.resize(n);
  for (int y = 0; y < n; ++y) {
    for (int e : H.down_edges(y)) down_labels_[y].push_back(label_[e]);
    for (int e : H.up_edges(y)) up_labels_[y].push_back(label_[e]);
    std::sort(down_labels_[y].begin(), down_labels_[y].end());
    std::sort(up_labels_[y].begin(), up_labels_[y].end());
    std::vector<int> all = down_labels_[y];
    all.insert(all.end(), up_labels_[y].begin(), up_labels_[y].end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw LabelingMismatch("repeated label at element " + H.payload(y));
  }
}

bool GammaLabeling::is_irreducible(int p) const {
  return p >= 0 && p < size() && is_irr_[p];
}

int GammaLabeling::up_neighbor(int y, int p) const {
  for (int e : hasse_->up_edges(y))
    if (label_[e] == p) return hasse_->edges()[e].hi;
  return -1;
}

int GammaLabeling::down_neighbor(int y, int p) const {
  for (int e : hasse_->down_edges(y))
    if (label_[e] == p) return hasse_->edges()[e].lo;
  return -1;
}

GammaLabeling gamma_labeling(const FiniteLattice& L) {
  const Hasse& h = L.hasse();
  const int n = h.size();
  std::vector<std::size_t> below(n);
  std::vector<Bitset> ups(n);
  for (int x = 0; x < n; ++x) {
    below[x] = L.down_set(x).count();
    ups[x] = L.up_set(x);
  }
  std::vector<int> labels(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) {
    const int x = h.edges()[e].lo, y = h.edges()[e].hi;
    Bitset z(n);
    const Bitset& dy = L.down_set(y);
    for (auto c = dy.find_first(); c != Bitset::npos; c = dy.find_next(c))
      if (L.join(x, static_cast<int>(c)) == y) z.set(c);
    int least = least_element(z, ups, below);
    if (least < 0) {
      std::vector<std::string> mins;
      for (auto c = z.find_first(); c != Bitset::npos; c = z.find_next(c)) {
        bool minimal = true;
        for (auto d = z.find_first(); d != Bitset::npos && minimal; d = z.find_next(d))
          if (d != c && L.leq(static_cast<int>(d), static_cast<int>(c))) minimal = false;
        if (minimal) mins.push_back(h.payload(static_cast<int>(c)));
      }
      std::string msg = "cover " + h.payload(x) + " < " + h.payload(y) + " has minimal elements";
      for (const auto& s : mins) msg += " " + s;
      throw NotSemidistributive(msg);
    }
    labels[e] = least;
  }
  GammaLabeling gl(L.hasse_ptr(), std::move(labels));
  if (gl.irreducibles() != L.join_irreducibles())
    throw LabelingMismatch("labels do not exhaust the join-irreducibles");
  for (int y = 0; y < n; ++y) {
    int j = h.bottom();
    for (int p : gl.down_labels(y)) j = L.join(j, p);
    if (j != y) throw LabelingMismatch("canonical join representation fails at " + h.payload(y));
  }
  return gl;
}

Statistic Statistic::constant(std::size_t n, const Rational& c) {
  Statistic s(n);
  for (auto& v : s.values) v = c;
  return s;
}

Statistic& Statistic::operator+=(const Statistic& o) {
  if (o.size() != size()) throw DimensionMismatch("statistic sizes differ");
  for (std::size_t x = 0; x < size(); ++x) values[x] += o.values[x];
  return *this;
}

Statistic& Statistic::operator-=(const Statistic& o) {
  if (o.size() != size()) throw DimensionMismatch("statistic sizes differ");
  for (std::size_t x = 0; x < size(); ++x) values[x] -= o.values[x];
  return *this;
}

Statistic& Statistic::operator*=(const Rational& c) {
  for (auto& v : values) v *= c;
  return *this;
}

Statistic operator+(Statistic a, const Statistic& b) { return a += b; }
Statistic operator-(Statistic a, const Statistic& b) { return a -= b; }
Statistic operator*(const Rational& c, Statistic a) { return a *= c; }

namespace {

void require_irreducible(const GammaLabeling& gl, int p) {
  if (!gl.is_irreducible(p)) throw NotIrreducible(std::to_string(p));
}

}  // namespace

int toggle(const GammaLabeling& gl, int p, int y) {
  require_irreducible(gl, p);
  int d = gl.down_neighbor(y, p);
  if (d >= 0) return d;
  int u = gl.up_neighbor(y, p);
  return u >= 0 ? u : y;
}

Statistic toggle_plus(const GammaLabeling& gl, int p) {
  require_irreducible(gl, p);
  Statistic s(gl.size());
  for (int y = 0; y < gl.size(); ++y) s[y] = gl.up_neighbor(y, p) >= 0 ? 1 : 0;
  return s;
}

Statistic toggle_minus(const GammaLabeling& gl, int p) {
  require_irreducible(gl, p);
  Statistic s(gl.size());
  for (int y = 0; y < gl.size(); ++y) s[y] = gl.down_neighbor(y, p) >= 0 ? 1 : 0;
  return s;
}

Statistic toggle_stat(const GammaLabeling& gl, int p) { return toggle_plus(gl, p) - toggle_minus(gl, p); }

Statistic ddeg(const Hasse& h) {
  Statistic s(h.size());
  for (int y = 0; y < h.size(); ++y) s[y] = static_cast<long>(h.down(y).size());
  return s;
}

bool Distribution::valid() const {
  Rational total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) return false;
    total += w;
  }
  return total == 1;
}

Distribution uniform_distribution(const Hasse& h) {
  Distribution d;
  d.weights.assign(h.size(), Rational(1, h.size()));
  for (auto& w : d.weights) w.canonicalize();
  return d;
}

std::pair<std::vector<BigInt>, std::vector<BigInt>> chain_counts(const Hasse& h) {
  const int n = h.size();
  std::vector<BigInt> from(n, 0), to(n, 0);
  from[h.bottom()] = 1;
  for (int x : h.topo())
    for (int y : h.up(x)) from[y] += from[x];
  to[h.top()] = 1;
  for (auto it = h.topo().rbegin(); it != h.topo().rend(); ++it)
    for (int y : h.down(*it)) to[y] += to[*it];
  return {from, to};
}

Distribution maxchain_distribution(const Hasse& h) {
  auto [from, to] = chain_counts(h);
  Distribution d;
  d.weights.resize(h.size());
  BigInt mass = 0;
  for (int x = 0; x < h.size(); ++x) mass += from[x] * to[x];
  for (int x = 0; x < h.size(); ++x) {
    d.weights[x] = Rational(from[x] * to[x], mass);
    d.weights[x].canonicalize();
  }
  return d;
}

Distribution multichain_distribution(const Hasse& h, int m) {
  if (m < 0) throw std::invalid_argument("multichain length must be nonnegative");
  const int n = h.size();
  const auto downs = h.down_sets();
  const auto ups = h.up_sets();
  // E[s][x]: weakly increasing sequences of length s with every entry <= x; F likewise >= x.
  auto iterate = [&](const std::vector<Bitset>& rel) {
    std::vector<std::vector<BigInt>> t(m + 1, std::vector<BigInt>(n, 1));
    for (int s = 1; s <= m; ++s)
      for (int x = 0; x < n; ++x) {
        BigInt acc = 0;
        for (auto y = rel[x].find_first(); y != Bitset::npos; y = rel[x].find_next(y)) acc += t[s - 1][y];
        t[s][x] = acc;
      }
    return t;
  };
  auto E = iterate(downs), F = iterate(ups);
  auto strict = [](const std::vector<std::vector<BigInt>>& t, int s, int x) -> BigInt {
    return s == 0 ? BigInt(1) : BigInt(t[s][x] - t[s - 1][x]);
  };
  std::vector<BigInt> contain(n, 0);
  BigInt mass = 0;
  for (int p = 0; p < n; ++p) {
    for (int s = 0; s <= m; ++s)
      for (int r = 0; r + s <= m; ++r) contain[p] += strict(E, s, p) * strict(F, r, p);
    mass += contain[p];
  }
  Distribution d;
  d.weights.resize(n);
  for (int p = 0; p < n; ++p) {
    d.weights[p] = Rational(contain[p], mass);
    d.weights[p].canonicalize();
  }
  return d;
}

Distribution orbit_uniform(std::size_t n, const std::vector<int>& orbit) {
  if (orbit.empty()) throw EmptyOrbit("orbit has no elements");
  Distribution d;
  d.weights.assign(n, 0);
  Rational w(1, static_cast<long>(orbit.size()));
  w.canonicalize();
  for (int x : orbit) d.weights.at(x) = w;
  return d;
}

Rational expectation(const Distribution& mu, const Statistic& f) {
  if (mu.size() != f.size()) throw DimensionMismatch("distribution and statistic sizes differ");
  Rational e = 0;
  for (std::size_t x = 0; x < mu.size(); ++x)
    if (sgn(mu.weights[x]) != 0) e += mu.weights[x] * f.values[x];
  return e;
}

bool is_toggle_symmetric(const Distribution& mu, const GammaLabeling& gl) {
  if (static_cast<int>(mu.size()) != gl.size()) throw DimensionMismatch("distribution size");
  const Hasse& h = gl.hasse();
  std::map<int, Rational> e;
  for (int y = 0; y < gl.size(); ++y) {
    for (int k : h.up_edges(y)) e[gl.label(k)] += mu.weights[y];
    for (int k : h.down_edges(y)) e[gl.label(k)] -= mu.weights[y];
  }
  for (const auto& [p, v] : e)
    if (sgn(v) != 0) return false;
  return true;
}

Rowmotion::Rowmotion(const GammaLabeling& gl) {
  const int n = gl.size();
  std::map<std::vector<int>, int> by_down;
  for (int x = 0; x < n; ++x)
    if (!by_down.emplace(gl.down_labels(x), x).second)
      throw LabelingMismatch("two elements share the same down-label set");
  image_.resize(n);
  preimage_.assign(n, -1);
  for (int y = 0; y < n; ++y) {
    auto it = by_down.find(gl.up_labels(y));
    if (it == by_down.end())
      throw LabelingMismatch("no element has down-labels equal to the up-labels of " + gl.hasse().payload(y));
    image_[y] = it->second;
    if (preimage_[it->second] >= 0) throw LabelingMismatch("rowmotion is not injective");
    preimage_[it->second] = y;
  }
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orb;
    for (int y = s; !seen[y]; y = image_[y]) {
      seen[y] = 1;
      orb.push_back(y);
    }
    orbits_.push_back(std::move(orb));
  }
}

BigInt Rowmotion::order() const {
  BigInt l = 1;
  for (const auto& o : orbits_) {
    BigInt s = static_cast<unsigned long>(o.size());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.get_mpz_t());
  }
  return l;
}

std::vector<Partition> young_interval_partitions(const SkewShape& sigma) {
  const Partition& lam = sigma.outer();
  const Partition& nu = sigma.inner();
  const int rows = lam.length();
  std::vector<Partition> out;
  std::vector<int> mu(rows);
  std::function<void(int)> rec = [&](int r) {
    if (r == rows) {
      out.emplace_back(mu);
      return;
    }
    int hi = lam.part(r + 1);
    if (r > 0) hi = std::min(hi, mu[r - 1]);
    for (int v = nu.part(r + 1); v <= hi; ++v) {
      mu[r] = v;
      rec(r + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.parts() < y.parts();
  });
  return out;
}

FiniteLattice young_interval(const SkewShape& sigma) {
  auto parts = young_interval_partitions(sigma);
  std::map<std::vector<int>, int> index;
  for (std::size_t k = 0; k < parts.size(); ++k) index[parts[k].parts()] = static_cast<int>(k);
  std::vector<std::string> payloads;
  std::vector<std::pair<int, int>> covers;
  const int rows = sigma.outer().length();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    payloads.push_back(parts[k].str());
    for (int r = 1; r <= rows; ++r) {
      std::vector<int> mu(rows);
      for (int q = 1; q <= rows; ++q) mu[q - 1] = parts[k].part(q);
      if (mu[r - 1] >= sigma.outer().part(r)) continue;
      if (r > 1 && mu[r - 2] <= mu[r - 1]) continue;
      ++mu[r - 1];
      covers.emplace_back(static_cast<int>(k), index.at(Partition(mu).parts()));
    }
  }
  return FiniteLattice::build(std::move(payloads), covers);
}

}  // namespace wcde
