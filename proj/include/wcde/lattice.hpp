#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wcde/rational.hpp"
#include "wcde/shape.hpp"

namespace wcde {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
  int lo = 0;
  int hi = 0;
};

// Cover graph of a finite bounded poset.
class Hasse {
 public:
  Hasse(std::vector<std::string> payloads, const std::vector<std::pair<int, int>>& covers);

  int size() const { return static_cast<int>(payload_.size()); }
  const std::string& payload(int x) const { return payload_[x]; }
  const std::vector<std::string>& payloads() const { return payload_; }
  const std::vector<int>& up(int x) const { return up_[x]; }
  const std::vector<int>& down(int x) const { return down_[x]; }
  const std::vector<int>& up_edges(int x) const { return up_e_[x]; }
  const std::vector<int>& down_edges(int x) const { return down_e_[x]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int edge_id(int lo, int hi) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const std::vector<int>& topo() const { return topo_; }

  // up_sets()[x] = {y : x <= y}; down_sets()[y] = {x : x <= y}.
  std::vector<Bitset> up_sets() const;
  std::vector<Bitset> down_sets() const;

 private:
  std::vector<std::string> payload_;
  std::vector<std::vector<int>> up_, down_, up_e_, down_e_;
  std::vector<Edge> edges_;
  std::vector<int> topo_;
  int bottom_ = 0, top_ = 0;
};

class FiniteLattice {
 public:
  static FiniteLattice build(std::vector<std::string> payloads,
                             const std::vector<std::pair<int, int>>& covers);

  const Hasse& hasse() const { return *hasse_; }
  std::shared_ptr<const Hasse> hasse_ptr() const { return hasse_; }
  int size() const { return hasse_->size(); }
  const std::string& payload(int x) const { return hasse_->payload(x); }
  bool leq(int x, int y) const { return up_[x][y]; }
  int join(int x, int y) const { return join_[idx(x, y)]; }
  int meet(int x, int y) const { return meet_[idx(x, y)]; }
  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& down_set(int x) const { return down_[x]; }
  std::vector<int> join_irreducibles() const;
  FiniteLattice dual() const;

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * size() + y; }
  std::shared_ptr<const Hasse> hasse_;
  std::vector<Bitset> up_, down_;
  std::vector<std::uint16_t> join_, meet_;
};

class GammaLabeling {
 public:
  // edge_label[e] is the element index of the join-irreducible labelling edge e.
  GammaLabeling(std::shared_ptr<const Hasse> h, std::vector<int> edge_label);

  const Hasse& hasse() const { return *hasse_; }
  int size() const { return hasse_->size(); }
  int label(int edge) const { return label_[edge]; }
  const std::vector<int>& labels() const { return label_; }
  const std::vector<int>& irreducibles() const { return irr_; }
  bool is_irreducible(int p) const;
  // Sorted label sets D^gamma(y), U^gamma(y).
  const std::vector<int>& down_labels(int y) const { return down_labels_[y]; }
  const std::vector<int>& up_labels(int y) const { return up_labels_[y]; }
  // Neighbour across the incident edge labelled p, or -1.
  int up_neighbor(int y, int p) const;
  int down_neighbor(int y, int p) const;

 private:
  std::shared_ptr<const Hasse> hasse_;
  std::vector<int> label_;
  std::vector<int> irr_;
  std::vector<char> is_irr_;
  std::vector<std::vector<int>> down_labels_, up_labels_;
};

GammaLabeling gamma_labeling(const FiniteLattice& L);

struct Statistic {
  std::vector<Rational> values;

  Statistic() = default;
  explicit Statistic(std::size_t n) : values(n) {}
  static Statistic constant(std::size_t n, const Rational& c);
  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t x) const { return values[x]; }
  Rational& operator[](std::size_t x) { return values[x]; }
  Statistic& operator+=(const Statistic& o);
  Statistic& operator-=(const Statistic& o);
  Statistic& operator*=(const Rational& c);
  bool operator==(const Statistic&) const = default;
};
Statistic operator+(Statistic a, const Statistic& b);
Statistic operator-(Statistic a, const Statistic& b);
Statistic operator*(const Rational& c, Statistic a);

int toggle(const GammaLabeling& gl, int p, int y);
Statistic toggle_plus(const GammaLabeling& gl, int p);
Statistic toggle_minus(const GammaLabeling& gl, int p);
Statistic toggle_stat(const GammaLabeling& gl, int p);
Statistic ddeg(const Hasse& h);

struct Distribution {
  std::vector<Rational> weights;
  std::size_t size() const { return weights.size(); }
  bool valid() const;  // nonnegative, mass 1
};

Distribution uniform_distribution(const Hasse& h);
Distribution maxchain_distribution(const Hasse& h);
Distribution multichain_distribution(const Hasse& h, int m);
Distribution orbit_uniform(std::size_t n, const std::vector<int>& orbit);
// Maximal chain counts: bottom->x and x->top.
std::pair<std::vector<BigInt>, std::vector<BigInt>> chain_counts(const Hasse& h);

Rational expectation(const Distribution& mu, const Statistic& f);
bool is_toggle_symmetric(const Distribution& mu, const GammaLabeling& gl);

class Rowmotion {
 public:
  explicit Rowmotion(const GammaLabeling& gl);
  int operator()(int y) const { return image_[y]; }
  int inverse(int x) const { return preimage_[x]; }
  const std::vector<int>& images() const { return image_; }
  // Each orbit starts at its smallest index and follows row.
  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  BigInt order() const;

 private:
  std::vector<int> image_, preimage_;
  std::vector<std::vector<int>> orbits_;
};

std::vector<Partition> young_interval_partitions(const SkewShape& sigma);
FiniteLattice young_interval(const SkewShape& sigma);

}  // namespace wcde
