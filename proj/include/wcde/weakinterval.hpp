#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcde/lattice.hpp"
#include "wcde/perm.hpp"

namespace wcde {

struct GrassLabel {
  int i = 0;
  int j = 0;
  std::vector<int> x;  // ascending subset of {i+1, ..., j-1}

  Permutation perm(int n) const;
  std::string str() const;
  bool contains(int v) const;
  auto operator<=>(const GrassLabel&) const = default;
};

GrassLabel explicit_gamma_label(const Permutation& u, const Permutation& w);
// Label of the cover w s_k < w, where k is a descent of w.
GrassLabel cover_label(const Permutation& w, int k);

class WeakInterval {
 public:
  static WeakInterval build(const Permutation& w);

  const Permutation& top() const { return w_; }
  int n() const { return w_.size(); }
  int size() const { return static_cast<int>(elements_.size()); }
  const Permutation& element(int x) const { return elements_[x]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::uint64_t mask(int x) const { return masks_[x]; }
  int index_of(const Permutation& u) const;  // -1 if u is not in the interval
  int index_of_mask(std::uint64_t m) const;

  const Hasse& hasse() const { return *hasse_; }
  std::shared_ptr<const Hasse> hasse_ptr() const { return hasse_; }
  const GrassLabel& edge_label(int e) const { return labels_[e]; }
  GammaLabeling gamma_labeling() const;
  FiniteLattice lattice() const;

 private:
  Permutation w_;
  std::vector<Permutation> elements_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, int> index_;
  std::shared_ptr<const Hasse> hasse_;
  std::vector<GrassLabel> labels_;
};

struct AggregatedToggles {
  Statistic plus, minus, total;
};
AggregatedToggles aggregated_toggleability(const WeakInterval& iv, RootPair pair);

// +1 if (i,j) can be added to Inv^{-1}(u) inside [e,w], -1 if it can be removed, else 0.
int aggregated_toggle_value(const Permutation& u, const Permutation& w, RootPair pair);

using MaxChain = std::vector<Permutation>;
MaxChain chain_involution(const WeakInterval& iv, const MaxChain& c, RootPair pair);
int chain_statistic(const MaxChain& c, const Permutation& w, RootPair pair);
// Depth-first enumeration; the callback returns false to stop.
void for_each_max_chain(const WeakInterval& iv, const std::function<bool(const MaxChain&)>& f);
bool is_max_chain(const WeakInterval& iv, const MaxChain& c);

BigInt reduced_word_count(const Permutation& w);

}  // namespace wcde
