#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcde/perm.hpp"

namespace wcde {

struct Box {
  int row = 0;
  int col = 0;
  auto operator<=>(const Box&) const = default;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  bool contains(const Partition& o) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  static SkewShape parse(std::string_view text);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  std::vector<Box> boxes() const;
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Box b) const;
  bool straight() const { return inner_.empty(); }

  // Empty rows and columns removed.
  SkewShape normalized() const;
  int height() const;
  int width() const;
  bool connected() const;
  SkewShape transpose() const;
  SkewShape rotate() const;  // 180 degrees inside the bounding rectangle

  std::string str() const;

  auto operator<=>(const SkewShape&) const = default;
  bool operator==(const SkewShape&) const = default;

 private:
  Partition outer_, inner_;
};

SkewShape staircase(int d);  // delta_d = (d-1, ..., 1)
SkewShape rectangle(int a, int b);  // b^a: a rows of length b

class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Box> boxes);

  const std::vector<Box>& boxes() const { return boxes_; }
  int size() const { return static_cast<int>(boxes_.size()); }
  bool empty() const { return boxes_.empty(); }
  bool contains(Box b) const;
  std::vector<int> rows() const;
  std::vector<int> cols() const;
  Diagram transpose() const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<Box> boxes_;
};

Diagram to_diagram(const SkewShape& s);
Diagram to_diagram(const InversionSet& s);

Diagram rothe_diagram(const Permutation& w);
std::vector<Diagram> connected_components(const Diagram& d);

struct SkewMatch {
  SkewShape shape;
  std::map<int, int> row_perm;  // source row -> shape row
  std::map<int, int> col_perm;  // source col -> shape col
};

bool verify_match(const Diagram& d, const SkewMatch& m);
// Normalized skew shapes with the given height and width; connected ones only if asked.
std::vector<SkewShape> enumerate_skew_shapes(int height, int width, bool connected_only);
std::optional<SkewMatch> match_skew_shape(const Diagram& d);
std::optional<SkewShape> skew_vexillary_shape(const Permutation& w);

struct CensusCounts {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t skew_vexillary = 0;
  std::uint64_t vexillary = 0;
  std::uint64_t grassmannian = 0;
  std::uint64_t inverse_grassmannian = 0;
  std::uint64_t dominant = 0;
  std::uint64_t fully_commutative = 0;
  std::uint64_t connected_balanced = 0;
  bool operator==(const CensusCounts&) const = default;
};
CensusCounts census(int n);
CensusCounts census_serial(int n);

// Lattice points (r, c) of the box grid at outward corners.
std::vector<std::pair<int, int>> outward_corners(const SkewShape& sigma);
bool is_balanced(const SkewShape& sigma);

SkewShape blowup(const SkewShape& sigma, int a, int b);
std::vector<SkewShape> enumerate_balanced(int a, int b);

std::optional<std::vector<Box>> cross_saturation(const Diagram& d, Box box);

using RookCoefficients = std::map<Box, long>;
RookCoefficients balanced_rook_coefficients(const SkewShape& sigma);
// Empty string when the three placement conditions hold.
std::string check_rook_coefficients(const SkewShape& sigma, const RookCoefficients& c);
RookCoefficients transport(const RookCoefficients& c, const SkewMatch& m);

}  // namespace wcde
