#pragma once

// t-structures named by decorated non-crossing partitions (P, x). The aisle of
// (P, x) is the additive closure of the arcs with both endpoints in
// ⋃_{i ∈ B} (a_i, x_i] for a single block B of P.

#include <compare>
#include <span>
#include <vector>

#include "cluster_lattice/arc_objects.hpp"
#include "cluster_lattice/circle.hpp"
#include "cluster_lattice/noncrossing.hpp"

namespace cluster_lattice {

// Entry i of a decoration is a point of the closed interval [a_i, a_{i+1}]:
// Limit(i), some Marked(i, k), or Limit(i+1) (written Limit(1) when i = n).
using Decoration = std::vector<CirclePoint>;

// Order-preserving coordinates on [a_i, a_{i+1}].
struct IntervalPosition {
  enum Tier : int { kLower = 0, kInterior = 1, kUpper = 2 };

  Tier tier;
  Offset offset;  // meaningful for kInterior only, zero otherwise

  static constexpr IntervalPosition lower() { return {kLower, 0}; }
  static constexpr IntervalPosition interior(Offset k) { return {kInterior, k}; }
  static constexpr IntervalPosition upper() { return {kUpper, 0}; }

  friend auto operator<=>(const IntervalPosition&, const IntervalPosition&) = default;
};

// Throws InvalidDecoration if x is not a point of [a_i, a_{i+1}].
IntervalPosition interval_position(int i, const CirclePoint& x, const ModelParams& model);
CirclePoint point_at(int i, IntervalPosition pos, const ModelParams& model);

// Compatibility of x with the exhaustive non-crossing partition p:
//   x_i ∈ [a_i, a_{i+1}) if i is a singleton,
//   x_i ∈ (a_i, a_{i+1}] if i is an adjacency,
//   x_i ∈ (a_i, a_{i+1}) otherwise.
// Throws SizeMismatch on a length mismatch and ValidationError when p is not
// exhaustive or n < 2.
bool validate_decoration(const Partition& p, const Decoration& x);

class TStructure {
 public:
  // Throws InvalidDecoration (citing the singleton/adjacency rule) when x is
  // incompatible with p.
  TStructure(Partition partition, Decoration decoration);

  int n() const noexcept { return partition_.n(); }
  ModelParams model() const { return ModelParams(n()); }
  const Partition& partition() const noexcept { return partition_; }
  const Decoration& decoration() const noexcept { return decoration_; }
  IntervalPosition position(int i) const { return positions_.at(static_cast<std::size_t>(i - 1)); }

  // Marked(i, k) ∈ (a_i, x_i].
  bool in_aisle_region(int i, Offset k) const;
  // Marked(i, k) ∈ [y_i, a_{i+1}) where y_i = x_i^- for marked x_i, else x_i.
  bool in_coaisle_region(int i, Offset k) const;

  friend bool operator==(const TStructure& a, const TStructure& b) {
    return a.partition_ == b.partition_ && a.decoration_ == b.decoration_;
  }

 private:
  Partition partition_;
  Decoration decoration_;
  std::vector<IntervalPosition> positions_;
};

struct CoaislePresentation {
  Partition partition;             // Kreweras complement
  std::vector<CirclePoint> bounds;  // y_1, ..., y_n

  friend bool operator==(const CoaislePresentation&, const CoaislePresentation&) = default;
};

// (partition, Z-indices): the equivalence class of all (P, x') with the same
// set of indices carrying a marked decoration.
class EquivClass {
 public:
  // Throws ValidationError unless z_indices contains every i that is neither
  // a singleton nor an adjacency.
  EquivClass(Partition partition, std::vector<int> z_indices);

  const Partition& partition() const noexcept { return partition_; }
  const std::vector<int>& z_indices() const noexcept { return z_indices_; }

  friend bool operator==(const EquivClass&, const EquivClass&) = default;
  friend auto operator<=>(const EquivClass& a, const EquivClass& b) {
    if (auto c = a.partition_ <=> b.partition_; c != 0) return c;
    return a.z_indices_ <=> b.z_indices_;
  }

 private:
  Partition partition_;
  std::vector<int> z_indices_;
};

bool aisle_contains(const TStructure& ts, const Arc& a);
CoaislePresentation coaisle_presentation(const TStructure& ts);
bool coaisle_contains(const TStructure& ts, const Arc& a);

// One arc {x_i^{(-2)}, x_i} per marked x_i.
std::vector<Arc> heart(const TStructure& ts);

// Smallest t-structure whose aisle contains every input arc.
TStructure aisle_generated(std::span<const Arc> arcs, const ModelParams& model);

// Connecting chords {z'_i, z_i} that came out trivial and were dropped.
struct ApproxTrace {
  std::vector<std::pair<CirclePoint, CirclePoint>> dropped_connectors;
};

// Approximation triangle Z -> T -> W -> ΣZ with Z in the aisle and W in the
// coaisle, returned as Triangle(Z, T, W, kApproximation).
Triangle approx_triangle(const TStructure& ts, const Arc& t, ApproxTrace* trace = nullptr);

bool is_left_nondegenerate(const TStructure& ts);
bool is_right_nondegenerate(const TStructure& ts);
bool is_nondegenerate(const TStructure& ts);
bool is_bounded_above(const TStructure& ts);
bool is_bounded_below(const TStructure& ts);

EquivClass equiv_class(const TStructure& ts);
bool equiv_eq(const TStructure& s, const TStructure& t);

// Member of the class: marked indices decorated at offset `offset`, the other
// indices at their forced limit point.
TStructure representative(const EquivClass& c, Offset offset = 0);

// Every (P, x) with P ∈ NC_n and marked decorations restricted to offsets in
// [lo, hi]; limit decorations included wherever compatible.
std::vector<TStructure> enumerate_window_tstructures(const ModelParams& model, Offset lo, Offset hi,
                                                     int guard = kDefaultEnumerationGuard);

// Shifts every marked decoration by m steps anticlockwise.
TStructure shift(const TStructure& ts, Offset m);

}  // namespace cluster_lattice
