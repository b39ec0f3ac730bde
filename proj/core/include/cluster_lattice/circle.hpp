#pragma once

// Combinatorial model of an admissible subset of the circle with n two-sided
// limit points a_1, ..., a_n (anticlockwise). The open interval (a_i, a_{i+1})
// is a copy of the integers: Marked(i, k) is its point at offset k, offsets
// increase anticlockwise and are unbounded toward both limit endpoints.
//
// All values here are immutable and all functions are pure.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cluster_lattice {

using Offset = std::int64_t;

// Number of limit points. Construction rejects n < 2.
class ModelParams {
 public:
  explicit ModelParams(int n);

  int n() const noexcept { return n_; }

  // Cyclic index normalization into [1, n].
  int wrap(int i) const noexcept { return ((i - 1) % n_ + n_) % n_ + 1; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
};

// Position of a point in the linear order obtained by cutting the circle at a_1:
// Limit(i) < Marked(i, k) < Marked(i, k+1) < Limit(i+1).
struct LinearKey {
  int interval;
  int tier;  // 0 for the limit point a_i, 1 for points of (a_i, a_{i+1})
  Offset offset;

  friend auto operator<=>(const LinearKey&, const LinearKey&) = default;
};

class CirclePoint {
 public:
  enum class Kind : std::uint8_t { kLimit, kMarked };

  static constexpr CirclePoint limit(int interval) noexcept {
    return CirclePoint(Kind::kLimit, interval, 0);
  }
  static constexpr CirclePoint marked(int interval, Offset offset) noexcept {
    return CirclePoint(Kind::kMarked, interval, offset);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_limit() const noexcept { return kind_ == Kind::kLimit; }
  constexpr bool is_marked() const noexcept { return kind_ == Kind::kMarked; }
  constexpr int interval() const noexcept { return interval_; }
  // Zero for limit points.
  constexpr Offset offset() const noexcept { return offset_; }

  constexpr LinearKey key() const noexcept {
    return LinearKey{interval_, is_limit() ? 0 : 1, offset_};
  }

  friend constexpr bool operator==(const CirclePoint& a, const CirclePoint& b) noexcept {
    return a.key() == b.key();
  }
  // Linear order cut at a_1.
  friend constexpr auto operator<=>(const CirclePoint& a, const CirclePoint& b) noexcept {
    return a.key() <=> b.key();
  }

 private:
  constexpr CirclePoint(Kind kind, int interval, Offset offset) noexcept
      : kind_(kind), interval_(interval), offset_(offset) {}

  Kind kind_;
  int interval_;
  Offset offset_;
};

// Throws ValidationError when the interval index is outside [1, n].
void validate_point(const CirclePoint& p, const ModelParams& model);

// Checked linear key.
LinearKey linear_key(const CirclePoint& p, const ModelParams& model);

// True iff x, y, z are pairwise distinct and met in this order when walking
// anticlockwise. Non-distinct triples give false.
bool cyclic_lt3(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) noexcept;

// z^{(m)}: m steps anticlockwise (negative m walks clockwise). Limit points
// cannot be shifted.
CirclePoint shift(const CirclePoint& p, Offset m);

// q in {p^-, p, p^+}. Points in different intervals are never adjacent.
bool is_trivial_pair(const CirclePoint& p, const CirclePoint& q) noexcept;

// A non-trivial 2-element subset of Z, stored with the smaller linear key first.
class Arc {
 public:
  const CirclePoint& lo() const noexcept { return lo_; }
  const CirclePoint& hi() const noexcept { return hi_; }

  bool has_endpoint(const CirclePoint& p) const noexcept { return p == lo_ || p == hi_; }

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;

 private:
  friend std::optional<Arc> make_arc(const CirclePoint&, const CirclePoint&);
  Arc(const CirclePoint& lo, const CirclePoint& hi) noexcept : lo_(lo), hi_(hi) {}

  CirclePoint lo_;
  CirclePoint hi_;
};

// The zero object is represented by an empty optional: trivial pairs
// {z, z^-}, {z, z}, {z, z^+} correspond to it.
using ArcOrZero = std::optional<Arc>;

// Throws ValidationError if either point is a limit point.
ArcOrZero make_arc(const CirclePoint& p, const CirclePoint& q);

// Like make_arc, but a trivial pair is a ValidationError.
Arc arc_of(const CirclePoint& p, const CirclePoint& q);

// Throws ValidationError when an endpoint lies outside the model.
void validate_arc(const Arc& a, const ModelParams& model);

// Strict cyclic interleaving of endpoints.
bool cross(const Arc& a, const Arc& b) noexcept;

// Shifts both endpoints by m steps anticlockwise; shift(a, -1) is the
// suspension of a. Shifting within an interval never meets a limit point.
Arc shift(const Arc& a, Offset m);

// One of (a,b), [a,b), (a,b], [a,b] as a subset of the closure, read
// anticlockwise from lower to upper. Equal endpoints denote either the single
// point (both ends closed) or the empty set.
struct HalfOpenRegion {
  CirclePoint lower;
  CirclePoint upper;
  bool lower_open = true;
  bool upper_open = false;
};

bool region_is_empty(const HalfOpenRegion& r) noexcept;
bool region_contains(const HalfOpenRegion& r, const CirclePoint& p) noexcept;

// Text syntax: "a3" is Limit(3), "2:-5" is Marked(2, -5), "[1:0,2:3]" is an arc.
CirclePoint parse_point(std::string_view text);
std::string format_point(const CirclePoint& p);
Arc parse_arc(std::string_view text);
std::string format_arc(const Arc& a);
// Semicolon-separated arcs: "[1:0,3:0];[2:0,4:0]". Empty text gives no arcs.
std::vector<Arc> parse_arc_list(std::string_view text);
std::string format_arc_list(const std::vector<Arc>& arcs);

}  // namespace cluster_lattice
