#pragma once

// Objects of the discrete cluster category as finite multisets of arcs, with
// suspension, Hom dimensions, factorization and the two triangle
// constructions used throughout (extension of crossing arcs, zig-zag cone).

#include <span>
#include <string_view>
#include <vector>

#include "cluster_lattice/circle.hpp"

namespace cluster_lattice {

// Isomorphism class of an object: a sorted multiset of arcs. Empty is zero.
class ArcObject {
 public:
  ArcObject() = default;
  explicit ArcObject(std::vector<Arc> summands);
  // Trivial pieces are dropped.
  static ArcObject from_pieces(std::span<const ArcOrZero> pieces);

  const std::vector<Arc>& summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }
  std::size_t size() const noexcept { return summands_.size(); }

  ArcObject operator+(const ArcObject& other) const;  // direct sum

  friend bool operator==(const ArcObject&, const ArcObject&) = default;

 private:
  std::vector<Arc> summands_;
};

enum class TriangleKind { kExtension, kZigZag, kApproximation };

std::string_view to_string(TriangleKind kind) noexcept;
TriangleKind parse_triangle_kind(std::string_view text);

// Certificate for a distinguished triangle first -> middle -> last -> Σ first
// produced by one of the constructions below.
struct Triangle {
  ArcObject first;
  ArcObject middle;
  ArcObject last;
  TriangleKind construction;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

// Σ^m: every endpoint moves m steps clockwise.
ArcObject suspend(const ArcObject& obj, Offset m);
Arc suspend(const Arc& a, Offset m);

// dim Hom(x, y) in {0, 1}: 1 iff x crosses Σ^{-1} y.
int hom_dim(const Arc& x, const Arc& y);

// Whether the non-zero morphism x -> y factors through the indecomposable s.
// Throws NoNonzeroMorphism unless x and y sit as y0 < y0'^+ < y1 < y1'^+.
bool factors_through(const Arc& x, const Arc& y, const Arc& s);

// Triangle(yp, X ⊕ Z, y) for crossing arcs with y0 < y0' < y1 < y1', where X
// and Z are the chords {y0, y0'} and {y1, y1'}; trivial chords are dropped.
// Throws NotCrossing.
Triangle cocone_of_crossing(const Arc& yp, const Arc& y);

// Triangle(x, C, ⊕ ys) for mutually non-crossing ys that all cross x. Writing
// x = {p, p'} and ordering the ys so that
//   p < y_1' < ... < y_m' < p' < y_m < ... < y_1 < p,
// C is the sum of {p, y_1}, {y_1', y_2}, ..., {y_{m-1}', y_m}, {y_m', p'}.
// Throws PreconditionViolated for crossing or duplicate ys, or a y missing x.
Triangle zigzag_cone(const Arc& x, std::span<const Arc> ys);

// Sorted endpoint multiset of an object.
std::vector<CirclePoint> endpoints(const ArcObject& obj);

}  // namespace cluster_lattice
