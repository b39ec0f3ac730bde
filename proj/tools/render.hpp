#pragma once

// Disc pictures: limit points, marked-point ticks, chords and shaded regions.
// Output bytes depend only on the scene and the spec.

#include <string>
#include <vector>

#include "cluster_lattice/serialization.hpp"

namespace cluster_lattice::cli {

enum class RenderFormat { kSvg, kDot, kJson };

RenderFormat parse_render_format(std::string_view text);

struct RenderSpec {
  RenderFormat format = RenderFormat::kSvg;
  bool annotate = false;  // label limit points and decorations
  int size = 480;         // width = height in pixels
};

// Anticlockwise piece of the boundary from `from` to `to`.
struct BoundaryPiece {
  CirclePoint from;
  CirclePoint to;
};

// Convex hull of its boundary pieces, drawn as one shaded path.
struct Region {
  std::string kind;  // "aisle", "coaisle", "thick"
  std::vector<BoundaryPiece> pieces;
};

struct DiscScene {
  int n = 2;
  std::vector<Region> regions;
  std::vector<Arc> arcs;
  std::vector<Arc> dashed;
  std::vector<std::pair<std::string, CirclePoint>> labelled;  // decorations
};

DiscScene arcs_scene(int n, std::vector<Arc> arcs);
// One region per block whose part of the circle is non-empty.
DiscScene aisle_scene(const TStructure& ts);
DiscScene coaisle_scene(const TStructure& ts);
DiscScene thick_scene(const Partition& p);
// T solid, summands of Z solid, summands of W dashed.
DiscScene approx_scene(const TStructure& ts, const Arc& t);

// Marked(i, k) sits at ((i - 1) + 1 / (1 + e^{-k/4})) * 2π/n; a_i at (i - 1) * 2π/n.
double angle_of(const CirclePoint& p, int n);

std::string render_svg(const DiscScene& scene, const RenderSpec& spec);
Json scene_to_json(const DiscScene& scene);

}  // namespace cluster_lattice::cli
