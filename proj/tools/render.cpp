#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice::cli {

namespace {

constexpr Offset kTickRadius = 8;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Canvas {
  double c;
  double r;

  double x(double theta, double scale = 1.0) const { return c + scale * r * std::cos(theta); }
  double y(double theta, double scale = 1.0) const { return c - scale * r * std::sin(theta); }
  std::string at(double theta, double scale = 1.0) const { return num(x(theta, scale)) + "," + num(y(theta, scale)); }
};

std::string region_path(const Region& region, int n, const Canvas& cv) {
  std::ostringstream d;
  bool first = true;
  for (const auto& piece : region.pieces) {
    const double a = angle_of(piece.from, n);
    double b = angle_of(piece.to, n);
    if (b < a) b += 2 * std::numbers::pi;  // Limit(1) closing the last interval
    d << (first ? "M" : " L") << cv.at(a);
    // Screen y points down, so anticlockwise on the page is sweep flag 0.
    d << " A" << num(cv.r) << "," << num(cv.r) << " 0 " << (b - a > std::numbers::pi ? 1 : 0) << " 0 " << cv.at(b);
    first = false;
  }
  d << " Z";
  return d.str();
}

std::string limit_name(int i) { return "a" + std::to_string(i); }

}  // namespace

RenderFormat parse_render_format(std::string_view text) {
  if (text == "svg") return RenderFormat::kSvg;
  if (text == "dot") return RenderFormat::kDot;
  if (text == "json") return RenderFormat::kJson;
  throw ParseError("unknown format '" + std::string(text) + "' (svg, dot or json)");
}

double angle_of(const CirclePoint& p, int n) {
  const double sector = 2 * std::numbers::pi / n;
  if (p.is_limit()) return (p.interval() - 1) * sector;
  const double t = 1.0 / (1.0 + std::exp(-static_cast<double>(p.offset()) / 4.0));
  return ((p.interval() - 1) + t) * sector;
}

DiscScene arcs_scene(int n, std::vector<Arc> arcs) {
  ModelParams model(n);
  for (const auto& a : arcs) validate_arc(a, model);
  std::sort(arcs.begin(), arcs.end());
  return DiscScene{n, {}, std::move(arcs), {}, {}};
}

DiscScene aisle_scene(const TStructure& ts) {
  DiscScene s{ts.n(), {}, {}, {}, {}};
  for (const auto& block : ts.partition().blocks()) {
    Region r{"aisle", {}};
    for (int i : block) {
      const auto pos = ts.position(i);
      if (pos.tier == IntervalPosition::kLower) continue;  // (a_i, a_i] is empty
      r.pieces.push_back({CirclePoint::limit(i), ts.decoration()[static_cast<std::size_t>(i - 1)]});
    }
    if (!r.pieces.empty()) s.regions.push_back(std::move(r));
  }
  for (int i = 1; i <= ts.n(); ++i) s.labelled.emplace_back("x" + std::to_string(i), ts.decoration()[static_cast<std::size_t>(i - 1)]);
  return s;
}

DiscScene coaisle_scene(const TStructure& ts) {
  DiscScene s{ts.n(), {}, {}, {}, {}};
  const auto model = ts.model();
  const auto c = coaisle_presentation(ts);
  for (const auto& block : c.partition.blocks()) {
    Region r{"coaisle", {}};
    for (int i : block) {
      const auto& y = c.bounds[static_cast<std::size_t>(i - 1)];
      const auto upper = CirclePoint::limit(model.wrap(i + 1));
      if (y.is_limit() && y.interval() != i) continue;  // [a_{i+1}, a_{i+1}) is empty
      r.pieces.push_back({y, upper});
    }
    if (!r.pieces.empty()) s.regions.push_back(std::move(r));
  }
  for (int i = 1; i <= ts.n(); ++i) s.labelled.emplace_back("y" + std::to_string(i), c.bounds[static_cast<std::size_t>(i - 1)]);
  return s;
}

DiscScene thick_scene(const Partition& p) {
  DiscScene s{p.n(), {}, {}, {}, {}};
  ModelParams model(p.n());
  for (const auto& block : p.blocks()) {
    Region r{"thick", {}};
    for (int i : block) r.pieces.push_back({CirclePoint::limit(i), CirclePoint::limit(model.wrap(i + 1))});
    s.regions.push_back(std::move(r));
  }
  return s;
}

DiscScene approx_scene(const TStructure& ts, const Arc& t) {
  auto s = aisle_scene(ts);
  const auto tri = approx_triangle(ts, t);
  s.arcs.push_back(t);
  for (const auto& a : tri.first.summands()) s.arcs.push_back(a);
  s.dashed = tri.last.summands();
  std::sort(s.arcs.begin(), s.arcs.end());
  s.arcs.erase(std::unique(s.arcs.begin(), s.arcs.end()), s.arcs.end());
  return s;
}

std::string render_svg(const DiscScene& scene, const RenderSpec& spec) {
  if (spec.size < 64 || spec.size > 8192) throw ValidationError("size must lie in [64, 8192]");
  const int n = scene.n;
  const Canvas cv{spec.size / 2.0, spec.size / 2.0 - 40.0};
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size << "\" height=\"" << spec.size
    << "\" viewBox=\"0 0 " << spec.size << " " << spec.size << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& region : scene.regions) {
    const char* fill = region.kind == "coaisle" ? "#9a9a9a" : "#d9d9d9";
    o << "<path class=\"region " << region.kind << "\" d=\"" << region_path(region, n, cv) << "\" fill=\"" << fill
      << "\" stroke=\"none\"/>\n";
  }
  o << "<circle cx=\"" << num(cv.c) << "\" cy=\"" << num(cv.c) << "\" r=\"" << num(cv.r)
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  std::set<CirclePoint> endpoints;
  for (const auto* list : {&scene.arcs, &scene.dashed}) {
    for (const auto& a : *list) {
      endpoints.insert(a.lo());
      endpoints.insert(a.hi());
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (Offset k = -kTickRadius; k <= kTickRadius; ++k) endpoints.insert(CirclePoint::marked(i, k));
  }
  for (const auto& p : endpoints) {
    const double th = angle_of(p, n);
    o << "<line class=\"tick\" x1=\"" << num(cv.x(th, 0.97)) << "\" y1=\"" << num(cv.y(th, 0.97)) << "\" x2=\""
      << num(cv.x(th, 1.03)) << "\" y2=\"" << num(cv.y(th, 1.03)) << "\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
  }
  const auto chord = [&](const Arc& a, bool dashed) {
    const double s = angle_of(a.lo(), n);
    const double t = angle_of(a.hi(), n);
    o << "<line class=\"arc\" x1=\"" << num(cv.x(s)) << "\" y1=\"" << num(cv.y(s)) << "\" x2=\"" << num(cv.x(t))
      << "\" y2=\"" << num(cv.y(t)) << "\" stroke=\"black\" stroke-width=\"1.2\""
      << (dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
  };
  for (const auto& a : scene.arcs) chord(a, false);
  for (const auto& a : scene.dashed) chord(a, true);

  for (int i = 1; i <= n; ++i) {
    const double th = angle_of(CirclePoint::limit(i), n);
    o << "<circle class=\"limit\" cx=\"" << num(cv.x(th)) << "\" cy=\"" << num(cv.y(th))
      << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
    if (spec.annotate) {
      o << "<text x=\"" << num(cv.x(th, 1.12)) << "\" y=\"" << num(cv.y(th, 1.12))
        << "\" font-size=\"12\" text-anchor=\"middle\">" << limit_name(i) << "</text>\n";
    }
  }
  if (spec.annotate) {
    for (const auto& [name, p] : scene.labelled) {
      if (p.is_limit()) continue;
      const double th = angle_of(p, n);
      o << "<circle class=\"decoration\" cx=\"" << num(cv.x(th)) << "\" cy=\"" << num(cv.y(th))
        << "\" r=\"2.5\" fill=\"black\"/>\n";
      o << "<text x=\"" << num(cv.x(th, 1.12)) << "\" y=\"" << num(cv.y(th, 1.12))
        << "\" font-size=\"11\" text-anchor=\"middle\">" << name << "</text>\n";
    }
  }
  o << "</svg>\n";
  return o.str();
}

Json scene_to_json(const DiscScene& scene) {
  Json regions = Json::array();
  for (const auto& r : scene.regions) {
    Json pieces = Json::array();
    for (const auto& p : r.pieces) pieces.push_back({format_point(p.from), format_point(p.to)});
    regions.push_back({{"kind", r.kind}, {"pieces", pieces}});
  }
  Json arcs = Json::array();
  for (const auto& a : scene.arcs) arcs.push_back(format_arc(a));
  Json dashed = Json::array();
  for (const auto& a : scene.dashed) dashed.push_back(format_arc(a));
  return {{"n", scene.n}, {"regions", regions}, {"arcs", arcs}, {"dashed", dashed}};
}

}  // namespace cluster_lattice::cli
