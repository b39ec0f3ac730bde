#include "cluster_lattice/arc_objects.hpp"

#include <algorithm>
#include <string>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

ArcObject::ArcObject(std::vector<Arc> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

ArcObject ArcObject::from_pieces(std::span<const ArcOrZero> pieces) {
  std::vector<Arc> arcs;
  for (const auto& p : pieces) {
    if (p) arcs.push_back(*p);
  }
  return ArcObject(std::move(arcs));
}

ArcObject ArcObject::operator+(const ArcObject& other) const {
  std::vector<Arc> all = summands_;
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return ArcObject(std::move(all));
}

std::string_view to_string(TriangleKind kind) noexcept {
  switch (kind) {
    case TriangleKind::kExtension: return "extension";
    case TriangleKind::kZigZag: return "zigzag";
    case TriangleKind::kApproximation: return "approximation";
  }
  return "unknown";
}

TriangleKind parse_triangle_kind(std::string_view text) {
  if (text == "extension") return TriangleKind::kExtension;
  if (text == "zigzag") return TriangleKind::kZigZag;
  if (text == "approximation") return TriangleKind::kApproximation;
  throw ParseError("unknown triangle construction '" + std::string(text) + "'");
}

Arc suspend(const Arc& a, Offset m) { return shift(a, -m); }

ArcObject suspend(const ArcObject& obj, Offset m) {
  std::vector<Arc> out;
  out.reserve(obj.size());
  for (const auto& a : obj.summands()) out.push_back(suspend(a, m));
  return ArcObject(std::move(out));
}

int hom_dim(const Arc& x, const Arc& y) { return cross(x, suspend(y, -1)) ? 1 : 0; }

namespace {

// Closed cyclic interval [lo, hi] read anticlockwise.
bool in_closed(const CirclePoint& lo, const CirclePoint& p, const CirclePoint& hi) {
  return p == lo || p == hi || cyclic_lt3(lo, p, hi);
}

// Anticlockwise order starting just after `from`: smaller means met earlier.
bool walks_before(const CirclePoint& from, const CirclePoint& a, const CirclePoint& b) {
  return cyclic_lt3(from, a, b);
}

}  // namespace

bool factors_through(const Arc& x, const Arc& y, const Arc& s) {
  const CirclePoint xs[2] = {x.lo(), x.hi()};
  const CirclePoint ys[2] = {y.lo(), y.hi()};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const auto& y0 = xs[i];
      const auto& y1 = xs[1 - i];
      const auto& y0p = ys[j];
      const auto& y1p = ys[1 - j];
      const auto y0p_next = shift(y0p, 1);
      const auto y1p_next = shift(y1p, 1);
      if (!(cyclic_lt3(y0, y0p_next, y1) && cyclic_lt3(y0p_next, y1, y1p_next) &&
            cyclic_lt3(y1, y1p_next, y0))) {
        continue;
      }
      const auto fits = [&](const CirclePoint& s0, const CirclePoint& s1) {
        return in_closed(y0, s0, y0p) && in_closed(y1, s1, y1p);
      };
      return fits(s.lo(), s.hi()) || fits(s.hi(), s.lo());
    }
  }
  throw NoNonzeroMorphism("no non-zero morphism " + format_arc(x) + " -> " + format_arc(y));
}

Triangle cocone_of_crossing(const Arc& yp, const Arc& y) {
  if (!cross(yp, y)) {
    throw NotCrossing(format_arc(yp) + " and " + format_arc(y) + " do not cross");
  }
  const auto& y0 = y.lo();
  const auto& y1 = y.hi();
  // The endpoint of yp strictly between y0 and y1 is y0'.
  const bool lo_between = cyclic_lt3(y0, yp.lo(), y1);
  const auto& y0p = lo_between ? yp.lo() : yp.hi();
  const auto& y1p = lo_between ? yp.hi() : yp.lo();
  const ArcOrZero pieces[2] = {make_arc(y0, y0p), make_arc(y1, y1p)};
  return Triangle{ArcObject({yp}), ArcObject::from_pieces(pieces), ArcObject({y}),
                  TriangleKind::kExtension};
}

Triangle zigzag_cone(const Arc& x, std::span<const Arc> ys) {
  const auto& p = x.lo();
  const auto& pp = x.hi();
  struct Labeled {
    CirclePoint near;  // y_j' in (p, p')
    CirclePoint far;   // y_j in (p', p)
  };
  std::vector<Labeled> labeled;
  labeled.reserve(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    const auto& y = ys[j];
    if (!cross(x, y)) {
      throw PreconditionViolated(format_arc(y) + " does not cross " + format_arc(x));
    }
    for (std::size_t k = 0; k < j; ++k) {
      if (ys[k] == y) throw PreconditionViolated("duplicate arc " + format_arc(y));
      if (cross(ys[k], y)) {
        throw PreconditionViolated(format_arc(ys[k]) + " crosses " + format_arc(y));
      }
    }
    const bool lo_near = cyclic_lt3(p, y.lo(), pp);
    labeled.push_back(lo_near ? Labeled{y.lo(), y.hi()} : Labeled{y.hi(), y.lo()});
  }
  std::sort(labeled.begin(), labeled.end(), [&](const Labeled& a, const Labeled& b) {
    return a.near != b.near ? walks_before(p, a.near, b.near) : walks_before(pp, b.far, a.far);
  });

  std::vector<ArcOrZero> pieces;
  pieces.reserve(labeled.size() + 1);
  if (labeled.empty()) {
    pieces.push_back(x);
  } else {
    pieces.push_back(make_arc(p, labeled.front().far));
    for (std::size_t j = 0; j + 1 < labeled.size(); ++j) {
      pieces.push_back(make_arc(labeled[j].near, labeled[j + 1].far));
    }
    pieces.push_back(make_arc(labeled.back().near, pp));
  }
  return Triangle{ArcObject({x}), ArcObject::from_pieces(pieces),
                  ArcObject(std::vector<Arc>(ys.begin(), ys.end())), TriangleKind::kZigZag};
}

std::vector<CirclePoint> endpoints(const ArcObject& obj) {
  std::vector<CirclePoint> out;
  out.reserve(2 * obj.size());
  for (const auto& a : obj.summands()) {
    out.push_back(a.lo());
    out.push_back(a.hi());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cluster_lattice
