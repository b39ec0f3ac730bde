#include "cluster_lattice/tstructure.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

IntervalPosition interval_position(int i, const CirclePoint& x, const ModelParams& model) {
  validate_point(x, model);
  if (i < 1 || i > model.n()) throw InvalidDecoration("decoration index out of range");
  if (x.is_marked()) {
    if (x.interval() != i) {
      throw InvalidDecoration("x_" + std::to_string(i) + " = " + format_point(x) +
                              " is not a point of [a_i, a_{i+1}]");
    }
    return IntervalPosition::interior(x.offset());
  }
  if (x.interval() == i) return IntervalPosition::lower();
  if (x.interval() == model.wrap(i + 1)) return IntervalPosition::upper();
  throw InvalidDecoration("x_" + std::to_string(i) + " = " + format_point(x) +
                          " is not a point of [a_i, a_{i+1}]");
}

CirclePoint point_at(int i, IntervalPosition pos, const ModelParams& model) {
  switch (pos.tier) {
    case IntervalPosition::kLower:
      return CirclePoint::limit(i);
    case IntervalPosition::kUpper:
      return CirclePoint::limit(model.wrap(i + 1));
    case IntervalPosition::kInterior:
      break;
  }
  return CirclePoint::marked(i, pos.offset);
}

namespace {

void require_exhaustive(const Partition& p) {
  if (!p.is_exhaustive()) throw ValidationError("t-structure partition must be exhaustive");
}

void require_size(const Partition& p, const Decoration& x) {
  if (x.size() != static_cast<std::size_t>(p.n())) {
    throw SizeMismatch("decoration has " + std::to_string(x.size()) + " entries, partition has n = " +
                       std::to_string(p.n()));
  }
}

// Empty string when entry i is compatible, otherwise the reason.
std::string incompatibility(const Partition& p, int i, const CirclePoint& x, const ModelParams& model) {
  IntervalPosition pos;
  try {
    pos = interval_position(i, x, model);
  } catch (const InvalidDecoration& e) {
    return e.what();
  }
  const std::string at = "x_" + std::to_string(i) + " = " + format_point(x);
  if (pos.tier == IntervalPosition::kLower && !p.is_singleton(i)) {
    return at + ": a_i is allowed only when i is a singleton";
  }
  if (pos.tier == IntervalPosition::kUpper && !p.is_adjacency(i)) {
    return at + ": a_{i+1} is allowed only when i is an adjacency";
  }
  return {};
}

}  // namespace

bool validate_decoration(const Partition& p, const Decoration& x) {
  ModelParams model(p.n());
  require_exhaustive(p);
  require_size(p, x);
  for (int i = 1; i <= p.n(); ++i) {
    if (!incompatibility(p, i, x[static_cast<std::size_t>(i - 1)], model).empty()) return false;
  }
  return true;
}

TStructure::TStructure(Partition partition, Decoration decoration)
    : partition_(std::move(partition)), decoration_(std::move(decoration)) {
  ModelParams model(partition_.n());
  require_exhaustive(partition_);
  require_size(partition_, decoration_);
  positions_.reserve(decoration_.size());
  for (int i = 1; i <= model.n(); ++i) {
    const auto& x = decoration_[static_cast<std::size_t>(i - 1)];
    if (auto why = incompatibility(partition_, i, x, model); !why.empty()) throw InvalidDecoration(why);
    positions_.push_back(interval_position(i, x, model));
  }
}

bool TStructure::in_aisle_region(int i, Offset k) const {
  const auto pos = position(i);
  switch (pos.tier) {
    case IntervalPosition::kLower:
      return false;
    case IntervalPosition::kUpper:
      return true;
    case IntervalPosition::kInterior:
      break;
  }
  return k <= pos.offset;
}

bool TStructure::in_coaisle_region(int i, Offset k) const {
  const auto pos = position(i);
  switch (pos.tier) {
    case IntervalPosition::kLower:
      return true;
    case IntervalPosition::kUpper:
      return false;
    case IntervalPosition::kInterior:
      break;
  }
  return k >= pos.offset - 1;
}

EquivClass::EquivClass(Partition partition, std::vector<int> z_indices)
    : partition_(std::move(partition)), z_indices_(std::move(z_indices)) {
  require_exhaustive(partition_);
  std::sort(z_indices_.begin(), z_indices_.end());
  if (std::adjacent_find(z_indices_.begin(), z_indices_.end()) != z_indices_.end()) {
    throw ValidationError("repeated Z-index");
  }
  for (int i : z_indices_) {
    if (i < 1 || i > partition_.n()) throw ValidationError("Z-index out of range");
  }
  for (int i = 1; i <= partition_.n(); ++i) {
    if (!partition_.is_singleton(i) && !partition_.is_adjacency(i) &&
        !std::binary_search(z_indices_.begin(), z_indices_.end(), i)) {
      throw ValidationError("Z-indices must contain " + std::to_string(i) +
                            ", which is neither a singleton nor an adjacency");
    }
  }
}

bool aisle_contains(const TStructure& ts, const Arc& a) {
  validate_arc(a, ts.model());
  const int i = a.lo().interval();
  const int j = a.hi().interval();
  return ts.partition().same_block(i, j) && ts.in_aisle_region(i, a.lo().offset()) &&
         ts.in_aisle_region(j, a.hi().offset());
}

CoaislePresentation coaisle_presentation(const TStructure& ts) {
  std::vector<CirclePoint> bounds;
  bounds.reserve(ts.decoration().size());
  for (const auto& x : ts.decoration()) bounds.push_back(x.is_marked() ? shift(x, -1) : x);
  return CoaislePresentation{kreweras(ts.partition()), std::move(bounds)};
}

bool coaisle_contains(const TStructure& ts, const Arc& a) {
  validate_arc(a, ts.model());
  const int i = a.lo().interval();
  const int j = a.hi().interval();
  if (!ts.in_coaisle_region(i, a.lo().offset()) || !ts.in_coaisle_region(j, a.hi().offset())) {
    return false;
  }
  return kreweras(ts.partition()).same_block(i, j);
}

std::vector<Arc> heart(const TStructure& ts) {
  std::vector<Arc> out;
  for (const auto& x : ts.decoration()) {
    if (x.is_marked()) out.push_back(arc_of(shift(x, -2), x));
  }
  return out;
}

TStructure aisle_generated(std::span<const Arc> arcs, const ModelParams& model) {
  const int n = model.n();
  std::vector<std::optional<Offset>> top(static_cast<std::size_t>(n + 1));
  std::vector<std::pair<int, int>> related;
  auto note = [&](const CirclePoint& p) {
    auto& t = top[static_cast<std::size_t>(p.interval())];
    t = t ? std::max(*t, p.offset()) : p.offset();
  };
  for (const auto& a : arcs) {
    validate_arc(a, model);
    note(a.lo());
    note(a.hi());
    related.emplace_back(a.lo().interval(), a.hi().interval());
  }
  for (int i = 1; i <= n; ++i) related.emplace_back(i, i);
  Partition p = noncrossing_closure(n, related);

  Decoration x;
  x.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& t = top[static_cast<std::size_t>(i)];
    x.push_back(t ? CirclePoint::marked(i, *t) : CirclePoint::limit(i));
  }
  return TStructure(std::move(p), std::move(x));
}

namespace {

// Clockwise first point of the region of block b met when walking from u
// (u included). Nullopt if the region is empty.
std::optional<CirclePoint> first_hit(const TStructure& ts, int b, const CirclePoint& u) {
  const auto model = ts.model();
  const int n = model.n();
  const int j = u.interval();
  for (int s = 0; s < n; ++s) {
    const int i = model.wrap(j - s);
    if (ts.partition().block_of(i) != b) continue;
    const auto pos = ts.position(i);
    if (pos.tier == IntervalPosition::kLower) continue;
    if (s == 0) {
      if (pos.tier == IntervalPosition::kUpper) return u;
      return CirclePoint::marked(i, std::min(u.offset(), pos.offset));
    }
    if (pos.tier == IntervalPosition::kUpper) {
      throw InternalError("clockwise walk reached an adjacency decoration away from its start");
    }
    return CirclePoint::marked(i, pos.offset);
  }
  return std::nullopt;
}

// Whether the region of block b meets the open arc (p, q) read anticlockwise.
bool region_meets_open(const TStructure& ts, int b, const CirclePoint& p, const CirclePoint& q) {
  const auto h = first_hit(ts, b, shift(q, -1));
  return h && cyclic_lt3(p, *h, q);
}

}  // namespace

Triangle approx_triangle(const TStructure& ts, const Arc& t_arc, ApproxTrace* trace) {
  validate_arc(t_arc, ts.model());
  const CirclePoint t = t_arc.lo();
  const CirclePoint tp = t_arc.hi();

  struct Hit {
    CirclePoint z;
    CirclePoint zp;
  };
  std::vector<Hit> hits;
  const int blocks = static_cast<int>(ts.partition().blocks().size());
  for (int b = 0; b < blocks; ++b) {
    if (!region_meets_open(ts, b, t, tp) || !region_meets_open(ts, b, tp, t)) continue;
    const auto z = first_hit(ts, b, t);
    const auto zp = first_hit(ts, b, tp);
    if (!z || !zp) throw InternalError("crossing block without a first hit");
    if (!(*z == t || cyclic_lt3(tp, *z, t)) || !(*zp == tp || cyclic_lt3(t, *zp, tp))) {
      throw InternalError("first hit landed on the wrong side of T");
    }
    hits.push_back({*z, *zp});
  }
  // z_1 is the hit nearest to t going clockwise, i.e. the largest in the
  // anticlockwise order starting just after t.
  std::sort(hits.begin(), hits.end(), [&](const Hit& a, const Hit& b) {
    if (a.z == t) return b.z != t;
    if (b.z == t) return false;
    return cyclic_lt3(b.z, a.z, t);
  });

  if (hits.empty()) {
    return Triangle{ArcObject{}, ArcObject({t_arc}), ArcObject({t_arc}), TriangleKind::kApproximation};
  }

  std::vector<ArcOrZero> z_pieces;
  for (const auto& h : hits) {
    auto chord = make_arc(h.zp, h.z);
    if (!chord && trace) trace->dropped_connectors.emplace_back(h.zp, h.z);
    z_pieces.push_back(chord);
  }
  std::vector<ArcOrZero> w_pieces;
  w_pieces.push_back(make_arc(t, shift(hits.front().z, -1)));
  for (std::size_t i = 0; i + 1 < hits.size(); ++i) {
    w_pieces.push_back(make_arc(shift(hits[i].zp, -1), shift(hits[i + 1].z, -1)));
  }
  w_pieces.push_back(make_arc(shift(hits.back().zp, -1), tp));

  return Triangle{ArcObject::from_pieces(z_pieces), ArcObject({t_arc}), ArcObject::from_pieces(w_pieces),
                  TriangleKind::kApproximation};
}

bool is_left_nondegenerate(const TStructure& ts) {
  for (int i = 1; i <= ts.n(); ++i) {
    if (ts.position(i).tier == IntervalPosition::kUpper) return false;
  }
  return true;
}

bool is_right_nondegenerate(const TStructure& ts) {
  for (int i = 1; i <= ts.n(); ++i) {
    if (ts.position(i).tier == IntervalPosition::kLower) return false;
  }
  return true;
}

bool is_nondegenerate(const TStructure& ts) {
  for (const auto& x : ts.decoration()) {
    if (!x.is_marked()) return false;
  }
  return true;
}

bool is_bounded_above(const TStructure& ts) { return ts.partition() == Partition::coarsest(ts.n()); }
bool is_bounded_below(const TStructure& ts) { return ts.partition() == Partition::finest(ts.n()); }

EquivClass equiv_class(const TStructure& ts) {
  std::vector<int> z;
  for (int i = 1; i <= ts.n(); ++i) {
    if (ts.decoration()[static_cast<std::size_t>(i - 1)].is_marked()) z.push_back(i);
  }
  return EquivClass(ts.partition(), std::move(z));
}

bool equiv_eq(const TStructure& s, const TStructure& t) { return equiv_class(s) == equiv_class(t); }

TStructure representative(const EquivClass& c, Offset offset) {
  const auto& p = c.partition();
  ModelParams model(p.n());
  const auto& z = c.z_indices();
  Decoration x;
  for (int i = 1; i <= p.n(); ++i) {
    if (std::binary_search(z.begin(), z.end(), i)) {
      x.push_back(CirclePoint::marked(i, offset));
    } else if (p.is_singleton(i)) {
      x.push_back(CirclePoint::limit(i));
    } else {
      x.push_back(CirclePoint::limit(model.wrap(i + 1)));
    }
  }
  return TStructure(p, std::move(x));
}

std::vector<TStructure> enumerate_window_tstructures(const ModelParams& model, Offset lo, Offset hi, int guard) {
  if (lo > hi) throw ValidationError("empty offset window");
  const int n = model.n();
  std::vector<TStructure> out;
  for_each_nc(
      n,
      [&](const Partition& p) {
        std::vector<std::vector<CirclePoint>> choices(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) {
          auto& c = choices[static_cast<std::size_t>(i - 1)];
          if (p.is_singleton(i)) c.push_back(CirclePoint::limit(i));
          for (Offset k = lo; k <= hi; ++k) c.push_back(CirclePoint::marked(i, k));
          if (p.is_adjacency(i)) c.push_back(CirclePoint::limit(model.wrap(i + 1)));
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        while (true) {
          Decoration x;
          x.reserve(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) x.push_back(choices[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
          out.emplace_back(p, std::move(x));
          int i = n - 1;
          while (i >= 0 && ++idx[static_cast<std::size_t>(i)] == choices[static_cast<std::size_t>(i)].size()) {
            idx[static_cast<std::size_t>(i)] = 0;
            --i;
          }
          if (i < 0) break;
        }
      },
      guard);
  return out;
}

TStructure shift(const TStructure& ts, Offset m) {
  Decoration x = ts.decoration();
  for (auto& xi : x) {
    if (xi.is_marked()) xi = shift(xi, m);
  }
  return TStructure(ts.partition(), std::move(x));
}

}  // namespace cluster_lattice
