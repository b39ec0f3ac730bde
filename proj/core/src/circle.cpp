#include "cluster_lattice/circle.hpp"

#include <charconv>
#include <string>
#include <system_error>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

ModelParams::ModelParams(int n) : n_(n) {
  if (n < 2) {
    throw UnsupportedModel("the model needs n >= 2 limit points, got n = " + std::to_string(n));
  }
}

void validate_point(const CirclePoint& p, const ModelParams& model) {
  if (p.interval() < 1 || p.interval() > model.n()) {
    throw ValidationError("interval index " + std::to_string(p.interval()) +
                          " out of range [1, " + std::to_string(model.n()) + "]");
  }
}

LinearKey linear_key(const CirclePoint& p, const ModelParams& model) {
  validate_point(p, model);
  return p.key();
}

bool cyclic_lt3(const CirclePoint& x, const CirclePoint& y, const CirclePoint& z) noexcept {
  if (x == y || y == z || x == z) return false;
  return (x < y && y < z) || (y < z && z < x) || (z < x && x < y);
}

CirclePoint shift(const CirclePoint& p, Offset m) {
  if (!p.is_marked()) {
    throw ValidationError("cannot shift the limit point " + format_point(p));
  }
  return CirclePoint::marked(p.interval(), p.offset() + m);
}

bool is_trivial_pair(const CirclePoint& p, const CirclePoint& q) noexcept {
  if (p.interval() != q.interval()) return false;
  const Offset d = p.offset() - q.offset();
  return d >= -1 && d <= 1;
}

ArcOrZero make_arc(const CirclePoint& p, const CirclePoint& q) {
  if (!p.is_marked() || !q.is_marked()) {
    throw ValidationError("arc endpoints must be marked points");
  }
  if (is_trivial_pair(p, q)) return std::nullopt;
  return p < q ? Arc(p, q) : Arc(q, p);
}

Arc arc_of(const CirclePoint& p, const CirclePoint& q) {
  auto a = make_arc(p, q);
  if (!a) {
    throw ValidationError("trivial arc {" + format_point(p) + "," + format_point(q) + "}");
  }
  return *a;
}

void validate_arc(const Arc& a, const ModelParams& model) {
  validate_point(a.lo(), model);
  validate_point(a.hi(), model);
}

bool cross(const Arc& a, const Arc& b) noexcept {
  const auto inside = [&](const CirclePoint& p) { return a.lo() < p && p < a.hi(); };
  if (a.has_endpoint(b.lo()) || a.has_endpoint(b.hi())) return false;
  return inside(b.lo()) != inside(b.hi());
}

Arc shift(const Arc& a, Offset m) {
  return *make_arc(shift(a.lo(), m), shift(a.hi(), m));
}

bool region_is_empty(const HalfOpenRegion& r) noexcept {
  if (r.lower == r.upper) return r.lower_open || r.upper_open;
  if (r.lower_open && r.upper_open && r.lower.is_marked() && r.upper.is_marked() &&
      r.lower.interval() == r.upper.interval() && r.upper.offset() == r.lower.offset() + 1) {
    return true;
  }
  return false;
}

bool region_contains(const HalfOpenRegion& r, const CirclePoint& p) noexcept {
  if (r.lower == r.upper) return !r.lower_open && !r.upper_open && p == r.lower;
  if (p == r.lower) return !r.lower_open;
  if (p == r.upper) return !r.upper_open;
  return cyclic_lt3(r.lower, p, r.upper);
}

namespace {

template <typename Int>
Int parse_int(std::string_view text, std::string_view what) {
  Int value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

CirclePoint parse_point(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty point");
  if (text.front() == 'a') {
    return CirclePoint::limit(parse_int<int>(text.substr(1), "limit point"));
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("malformed point '" + std::string(text) + "'");
  }
  return CirclePoint::marked(parse_int<int>(text.substr(0, colon), "interval index"),
                             parse_int<Offset>(text.substr(colon + 1), "offset"));
}

std::string format_point(const CirclePoint& p) {
  if (p.is_limit()) return "a" + std::to_string(p.interval());
  return std::to_string(p.interval()) + ":" + std::to_string(p.offset());
}

Arc parse_arc(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("malformed arc '" + std::string(text) + "'");
  }
  const auto body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError("malformed arc '" + std::string(text) + "'");
  }
  const auto p = parse_point(body.substr(0, comma));
  const auto q = parse_point(body.substr(comma + 1));
  if (!p.is_marked() || !q.is_marked()) {
    throw ParseError("arc endpoints must be marked points: '" + std::string(text) + "'");
  }
  auto a = make_arc(p, q);
  if (!a) throw ParseError("trivial arc '" + std::string(text) + "'");
  return *a;
}

std::string format_arc(const Arc& a) {
  return "[" + format_point(a.lo()) + "," + format_point(a.hi()) + "]";
}

std::vector<Arc> parse_arc_list(std::string_view text) {
  std::vector<Arc> out;
  text = trim(text);
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto piece = trim(text.substr(0, semi));
    if (!piece.empty()) out.push_back(parse_arc(piece));
    if (semi == std::string_view::npos) break;
    text = text.substr(semi + 1);
  }
  return out;
}

std::string format_arc_list(const std::vector<Arc>& arcs) {
  std::string out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) out += ';';
    out += format_arc(arcs[i]);
  }
  return out;
}

}  // namespace cluster_lattice
