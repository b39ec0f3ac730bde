#include "cluster_lattice/serialization.hpp"

#include <algorithm>
#include <string>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

namespace {

// Runs f and turns nlohmann type and key errors into ParseError.
template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed " + std::string(what) + " JSON: " + e.what());
  }
}

const Json& field(const Json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + " JSON needs a \"" + key + "\" field");
  }
  return j.at(key);
}

Json blocks_json(const Partition& p) {
  Json blocks = Json::array();
  for (const auto& b : p.blocks()) blocks.push_back(b);
  return blocks;
}

Partition partition_of(int n, const Json& blocks) {
  if (!blocks.is_array()) throw ParseError("partition blocks must be an array");
  std::vector<Partition::Block> out;
  for (const auto& b : blocks) out.push_back(b.get<Partition::Block>());
  return Partition(n, std::move(out));
}

std::string text_of(const Json& j, std::string_view what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const Arc& a) { return format_arc(a); }

Arc arc_from_json(const Json& j) { return parse_arc(text_of(j, "arc")); }

Json to_json(const Partition& p) { return Json{{"n", p.n()}, {"blocks", blocks_json(p)}}; }

Partition partition_from_json(const Json& j) {
  return guarded("partition", [&] {
    return partition_of(field(j, "n", "partition").get<int>(), field(j, "blocks", "partition"));
  });
}

Json to_json(const ThickSubcat& t) { return to_json(t.partition); }

ThickSubcat thick_from_json(const Json& j) { return ThickSubcat{partition_from_json(j)}; }

CirclePoint decoration_entry_from_text(std::string_view text, int i, const ModelParams& model) {
  CirclePoint p = parse_point(text);
  if (p.is_limit() && p.interval() == model.n() + 1 && i == model.n()) p = CirclePoint::limit(1);
  return p;
}

Json to_json(const TStructure& ts) {
  Json deco = Json::array();
  for (const auto& x : ts.decoration()) deco.push_back(format_point(x));
  return Json{{"n", ts.n()}, {"partition", blocks_json(ts.partition())}, {"decoration", deco}};
}

TStructure tstructure_from_json(const Json& j) {
  return guarded("t-structure", [&] {
    const int n = field(j, "n", "t-structure").get<int>();
    ModelParams model(n);
    Partition p = partition_of(n, field(j, "partition", "t-structure"));
    const auto& deco = field(j, "decoration", "t-structure");
    if (!deco.is_array()) throw ParseError("decoration must be an array");
    Decoration x;
    int i = 0;
    for (const auto& e : deco) x.push_back(decoration_entry_from_text(text_of(e, "decoration entry"), ++i, model));
    return TStructure(std::move(p), std::move(x));
  });
}

Json to_json(const CoaislePresentation& c) {
  Json bounds = Json::array();
  for (const auto& y : c.bounds) bounds.push_back(format_point(y));
  return Json{{"n", c.partition.n()}, {"partition", blocks_json(c.partition)}, {"bounds", bounds}};
}

CoaislePresentation coaisle_from_json(const Json& j) {
  return guarded("coaisle", [&] {
    const int n = field(j, "n", "coaisle").get<int>();
    ModelParams model(n);
    CoaislePresentation c{partition_of(n, field(j, "partition", "coaisle")), {}};
    int i = 0;
    for (const auto& e : field(j, "bounds", "coaisle")) {
      c.bounds.push_back(decoration_entry_from_text(text_of(e, "bound"), ++i, model));
    }
    if (c.bounds.size() != static_cast<std::size_t>(n)) throw SizeMismatch("coaisle needs n bounds");
    return c;
  });
}

Json to_json(const EquivClass& c) {
  return Json{{"n", c.partition().n()}, {"partition", blocks_json(c.partition())}, {"z_indices", c.z_indices()}};
}

EquivClass equiv_class_from_json(const Json& j) {
  return guarded("equivalence class", [&] {
    const int n = field(j, "n", "equivalence class").get<int>();
    return EquivClass(partition_of(n, field(j, "partition", "equivalence class")),
                      field(j, "z_indices", "equivalence class").get<std::vector<int>>());
  });
}

Json to_json(const ArcObject& obj) {
  Json out = Json::array();
  for (const auto& a : obj.summands()) out.push_back(format_arc(a));
  return out;
}

ArcObject arc_object_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("arc object must be an array of arcs");
  std::vector<Arc> arcs;
  for (const auto& e : j) arcs.push_back(arc_from_json(e));
  return ArcObject(std::move(arcs));
}

Json to_json(const Triangle& t) {
  return Json{{"first", to_json(t.first)},
              {"middle", to_json(t.middle)},
              {"last", to_json(t.last)},
              {"construction", std::string(to_string(t.construction))}};
}

Triangle triangle_from_json(const Json& j) {
  return guarded("triangle", [&] {
    return Triangle{arc_object_from_json(field(j, "first", "triangle")),
                    arc_object_from_json(field(j, "middle", "triangle")),
                    arc_object_from_json(field(j, "last", "triangle")),
                    parse_triangle_kind(text_of(field(j, "construction", "triangle"), "construction"))};
  });
}

Json to_json(const ClosureReport& r) {
  Json arcs = Json::array();
  for (const auto& a : r.arcs) arcs.push_back(format_arc(a));
  return Json{{"arcs", arcs}, {"saturated_at_boundary", r.saturated_at_boundary}};
}

ClosureReport closure_report_from_json(const Json& j) {
  return guarded("closure report", [&] {
    ClosureReport r;
    for (const auto& e : field(j, "arcs", "closure report")) r.arcs.push_back(arc_from_json(e));
    std::sort(r.arcs.begin(), r.arcs.end());
    r.arcs.erase(std::unique(r.arcs.begin(), r.arcs.end()), r.arcs.end());
    r.saturated_at_boundary = field(j, "saturated_at_boundary", "closure report").get<bool>();
    return r;
  });
}

Json to_json(const HasseGraph& g) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < g.labels.size(); ++k) nodes.push_back(Json{{"id", k}, {"label", g.labels[k]}});
  Json edges = Json::array();
  for (const auto& [lo, hi] : g.edges) edges.push_back(Json::array({lo, hi}));
  return Json{{"nodes", nodes}, {"edges", edges}};
}

HasseGraph hasse_from_json(const Json& j) {
  return guarded("Hasse graph", [&] {
    HasseGraph g;
    const auto& nodes = field(j, "nodes", "Hasse graph");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (nodes[k].at("id").get<std::size_t>() != k) throw ParseError("Hasse node ids must be 0, 1, ...");
      g.labels.push_back(nodes[k].at("label").get<std::string>());
    }
    for (const auto& e : field(j, "edges", "Hasse graph")) {
      const auto lo = e.at(0).get<std::size_t>();
      const auto hi = e.at(1).get<std::size_t>();
      if (lo >= g.labels.size() || hi >= g.labels.size()) throw ParseError("Hasse edge endpoint out of range");
      g.edges.emplace_back(lo, hi);
    }
    return g;
  });
}

TStructure parse_tstructure(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return tstructure_from_json(parse_json(text));
  const auto at = text.find('@');
  if (at == std::string_view::npos) {
    throw ParseError("t-structure must be JSON or 'partition@decoration', got '" + std::string(text) + "'");
  }
  const auto deco_text = text.substr(at + 1);
  std::vector<std::string_view> entries;
  std::size_t start = 0;
  while (true) {
    const auto comma = deco_text.find(',', start);
    entries.push_back(deco_text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int n = static_cast<int>(entries.size());
  ModelParams model(n);
  Partition p = parse_compact(text.substr(0, at), n);
  Decoration x;
  for (int i = 1; i <= n; ++i) {
    x.push_back(decoration_entry_from_text(entries[static_cast<std::size_t>(i - 1)], i, model));
  }
  return TStructure(std::move(p), std::move(x));
}

std::string format_tstructure_compact(const TStructure& ts) {
  std::string s = to_compact(ts.partition()) + "@";
  for (std::size_t k = 0; k < ts.decoration().size(); ++k) {
    if (k > 0) s += ",";
    s += format_point(ts.decoration()[k]);
  }
  return s;
}

}  // namespace cluster_lattice
