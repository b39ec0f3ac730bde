#pragma once

// JSON forms of the public value types. Points, arcs and partitions are
// embedded with their text syntax ("2:-5", "a3", "[1:0,2:3]").
//
//   Partition   {"n":6,"blocks":[[1,3],[2],[4,5,6]]}
//   TStructure  {"n":6,"partition":[[1,3],[2],[4,5,6]],
//                "decoration":["1:0","a2","3:0","4:0","a6","6:0"]}
//   ArcObject   ["[1:0,2:0]", ...] sorted
//   Triangle    {"first":..,"middle":..,"last":..,"construction":"approximation"}
//
// Every *_from_json throws ParseError on malformed input and the usual
// ValidationError subclasses on well-formed but invalid values.

#include <nlohmann/json.hpp>
#include <string_view>

#include "cluster_lattice/arc_objects.hpp"
#include "cluster_lattice/noncrossing.hpp"
#include "cluster_lattice/thick.hpp"
#include "cluster_lattice/ts_lattice.hpp"
#include "cluster_lattice/tstructure.hpp"
#include "cluster_lattice/window_oracle.hpp"

namespace cluster_lattice {

using Json = nlohmann::json;

Json to_json(const Arc& a);
Arc arc_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const ThickSubcat& t);
ThickSubcat thick_from_json(const Json& j);

Json to_json(const TStructure& ts);
TStructure tstructure_from_json(const Json& j);

Json to_json(const CoaislePresentation& c);
CoaislePresentation coaisle_from_json(const Json& j);

Json to_json(const EquivClass& c);
EquivClass equiv_class_from_json(const Json& j);

Json to_json(const ArcObject& obj);
ArcObject arc_object_from_json(const Json& j);

Json to_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);

Json to_json(const ClosureReport& r);
ClosureReport closure_report_from_json(const Json& j);

// {"nodes":[{"id":0,"label":"1|2"},...],"edges":[[0,1],...]}
Json to_json(const HasseGraph& g);
HasseGraph hasse_from_json(const Json& j);

// Decoration entry i; Limit(i + 1) for i = n is written "a1" and parsed from
// either "a1" or "a<n+1>".
CirclePoint decoration_entry_from_text(std::string_view text, int i, const ModelParams& model);

// JSON text, or the compact form "1,3|2|4,5,6@1:0,a2,3:0,4:0,a6,6:0".
TStructure parse_tstructure(std::string_view text);
std::string format_tstructure_compact(const TStructure& ts);

Json parse_json(std::string_view text);

}  // namespace cluster_lattice
