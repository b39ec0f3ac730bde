#include "cluster_lattice/thick.hpp"

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

bool thick_contains(const ThickSubcat& t, const Arc& a) {
  validate_arc(a, ModelParams(t.partition.n()));
  return t.partition.same_block(a.lo().interval(), a.hi().interval());
}

ThickSubcat thick_generated(std::span<const Arc> arcs, const ModelParams& model) {
  std::vector<std::pair<int, int>> related;
  related.reserve(arcs.size());
  for (const auto& a : arcs) {
    validate_arc(a, model);
    related.emplace_back(a.lo().interval(), a.hi().interval());
  }
  return ThickSubcat{noncrossing_closure(model.n(), related)};
}

bool thick_leq(const ThickSubcat& s, const ThickSubcat& t) { return leq(s.partition, t.partition); }

ThickSubcat thick_meet(const ThickSubcat& s, const ThickSubcat& t) {
  return ThickSubcat{meet(s.partition, t.partition)};
}

ThickSubcat thick_join(const ThickSubcat& s, const ThickSubcat& t) {
  return ThickSubcat{join(s.partition, t.partition)};
}

}  // namespace cluster_lattice
