#pragma once

// Thick subcategories, named by non-exhaustive non-crossing partitions: the
// partition P stands for the additive closure of all arcs whose two endpoints
// lie in ⋃_{i ∈ B} (a_i, a_{i+1}) for a single block B.

#include <span>

#include "cluster_lattice/circle.hpp"
#include "cluster_lattice/noncrossing.hpp"

namespace cluster_lattice {

struct ThickSubcat {
  Partition partition;

  friend bool operator==(const ThickSubcat&, const ThickSubcat&) = default;
};

bool thick_contains(const ThickSubcat& t, const Arc& a);

// Smallest thick subcategory containing the arcs.
ThickSubcat thick_generated(std::span<const Arc> arcs, const ModelParams& model);

bool thick_leq(const ThickSubcat& s, const ThickSubcat& t);
ThickSubcat thick_meet(const ThickSubcat& s, const ThickSubcat& t);
ThickSubcat thick_join(const ThickSubcat& s, const ThickSubcat& t);

}  // namespace cluster_lattice
