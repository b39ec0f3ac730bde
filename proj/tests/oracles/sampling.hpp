#pragma once

// Seeded random objects for property tests. Sequences are reproducible for a
// fixed seed and standard library.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "cluster_lattice/circle.hpp"
#include "cluster_lattice/noncrossing.hpp"
#include "cluster_lattice/tstructure.hpp"

namespace cluster_lattice::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  Partition nc_partition(int n);
  Partition nnc_partition(int n);
  // Marked decorations with offsets in [lo, hi]; limit decorations where
  // compatible, with the same weight as a single offset.
  TStructure tstructure(int n, Offset lo, Offset hi);

  CirclePoint point(int n, Offset radius);
  // Non-trivial arc with offsets in [-radius, radius].
  Arc arc(int n, Offset radius);
  std::vector<Arc> arcs(int n, Offset radius, int max_count);

  // Arc of the aisle (coaisle) whose offsets stay within `depth` steps of the
  // decoration, or of [-depth, depth] for unbounded sides. Nullopt if the
  // region is too thin to hold an arc.
  std::optional<Arc> aisle_arc(const TStructure& ts, Offset depth);
  std::optional<Arc> coaisle_arc(const TStructure& ts, Offset depth);

 private:
  const std::vector<Partition>& nc(int n);
  const std::vector<Partition>& nnc(int n);

  std::mt19937_64 rng_;
  std::map<int, std::vector<Partition>> nc_cache_;
  std::map<int, std::vector<Partition>> nnc_cache_;
};

}  // namespace cluster_lattice::testing
