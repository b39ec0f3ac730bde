#pragma once

// Brute-force closures of finite arc sets inside an offset window. These know
// nothing about partitions or decorations and serve as an independent check
// of thick_generated and aisle_generated.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cluster_lattice/circle.hpp"

namespace cluster_lattice {

// Arcs whose endpoint offsets all lie in [-radius, radius].
struct Window {
  Offset radius = 0;
};

bool in_window(const Arc& a, Window w) noexcept;

// Every arc of the window for n intervals, sorted.
std::vector<Arc> window_arcs(const ModelParams& model, Window w);

struct ClosureReport {
  std::vector<Arc> arcs;  // sorted, without repetition
  // Some rule application wanted an arc outside the window.
  bool saturated_at_boundary = false;
};

struct ClosureOptions {
  // Processes the worklist in a pseudo-random order instead of FIFO.
  std::optional<std::uint64_t> shuffle_seed;
};

// Least set containing S that is closed under Σ^{±1} (within the window) and
// contains every non-trivial chord on the four endpoints of any crossing pair.
// Throws PreconditionViolated for seeds outside the window.
ClosureReport window_thick_closure(std::span<const Arc> seeds, Window w, const ModelParams& model,
                                   const ClosureOptions& options = {});
// Same, with Σ (clockwise shift) only.
ClosureReport window_aisle_closure(std::span<const Arc> seeds, Window w, const ModelParams& model,
                                   const ClosureOptions& options = {});

struct ClassificationComparison {
  Offset margin = 0;
  // Window closure arcs missing from the classified subcategory.
  std::vector<Arc> aisle_extra;
  std::vector<Arc> thick_extra;
  // Classified arcs inside the margin window that the closure did not reach.
  std::vector<Arc> aisle_missing;
  std::vector<Arc> thick_missing;

  bool ok() const noexcept {
    return aisle_extra.empty() && thick_extra.empty() && aisle_missing.empty() && thick_missing.empty();
  }
};

// Compares both window closures of S with aisle_generated(S) and
// thick_generated(S): containment in the classified subcategory on the whole
// window, and equality on the margin window of radius W - 2.
ClassificationComparison compare_with_classification(std::span<const Arc> seeds, Window w,
                                                     const ModelParams& model);

}  // namespace cluster_lattice
