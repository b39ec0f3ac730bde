#include "cluster_lattice/window_oracle.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "cluster_lattice/errors.hpp"
#include "cluster_lattice/thick.hpp"
#include "cluster_lattice/tstructure.hpp"

namespace cluster_lattice {

bool in_window(const Arc& a, Window w) noexcept {
  const auto ok = [&](const CirclePoint& p) { return p.offset() >= -w.radius && p.offset() <= w.radius; };
  return ok(a.lo()) && ok(a.hi());
}

std::vector<Arc> window_arcs(const ModelParams& model, Window w) {
  if (w.radius < 0) throw ValidationError("window radius must be non-negative");
  std::vector<CirclePoint> points;
  for (int i = 1; i <= model.n(); ++i) {
    for (Offset k = -w.radius; k <= w.radius; ++k) points.push_back(CirclePoint::marked(i, k));
  }
  std::vector<Arc> out;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (auto arc = make_arc(points[a], points[b])) out.push_back(*arc);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ClosureReport closure(std::span<const Arc> seeds, Window w, const ModelParams& model, bool both_shifts,
                      const ClosureOptions& options) {
  if (w.radius < 0) throw ValidationError("window radius must be non-negative");
  std::set<Arc> found;
  std::vector<Arc> processed;
  std::vector<Arc> pending;
  ClosureReport report;

  const auto add = [&](const Arc& a) {
    if (!in_window(a, w)) {
      report.saturated_at_boundary = true;
      return;
    }
    if (found.insert(a).second) pending.push_back(a);
  };

  for (const auto& a : seeds) {
    validate_arc(a, model);
    if (!in_window(a, w)) throw PreconditionViolated("seed " + format_arc(a) + " lies outside the window");
    add(a);
  }

  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);
  std::size_t head = 0;

  while (head < pending.size()) {
    Arc a = pending[head];
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(head, pending.size() - 1);
      std::swap(pending[head], pending[pick(*rng)]);
      a = pending[head];
    }
    ++head;

    add(shift(a, -1));
    if (both_shifts) add(shift(a, 1));
    for (std::size_t k = 0; k < processed.size(); ++k) {
      const Arc b = processed[k];
      if (!cross(a, b)) continue;
      const std::array<CirclePoint, 4> e{a.lo(), a.hi(), b.lo(), b.hi()};
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t q = p + 1; q < 4; ++q) {
          if (auto chord = make_arc(e[p], e[q])) add(*chord);
        }
      }
    }
    processed.push_back(a);
  }
  report.arcs.assign(found.begin(), found.end());
  return report;
}

}  // namespace

ClosureReport window_thick_closure(std::span<const Arc> seeds, Window w, const ModelParams& model,
                                   const ClosureOptions& options) {
  return closure(seeds, w, model, true, options);
}

ClosureReport window_aisle_closure(std::span<const Arc> seeds, Window w, const ModelParams& model,
                                   const ClosureOptions& options) {
  return closure(seeds, w, model, false, options);
}

ClassificationComparison compare_with_classification(std::span<const Arc> seeds, Window w,
                                                     const ModelParams& model) {
  ClassificationComparison c;
  c.margin = std::max<Offset>(0, w.radius - 2);

  const auto ts = aisle_generated(seeds, model);
  const auto thick = thick_generated(seeds, model);
  const auto aisle_closure = window_aisle_closure(seeds, w, model);
  const auto thick_closure = window_thick_closure(seeds, w, model);

  for (const auto& a : aisle_closure.arcs) {
    if (!aisle_contains(ts, a)) c.aisle_extra.push_back(a);
  }
  for (const auto& a : thick_closure.arcs) {
    if (!thick_contains(thick, a)) c.thick_extra.push_back(a);
  }
  for (const auto& a : window_arcs(model, Window{c.margin})) {
    if (aisle_contains(ts, a) && !std::binary_search(aisle_closure.arcs.begin(), aisle_closure.arcs.end(), a)) {
      c.aisle_missing.push_back(a);
    }
    if (thick_contains(thick, a) && !std::binary_search(thick_closure.arcs.begin(), thick_closure.arcs.end(), a)) {
      c.thick_missing.push_back(a);
    }
  }
  return c;
}

}  // namespace cluster_lattice
