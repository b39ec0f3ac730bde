#include "cluster_lattice/ts_lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

namespace {

void check_same_n(int a, int b) {
  if (a != b) throw SizeMismatch("t-structures on different n: " + std::to_string(a) + " and " + std::to_string(b));
}

template <typename Pick>
TStructure combine(const TStructure& s, const TStructure& t, const Partition& p, Pick pick) {
  const auto model = s.model();
  Decoration x;
  x.reserve(static_cast<std::size_t>(s.n()));
  for (int i = 1; i <= s.n(); ++i) x.push_back(point_at(i, pick(s.position(i), t.position(i)), model));
  if (!validate_decoration(p, x)) throw InternalError("lattice operation produced an incompatible decoration");
  return TStructure(p, std::move(x));
}

IntervalPosition::Tier tier_of(const EquivClass& c, int i) {
  const auto& z = c.z_indices();
  if (std::binary_search(z.begin(), z.end(), i)) return IntervalPosition::kInterior;
  return c.partition().is_singleton(i) ? IntervalPosition::kLower : IntervalPosition::kUpper;
}

// Upward closure as bitsets, then covers = strict up-set minus everything
// reachable through another element of it.
HasseGraph reduce(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& less_eq) {
  const std::size_t size = labels.size();
  if (size > kHasseGuard) {
    throw GuardExceeded("Hasse export of " + std::to_string(size) + " elements exceeds " +
                        std::to_string(kHasseGuard));
  }
  const std::size_t words = (size + 63) / 64;
  std::vector<std::vector<std::uint64_t>> above(size, std::vector<std::uint64_t>(words, 0));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (a != b && less_eq(a, b)) above[a][b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  HasseGraph g{std::move(labels), {}};
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<std::uint64_t> indirect(words, 0);
    for (std::size_t z = 0; z < size; ++z) {
      if ((above[a][z / 64] >> (z % 64)) & 1U) {
        for (std::size_t w = 0; w < words; ++w) indirect[w] |= above[z][w];
      }
    }
    for (std::size_t b = 0; b < size; ++b) {
      const bool up = (above[a][b / 64] >> (b % 64)) & 1U;
      const bool skip = (indirect[b / 64] >> (b % 64)) & 1U;
      if (up && !skip) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

}  // namespace

bool ts_leq(const TStructure& s, const TStructure& t) {
  check_same_n(s.n(), t.n());
  if (!leq(s.partition(), t.partition())) return false;
  for (int i = 1; i <= s.n(); ++i) {
    if (s.position(i) > t.position(i)) return false;
  }
  return true;
}

TStructure ts_meet(const TStructure& s, const TStructure& t) {
  check_same_n(s.n(), t.n());
  return combine(s, t, meet(s.partition(), t.partition()),
                 [](IntervalPosition a, IntervalPosition b) { return std::min(a, b); });
}

TStructure ts_join(const TStructure& s, const TStructure& t) {
  check_same_n(s.n(), t.n());
  return combine(s, t, join(s.partition(), t.partition()),
                 [](IntervalPosition a, IntervalPosition b) { return std::max(a, b); });
}

MeetIntersectionReport meet_is_intersection_check(const TStructure& s, const TStructure& t,
                                                  std::span<const Arc> samples) {
  const TStructure m = ts_meet(s, t);
  MeetIntersectionReport report;
  for (const auto& a : samples) {
    ++report.checked;
    if (aisle_contains(m, a) != (aisle_contains(s, a) && aisle_contains(t, a))) {
      report.counterexamples.push_back(a);
    }
  }
  return report;
}

bool equiv_leq(const EquivClass& c, const EquivClass& d) {
  check_same_n(c.partition().n(), d.partition().n());
  if (!leq(c.partition(), d.partition())) return false;
  for (int i = 1; i <= c.partition().n(); ++i) {
    if (tier_of(c, i) > tier_of(d, i)) return false;
  }
  return true;
}

EquivClass equiv_meet(const EquivClass& c, const EquivClass& d) {
  return equiv_class(ts_meet(representative(c), representative(d)));
}

EquivClass equiv_join(const EquivClass& c, const EquivClass& d) {
  return equiv_class(ts_join(representative(c), representative(d)));
}

EquivLattice equiv_lattice(int n, int guard) {
  if (n > guard) {
    throw GuardExceeded("equivalence lattice for n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guard));
  }
  ModelParams model(n);
  EquivLattice lat;
  lat.n = n;
  for_each_nc(
      n,
      [&](const Partition& p) {
        std::vector<int> optional;
        std::vector<int> forced;
        for (int i = 1; i <= n; ++i) {
          (p.is_singleton(i) || p.is_adjacency(i) ? optional : forced).push_back(i);
        }
        const std::uint32_t subsets = std::uint32_t{1} << optional.size();
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
          std::vector<int> z = forced;
          for (std::size_t b = 0; b < optional.size(); ++b) {
            if ((mask >> b) & 1U) z.push_back(optional[b]);
          }
          lat.classes.emplace_back(p, std::move(z));
        }
      },
      guard);
  std::sort(lat.classes.begin(), lat.classes.end());

  const auto is_extreme = [&](const EquivClass& c, bool top) {
    for (int i = 1; i <= n; ++i) {
      if (tier_of(c, i) != (top ? IntervalPosition::kUpper : IntervalPosition::kLower)) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k < lat.classes.size(); ++k) {
    if (is_extreme(lat.classes[k], true)) lat.top = k;
    if (is_extreme(lat.classes[k], false)) lat.bottom = k;
  }
  return lat;
}

NondegIsoReport nondeg_equiv_iso_check(int n, int guard) {
  if (n > guard) {
    throw GuardExceeded("equivalence lattice for n = " + std::to_string(n) + " exceeds guard " +
                        std::to_string(guard));
  }
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) all[static_cast<std::size_t>(i - 1)] = i;

  const auto partitions = nc_enumerate(n, guard);
  std::vector<EquivClass> classes;
  classes.reserve(partitions.size());
  for (const auto& p : partitions) classes.emplace_back(p, all);

  NondegIsoReport r;
  r.classes = classes.size();

  // Bijection: the partition component is injective on classes and hits every P.
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < classes.size(); ++k) index.emplace(classes[k].partition(), k);
  r.bijective = index.size() == partitions.size();

  r.order_isomorphism = true;
  r.operations_preserved = true;
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      const auto& pa = partitions[a];
      const auto& pb = partitions[b];
      if (equiv_leq(classes[a], classes[b]) != leq(pa, pb)) r.order_isomorphism = false;
      const auto m = equiv_meet(classes[a], classes[b]);
      const auto j = equiv_join(classes[a], classes[b]);
      if (m != EquivClass(meet(pa, pb), all) || j != EquivClass(join(pa, pb), all)) {
        r.operations_preserved = false;
      }
    }
  }

  // Top and bottom by the order itself, not by partition shape.
  std::size_t top = 0;
  std::size_t bottom = 0;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    bool is_top = true;
    bool is_bottom = true;
    for (std::size_t other = 0; other < classes.size(); ++other) {
      if (!equiv_leq(classes[other], classes[k])) is_top = false;
      if (!equiv_leq(classes[k], classes[other])) is_bottom = false;
    }
    if (is_top) top = k;
    if (is_bottom) bottom = k;
  }
  r.top_partition = classes[top].partition();
  r.bottom_partition = classes[bottom].partition();
  const auto top_rep = representative(classes[top]);
  const auto bottom_rep = representative(classes[bottom]);
  r.top_bounded_above = is_bounded_above(top_rep);
  r.top_bounded_below = is_bounded_below(top_rep);
  r.bottom_bounded_above = is_bounded_above(bottom_rep);
  r.bottom_bounded_below = is_bounded_below(bottom_rep);
  return r;
}

HasseGraph hasse_export(std::span<const Partition> elements) {
  std::vector<std::string> labels;
  for (const auto& p : elements) labels.push_back(to_compact(p));
  return reduce(std::move(labels), [&](std::size_t a, std::size_t b) { return leq(elements[a], elements[b]); });
}

HasseGraph hasse_export(std::span<const TStructure> elements) {
  std::vector<std::string> labels;
  for (const auto& t : elements) labels.push_back(tstructure_label(t));
  return reduce(std::move(labels),
                [&](std::size_t a, std::size_t b) { return ts_leq(elements[a], elements[b]); });
}

HasseGraph hasse_export(std::span<const EquivClass> elements) {
  std::vector<std::string> labels;
  for (const auto& c : elements) labels.push_back(equiv_class_label(c));
  return reduce(std::move(labels),
                [&](std::size_t a, std::size_t b) { return equiv_leq(elements[a], elements[b]); });
}

std::string to_dot(const HasseGraph& g) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < g.labels.size(); ++k) {
    out << "  n" << k << " [label=\"" << g.labels[k] << "\"];\n";
  }
  for (const auto& [lo, hi] : g.edges) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string tstructure_label(const TStructure& ts) {
  std::string s = to_compact(ts.partition()) + " @";
  for (const auto& x : ts.decoration()) s += " " + format_point(x);
  return s;
}

std::string equiv_class_label(const EquivClass& c) {
  std::string s = to_compact(c.partition()) + " Z{";
  for (std::size_t k = 0; k < c.z_indices().size(); ++k) {
    if (k > 0) s += ",";
    s += std::to_string(c.z_indices()[k]);
  }
  return s + "}";
}

}  // namespace cluster_lattice
