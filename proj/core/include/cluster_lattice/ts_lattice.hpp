#pragma once

// The lattice of t-structures under inclusion of aisles, the induced lattice
// on equivalence classes, and Hasse diagrams of finite sublattices.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cluster_lattice/noncrossing.hpp"
#include "cluster_lattice/tstructure.hpp"

namespace cluster_lattice {

// P ≤ P' and a_i ≤ x_i ≤ x'_i ≤ a_{i+1} for every i. Throws SizeMismatch on
// different n.
bool ts_leq(const TStructure& s, const TStructure& t);
// (P ∧ P', min{x, x'}) and (P ∨ P', max{x, x'}); minima and maxima are taken
// in [a_i, a_{i+1}].
TStructure ts_meet(const TStructure& s, const TStructure& t);
TStructure ts_join(const TStructure& s, const TStructure& t);

struct MeetIntersectionReport {
  std::size_t checked = 0;
  std::vector<Arc> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
};

// Compares membership in the aisle of ts_meet(s, t) with membership in both
// aisles for every sample arc.
MeetIntersectionReport meet_is_intersection_check(const TStructure& s, const TStructure& t,
                                                  std::span<const Arc> samples);

// [c] ≤ [d] iff every member of c has its aisle inside the aisle of some member
// of d.
bool equiv_leq(const EquivClass& c, const EquivClass& d);
// Class of the meet (join) of representatives.
EquivClass equiv_meet(const EquivClass& c, const EquivClass& d);
EquivClass equiv_join(const EquivClass& c, const EquivClass& d);

inline constexpr int kEquivLatticeGuard = 8;

struct EquivLattice {
  int n = 0;
  std::vector<EquivClass> classes;  // sorted
  std::size_t top = 0;              // indices into classes
  std::size_t bottom = 0;
};

// Every equivalence class of t-structures for n. Throws GuardExceeded when
// n > guard.
EquivLattice equiv_lattice(int n, int guard = kEquivLatticeGuard);

struct NondegIsoReport {
  std::size_t classes = 0;
  bool bijective = false;           // class -> partition hits every P ∈ NC_n once
  bool order_isomorphism = false;   // equiv_leq matches refinement
  bool operations_preserved = false;  // equiv_meet / equiv_join match meet / join
  Partition top_partition = Partition::empty(0);
  Partition bottom_partition = Partition::empty(0);
  // Boundedness of the representatives of the top and bottom classes.
  bool top_bounded_above = false;
  bool top_bounded_below = false;
  bool bottom_bounded_above = false;
  bool bottom_bounded_below = false;
};

// Restricts to non-degenerate classes (every index marked) and compares with
// NC_n under refinement.
NondegIsoReport nondeg_equiv_iso_check(int n, int guard = kEquivLatticeGuard);

inline constexpr std::size_t kHasseGuard = 10000;

// Covering relation: edge (lower, upper) indexes into labels.
struct HasseGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Transitive reduction of leq / ts_leq / equiv_leq. Throws GuardExceeded for
// more than kHasseGuard elements.
HasseGraph hasse_export(std::span<const Partition> elements);
HasseGraph hasse_export(std::span<const TStructure> elements);
HasseGraph hasse_export(std::span<const EquivClass> elements);

std::string to_dot(const HasseGraph& g);

// "1,3|2|4,5,6 @ 1:0 a2 3:0 4:0 a6 6:0"
std::string tstructure_label(const TStructure& ts);
// "1,3|2|4,5,6 Z{1,3,4,6}"
std::string equiv_class_label(const EquivClass& c);

}  // namespace cluster_lattice
