#pragma once

// Non-crossing partitions of [n] (NC_n) and non-exhaustive non-crossing
// partitions (NNC_n, non-crossing partitions of subsets of [n]): validity,
// enumeration, counting, refinement order, meet and join, Kreweras complement
// and rotation.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cluster_lattice {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultEnumerationGuard = 12;

class Partition {
 public:
  using Block = std::vector<int>;

  // Validates disjointness, range and the non-crossing condition, then puts
  // the blocks in canonical order (ascending within a block, blocks by
  // minimum). Throws ValidationError.
  Partition(int n, std::vector<Block> blocks);

  static Partition empty(int n);
  static Partition finest(int n);
  static Partition coarsest(int n);

  int n() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  bool is_exhaustive() const noexcept;
  bool covers(int i) const { return block_of(i) >= 0; }
  // Index into blocks(), or -1 for elements outside the support.
  int block_of(int i) const { return owner_.at(static_cast<std::size_t>(i)); }
  bool same_block(int i, int j) const;

  // {i} is a block.
  bool is_singleton(int i) const;
  // i and i+1 (cyclically, n+1 = 1) lie in one block.
  bool is_adjacency(int i) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  struct Trusted {};
  Partition(Trusted, int n, std::vector<Block> blocks);
  void index();

  int n_;
  std::vector<Block> blocks_;
  std::vector<int> owner_;  // size n + 1, slot 0 unused

  friend Partition noncrossing_closure(int, const std::vector<std::pair<int, int>>&);
  friend Partition rotate(const Partition&, int);
};

// Crossing test over blocks of [n]. Throws ValidationError on overlapping
// blocks, empty blocks or elements outside [1, n].
bool is_noncrossing(int n, const std::vector<Partition::Block>& blocks);

BigInt binomial(int n, int k);
BigInt catalan(int n);
// Σ_{k=0}^{n} C(n, k) · Catalan(k).
BigInt nnc_count(int n);

// Enumeration in a fixed deterministic order, each partition exactly once.
// Throws GuardExceeded when n > guard and ValidationError when n < 1.
void for_each_nc(int n, const std::function<void(const Partition&)>& visit,
                 int guard = kDefaultEnumerationGuard);
void for_each_nnc(int n, const std::function<void(const Partition&)>& visit,
                  int guard = kDefaultEnumerationGuard);
std::vector<Partition> nc_enumerate(int n, int guard = kDefaultEnumerationGuard);
std::vector<Partition> nnc_enumerate(int n, int guard = kDefaultEnumerationGuard);

// Refinement order: every block of p lies inside a block of q.
bool leq(const Partition& p, const Partition& q);
Partition meet(const Partition& p, const Partition& q);
// Least upper bound in NNC_n: extend both by singletons, join in NC_n by
// transitive closure plus merging of crossing blocks, then drop singletons
// that neither input covers.
Partition join(const Partition& p, const Partition& q);
// Join of exhaustive partitions through Kreweras duality:
// K^{-1}(K(p) ∧ K(q)).
Partition join_via_kreweras(const Partition& p, const Partition& q);

// Kreweras complement of an exhaustive non-crossing partition. Throws
// ValidationError for non-exhaustive input.
Partition kreweras(const Partition& p);
Partition kreweras_inverse(const Partition& p);

// Clockwise rotation by d: i -> ((i - 1 - d) mod n) + 1.
Partition rotate(const Partition& p, int d);

// Blocks of the smallest non-crossing partition in which every related pair
// shares a block. Elements that occur in no pair stay uncovered; a pair (i, i)
// marks i as covered.
Partition noncrossing_closure(int n, const std::vector<std::pair<int, int>>& related);

// Compact syntax "1,3|2|4,5,6"; "" is the empty partition. n = 0 infers the
// size from the largest element.
Partition parse_compact(std::string_view text, int n = 0);
std::string to_compact(const Partition& p);

}  // namespace cluster_lattice
