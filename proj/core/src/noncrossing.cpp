#include "cluster_lattice/noncrossing.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cluster_lattice/errors.hpp"

namespace cluster_lattice {

namespace {

// Blocks are sorted ascending.
bool blocks_cross(const Partition::Block& a, const Partition::Block& b) {
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    const int lo = a[k];
    const int hi = a[k + 1];
    bool inside = false;
    bool outside = false;
    for (int e : b) {
      if (e > lo && e < hi) {
        inside = true;
      } else {
        outside = true;
      }
    }
    if (inside && outside) return true;
  }
  return false;
}

void canonicalize(std::vector<Partition::Block>& blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Partition::Block& x, const Partition::Block& y) { return x.front() < y.front(); });
}

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Merges crossing blocks until none cross. The fixpoint does not depend on the
// scan order; the scan below is deterministic regardless.
std::vector<Partition::Block> merge_crossing(std::vector<Partition::Block> blocks) {
  canonicalize(blocks);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < blocks.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < blocks.size() && !changed; ++j) {
        if (blocks_cross(blocks[i], blocks[j])) {
          blocks[i].insert(blocks[i].end(), blocks[j].begin(), blocks[j].end());
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          canonicalize(blocks);
          changed = true;
        }
      }
    }
  }
  return blocks;
}

void check_guard(int n, int guard) {
  if (n < 1) throw ValidationError("enumeration needs n >= 1, got " + std::to_string(n));
  if (n > guard) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                        std::to_string(guard));
  }
}

void check_same_n(const Partition& p, const Partition& q) {
  if (p.n() != q.n()) {
    throw SizeMismatch("partitions of different sizes: " + std::to_string(p.n()) + " vs " +
                       std::to_string(q.n()));
  }
}

// Stack-based generator: each element opens a block, joins an open block
// (closing every block opened after it), or, when `allow_skip`, stays
// uncovered.
class Generator {
 public:
  Generator(int n, bool allow_skip, const std::function<void(const Partition&)>& visit)
      : n_(n), allow_skip_(allow_skip), visit_(visit) {}

  void run() { step(1); }

 private:
  void step(int i) {
    if (i > n_) {
      visit_(Partition(n_, blocks_));
      return;
    }
    if (allow_skip_) step(i + 1);

    blocks_.push_back({i});
    open_.push_back(blocks_.size() - 1);
    step(i + 1);
    open_.pop_back();
    blocks_.pop_back();

    for (std::size_t s = open_.size(); s-- > 0;) {
      const std::vector<std::size_t> saved(open_.begin() + static_cast<std::ptrdiff_t>(s) + 1,
                                           open_.end());
      open_.resize(s + 1);
      blocks_[open_[s]].push_back(i);
      step(i + 1);
      blocks_[open_[s]].pop_back();
      open_.insert(open_.end(), saved.begin(), saved.end());
    }
  }

  int n_;
  bool allow_skip_;
  const std::function<void(const Partition&)>& visit_;
  std::vector<Partition::Block> blocks_;
  std::vector<std::size_t> open_;
};

}  // namespace

bool is_noncrossing(int n, const std::vector<Partition::Block>& blocks) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(n, 0)) + 1, false);
  std::vector<Partition::Block> sorted = blocks;
  for (auto& b : sorted) {
    if (b.empty()) throw ValidationError("partition contains an empty block");
    for (int e : b) {
      if (e < 1 || e > n) {
        throw ValidationError("element " + std::to_string(e) + " outside [1, " +
                              std::to_string(n) + "]");
      }
      if (seen[static_cast<std::size_t>(e)]) {
        throw ValidationError("element " + std::to_string(e) + " occurs in two blocks");
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
    std::sort(b.begin(), b.end());
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (blocks_cross(sorted[i], sorted[j])) return false;
    }
  }
  return true;
}

Partition::Partition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw ValidationError("partition size must be non-negative");
  if (!is_noncrossing(n, blocks_)) {
    throw ValidationError("blocks cross");
  }
  canonicalize(blocks_);
  index();
}

Partition::Partition(Trusted, int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  canonicalize(blocks_);
  index();
}

void Partition::index() {
  owner_.assign(static_cast<std::size_t>(n_) + 1, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int e : blocks_[b]) owner_[static_cast<std::size_t>(e)] = static_cast<int>(b);
  }
}

Partition Partition::empty(int n) { return Partition(n, {}); }

Partition Partition::finest(int n) {
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) blocks.push_back({i});
  return Partition(n, std::move(blocks));
}

Partition Partition::coarsest(int n) {
  if (n == 0) return empty(0);
  Block all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  return Partition(n, {all});
}

bool Partition::is_exhaustive() const noexcept {
  return std::all_of(owner_.begin() + 1, owner_.end(), [](int b) { return b >= 0; });
}

bool Partition::same_block(int i, int j) const {
  const int b = block_of(i);
  return b >= 0 && b == block_of(j);
}

bool Partition::is_singleton(int i) const {
  const int b = block_of(i);
  return b >= 0 && blocks_[static_cast<std::size_t>(b)].size() == 1;
}

bool Partition::is_adjacency(int i) const {
  const int next = i % n_ + 1;
  return next != i && same_block(i, next);
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt catalan(int n) {
  if (n < 0) throw ValidationError("catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt nnc_count(int n) {
  if (n < 0) throw ValidationError("nnc_count needs n >= 0");
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += binomial(n, k) * catalan(k);
  return total;
}

void for_each_nc(int n, const std::function<void(const Partition&)>& visit, int guard) {
  check_guard(n, guard);
  Generator(n, false, visit).run();
}

void for_each_nnc(int n, const std::function<void(const Partition&)>& visit, int guard) {
  check_guard(n, guard);
  Generator(n, true, visit).run();
}

std::vector<Partition> nc_enumerate(int n, int guard) {
  std::vector<Partition> out;
  for_each_nc(n, [&](const Partition& p) { out.push_back(p); }, guard);
  return out;
}

std::vector<Partition> nnc_enumerate(int n, int guard) {
  std::vector<Partition> out;
  for_each_nnc(n, [&](const Partition& p) { out.push_back(p); }, guard);
  return out;
}

bool leq(const Partition& p, const Partition& q) {
  check_same_n(p, q);
  for (const auto& b : p.blocks()) {
    const int target = q.block_of(b.front());
    if (target < 0) return false;
    for (int e : b) {
      if (q.block_of(e) != target) return false;
    }
  }
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  check_same_n(p, q);
  std::vector<Partition::Block> blocks;
  for (const auto& a : p.blocks()) {
    for (const auto& b : q.blocks()) {
      Partition::Block both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      if (!both.empty()) blocks.push_back(std::move(both));
    }
  }
  return Partition(p.n(), std::move(blocks));
}

Partition noncrossing_closure(int n, const std::vector<std::pair<int, int>>& related) {
  UnionFind uf(n + 1);
  std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
  for (const auto& [i, j] : related) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ValidationError("related pair outside [1, " + std::to_string(n) + "]");
    }
    covered[static_cast<std::size_t>(i)] = covered[static_cast<std::size_t>(j)] = true;
    uf.unite(i, j);
  }
  std::vector<Partition::Block> by_root(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    if (covered[static_cast<std::size_t>(i)]) by_root[static_cast<std::size_t>(uf.find(i))].push_back(i);
  }
  std::vector<Partition::Block> blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return Partition(Partition::Trusted{}, n, merge_crossing(std::move(blocks)));
}

Partition join(const Partition& p, const Partition& q) {
  check_same_n(p, q);
  const int n = p.n();
  std::vector<std::pair<int, int>> related;
  for (const auto* part : {&p, &q}) {
    for (const auto& b : part->blocks()) {
      for (int e : b) related.emplace_back(b.front(), e);
    }
  }
  // Singleton extension: uncovered elements join as singletons, then those
  // that neither input covers are dropped again. A singleton never crosses
  // anything, so they can be left out from the start.
  return noncrossing_closure(n, related);
}

Partition kreweras(const Partition& p) {
  if (!p.is_exhaustive()) {
    throw ValidationError("the Kreweras complement needs an exhaustive partition");
  }
  const int n = p.n();
  // Primed i' sits between i and i+1. The chord i'--j' (i < j) is compatible
  // with p iff no block has elements on both sides: inside means (i, j].
  const auto separated = [&](int i, int j) {
    for (const auto& b : p.blocks()) {
      bool inside = false;
      bool outside = false;
      for (int e : b) {
        if (e > i && e <= j) {
          inside = true;
        } else {
          outside = true;
        }
      }
      if (inside && outside) return true;
    }
    return false;
  };
  UnionFind uf(n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!separated(i, j)) uf.unite(i, j);
    }
  }
  std::vector<Partition::Block> by_root(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) by_root[static_cast<std::size_t>(uf.find(i))].push_back(i);
  std::vector<Partition::Block> blocks;
  for (auto& b : by_root) {
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return Partition(n, std::move(blocks));
}

Partition kreweras_inverse(const Partition& p) {
  return rotate(kreweras(kreweras(kreweras(p))), -2);
}

Partition join_via_kreweras(const Partition& p, const Partition& q) {
  check_same_n(p, q);
  return kreweras_inverse(meet(kreweras(p), kreweras(q)));
}

Partition rotate(const Partition& p, int d) {
  const int n = p.n();
  if (n == 0) return p;
  std::vector<Partition::Block> blocks = p.blocks();
  for (auto& b : blocks) {
    for (int& e : b) e = (((e - 1 - d) % n) + n) % n + 1;
  }
  return Partition(Partition::Trusted{}, n, std::move(blocks));
}

Partition parse_compact(std::string_view text, int n) {
  std::vector<Partition::Block> blocks;
  int largest = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto bar = rest.find('|');
    std::string_view piece = rest.substr(0, bar);
    Partition::Block block;
    while (!piece.empty()) {
      const auto comma = piece.find(',');
      std::string token(piece.substr(0, comma));
      token.erase(std::remove(token.begin(), token.end(), ' '), token.end());
      if (token.empty()) throw ParseError("empty element in partition '" + std::string(text) + "'");
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw ParseError("malformed element '" + token + "'");
      }
      if (used != token.size()) throw ParseError("malformed element '" + token + "'");
      block.push_back(value);
      largest = std::max(largest, value);
      if (comma == std::string_view::npos) break;
      piece = piece.substr(comma + 1);
    }
    if (block.empty()) throw ParseError("empty block in partition '" + std::string(text) + "'");
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return Partition(n > 0 ? n : largest, std::move(blocks));
}

std::string to_compact(const Partition& p) {
  std::string out;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    if (b) out += '|';
    const auto& block = p.blocks()[b];
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(block[k]);
    }
  }
  return out;
}

}  // namespace cluster_lattice
