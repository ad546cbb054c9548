#include "hepta/canon.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace hepta {
namespace {

using Perm = std::array<std::uint8_t, kMaxSmallOrder>;

class CanonMemo {
 public:
  bool find(std::uint64_t key, std::uint32_t& out) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(std::uint64_t key, std::uint32_t value) {
    std::unique_lock lock(mutex_);
    memo_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

CanonMemo& memo() {
  static CanonMemo instance;
  return instance;
}

// Branch and bound over relabelings, placing one vertex per position. Each
// placement fixes the bits between the new position and all earlier ones; the
// partial sequence with unknown bits at zero is a lower bound on any completion.
class MinimalRelabeling {
 public:
  explicit MinimalRelabeling(const SmallGraph& g) : g_(g), n_(g.order()) {
    const int m = pair_count(n_);
    for (int q = 0; q < n_; ++q)
      for (int p = q + 1; p < n_; ++p)
        seq_bit_[q][p] = std::uint32_t{1} << (m - 1 - pair_index(n_, q, p));
  }

  std::uint32_t run() {
    search(0, 0, 0);
    return static_cast<std::uint32_t>(best_);
  }

 private:
  void search(int pos, unsigned used, std::uint32_t seq) {
    if (pos >= n_ || pos >= kMaxSmallOrder) {
      best_ = seq;
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint32_t next = seq;
      for (int q = 0; q < pos; ++q)
        if (g_.adjacent(placed_[q], v)) next |= seq_bit_[q][pos];
      if (next >= best_) continue;
      placed_[pos] = v;
      search(pos + 1, used | (1u << v), next);
    }
  }

  const SmallGraph& g_;
  int n_;
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
  std::array<int, kMaxSmallOrder> placed_{};
  std::array<std::array<std::uint32_t, kMaxSmallOrder>, kMaxSmallOrder> seq_bit_{};
};

std::uint64_t count_automorphisms(const SmallGraph& g, int pos, unsigned used,
                                  std::array<int, kMaxSmallOrder>& image) {
  const int n = g.order();
  if (pos == n) return 1;
  std::uint64_t total = 0;
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1u) continue;
    if (g.degree(v) != g.degree(pos)) continue;
    bool ok = true;
    for (int q = 0; q < pos && ok; ++q) ok = g.adjacent(q, pos) == g.adjacent(image[q], v);
    if (!ok) continue;
    image[pos] = v;
    total += count_automorphisms(g, pos + 1, used | (1u << v), image);
  }
  return total;
}

}  // namespace

Code CanonKey::labeled_code() const {
  const int m = pair_count(order);
  Code c = 0;
  for (int i = 0; i < m; ++i)
    if ((bits >> (m - 1 - i)) & 1u) c |= Code{1} << i;
  return c;
}

CanonKey canonical_form(const SmallGraph& g) {
  const std::uint64_t key = (static_cast<std::uint64_t>(g.order()) << 32) | g.code();
  std::uint32_t bits = 0;
  if (!memo().find(key, bits)) {
    bits = MinimalRelabeling(g).run();
    memo().insert(key, bits);
  }
  return CanonKey{g.order(), bits};
}

std::uint64_t automorphism_count(const SmallGraph& g) {
  std::array<int, kMaxSmallOrder> image{};
  return count_automorphisms(g, 0, 0, image);
}

std::span<const Perm> permutations(int order) {
  static const auto table = [] {
    std::array<std::vector<Perm>, kMaxSmallOrder + 1> all;
    for (int n = 1; n <= kMaxSmallOrder; ++n) {
      Perm p{};
      std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
      do {
        all[n].push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + n));
    }
    return all;
  }();
  if (order < 1 || order > kMaxSmallOrder) throw std::out_of_range("permutation order out of range");
  return table[order];
}

Code relabel_code(int order, Code code, const Perm& perm) {
  Code out = 0;
  int bit = 0;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j, ++bit) {
      if (!((code >> bit) & 1u)) continue;
      int a = perm[i];
      int b = perm[j];
      if (a > b) std::swap(a, b);
      out |= Code{1} << pair_index(order, a, b);
    }
  }
  return out;
}

}  // namespace hepta
