#pragma once

// Brute-force reference implementations used only by tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "hepta/host_graph.hpp"
#include "hepta/small_graph.hpp"

namespace hepta::oracle {

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  if (k > n) return;
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    f(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Minimum upper-triangle bit sequence (row-major, first pair most
/// significant) over every relabeling, by plain std::next_permutation.
inline std::uint32_t min_relabeling(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = UINT32_MAX;
  do {
    // perm[p] = original vertex placed at position p
    std::uint32_t seq = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) seq = (seq << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    best = std::min(best, seq);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Spanning cycle search over permutations fixing vertex 0.
inline bool has_spanning_cycle(const SmallGraph& g) {
  const int n = g.order();
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.adjacent(rest[i], rest[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

/// Pairwise common-neighbor check straight from the adjacency predicate.
inline bool locally_admissible(const SmallGraph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      int common = 0;
      for (int w = 0; w < g.order(); ++w) common += g.adjacent(u, w) && g.adjacent(v, w);
      if (common > (g.adjacent(u, v) ? 1 : 2)) return false;
    }
  return true;
}

/// True iff the subset induces a single chordless cycle through all of it.
inline bool induces_cycle(const HostGraph& host, const std::vector<int>& s) {
  const SmallGraph g = host.induced(s);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  // 2-regular and connected means one cycle.
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w) && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.order();
}

inline std::uint64_t induced_cycles(const HostGraph& host, int length) {
  std::uint64_t count = 0;
  for_each_subset(host.order(), length, [&](const std::vector<int>& s) {
    if (induces_cycle(host, s)) ++count;
  });
  return count;
}

/// Isomorphism test by trying every bijection; fine up to ~10 vertices.
inline bool isomorphic(const HostGraph& a, const HostGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace hepta::oracle
