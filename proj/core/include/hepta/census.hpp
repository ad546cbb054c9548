#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hepta/classifier.hpp"
#include "hepta/host_graph.hpp"

namespace hepta {

/// Induced-occurrence count of every catalog class in one host.
struct CountVector {
  std::uint64_t catalog_hash = 0;
  std::vector<std::uint64_t> counts;
  int host_order = 0;
  std::optional<int> host_degree;

  std::uint64_t total() const;
  bool operator==(const CountVector&) const = default;
};

/// Largest host accepted by the subset oracle.
inline constexpr int kSubsetOracleMaxOrder = 64;

/// Classifies the induced graph of every 7-subset. Hosts above 64 vertices
/// are rejected with std::invalid_argument.
CountVector census_subsets(const HostGraph& host, const Classifier& classifier);

/// Visits every connected induced 7-vertex subgraph exactly once by rooted
/// extension with exclusive neighborhoods (the smallest vertex is the root).
/// Roots are shared among `jobs` workers (0 = hardware concurrency) whose
/// per-worker counts are summed, so the result does not depend on `jobs`.
/// Throws std::overflow_error if a merged class count would wrap.
CountVector census_extend(const HostGraph& host, const Classifier& classifier, int jobs = 0);

int resolve_jobs(int jobs);

}  // namespace hepta
