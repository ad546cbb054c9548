#include "hepta/polygons.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hepta/census.hpp"

namespace hepta {
namespace {

// Each chordless cycle is found twice from its smallest vertex s (once per
// direction); only the direction whose second vertex is smaller than its last
// is counted.
class CycleWalker {
 public:
  CycleWalker(const HostGraph& host, int max_length) : host_(host), max_length_(max_length) {
    adjacency_.reserve(host.order());
    for (int v = 0; v < host.order(); ++v) adjacency_.push_back(host.neighbors(v));
  }

  void run_start(int s) {
    path_[0] = s;
    for (int v1 : adjacency_[s]) {
      if (v1 <= s) continue;
      path_[1] = v1;
      grow(2);
    }
  }

  const PolygonCounts& counts() const { return counts_; }

 private:
  // path_[0..len) is an induced path; try every continuation from its tail.
  void grow(int len) {
    const int s = path_[0];
    const int tail = path_[len - 1];
    for (int u : adjacency_[tail]) {
      if (u <= s) continue;
      bool chord = false;
      for (int q = 1; q + 1 < len && !chord; ++q) chord = path_[q] == u || host_.adjacent(path_[q], u);
      if (chord) continue;
      if (host_.adjacent(s, u)) {
        if (path_[1] < u) ++counts_.by_length[len + 1];
        continue;
      }
      if (len + 1 < max_length_) {
        path_[len] = u;
        grow(len + 1);
      }
    }
  }

  const HostGraph& host_;
  int max_length_;
  std::vector<std::vector<int>> adjacency_;
  std::array<int, kMaxPolygon> path_{};
  PolygonCounts counts_{};
};

}  // namespace

PolygonCounts count_polygons(const HostGraph& host, int max_length, int jobs) {
  if (max_length < 3 || max_length > kMaxPolygon)
    throw std::out_of_range("polygon length must be in [3,7]");
  const int n = host.order();
  const int workers = std::max(1, std::min(resolve_jobs(jobs), n));

  std::atomic<int> next{0};
  std::vector<PolygonCounts> partial(workers);
  auto work = [&](int slot) {
    CycleWalker walker(host, max_length);
    for (int s = next.fetch_add(1); s < n; s = next.fetch_add(1)) walker.run_start(s);
    partial[slot] = walker.counts();
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
  }

  PolygonCounts total;
  for (const auto& p : partial)
    for (int i = 0; i <= kMaxPolygon; ++i) total.by_length[i] += p.by_length[i];
  return total;
}

}  // namespace hepta
