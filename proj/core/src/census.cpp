#include "hepta/census.hpp"

#include <array>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace hepta {
namespace {

constexpr int kK = kClassifierOrder;

// Code bit for the pair (q, p), q < p, in a 7-vertex labeled code.
constexpr auto kPairBit = [] {
  std::array<std::array<Code, kK>, kK> bits{};
  for (int q = 0; q < kK; ++q)
    for (int p = q + 1; p < kK; ++p) bits[q][p] = Code{1} << pair_index(kK, q, p);
  return bits;
}();

using Buckets = std::array<std::uint64_t, 256>;

CountVector make_vector(const HostGraph& host, const Classifier& classifier, const Buckets& b) {
  CountVector out;
  out.catalog_hash = classifier.catalog_hash();
  out.counts.assign(b.begin(), b.begin() + classifier.class_count());
  out.host_order = host.order();
  out.host_degree = host.regular_degree();
  return out;
}

void merge_into(Buckets& total, const Buckets& part) {
  for (std::size_t i = 0; i < total.size(); ++i) {
    if (i == kNoClass) continue;
    if (__builtin_add_overflow(total[i], part[i], &total[i]))
      throw std::overflow_error("census count overflow in class " + std::to_string(i));
  }
}

class SubsetWalker {
 public:
  SubsetWalker(const HostGraph& host, const Classifier& classifier)
      : n_(host.order()), classifier_(classifier) {
    rows_.resize(n_);
    for (int v = 0; v < n_; ++v) rows_[v] = host.row(v)[0];
  }

  Buckets run() {
    walk(0, 0, 0);
    return buckets_;
  }

 private:
  void walk(int depth, int first, Code code) {
    if (depth == kK) {
      ++buckets_[classifier_.lookup(code)];
      return;
    }
    for (int v = first; v <= n_ - (kK - depth); ++v) {
      Code next = code;
      for (int q = 0; q < depth; ++q)
        if ((rows_[v] >> chosen_[q]) & 1u) next |= kPairBit[q][depth];
      chosen_[depth] = v;
      walk(depth + 1, v + 1, next);
    }
  }

  int n_;
  const Classifier& classifier_;
  std::vector<std::uint64_t> rows_;
  std::array<int, kK> chosen_{};
  Buckets buckets_{};
};

// Compressed neighbor lists alongside the host's bit rows.
struct Adjacency {
  explicit Adjacency(const HostGraph& host) : host(host) {
    offsets.reserve(host.order() + 1);
    offsets.push_back(0);
    for (int v = 0; v < host.order(); ++v) {
      for (int w : host.neighbors(v)) targets.push_back(w);
      offsets.push_back(static_cast<int>(targets.size()));
    }
  }
  const HostGraph& host;
  std::vector<int> offsets;
  std::vector<int> targets;
};

class Extender {
 public:
  Extender(const Adjacency& adj, const Classifier& classifier)
      : adj_(adj), table_(classifier.table().data()), covered_(adj.host.order(), 0) {
    for (auto& e : ext_) e.reserve(64);
  }

  void run_root(int root) {
    root_ = root;
    sub_[0] = root;
    auto& first = ext_[1];
    first.clear();
    ++covered_[root];
    for (int i = adj_.offsets[root]; i < adj_.offsets[root + 1]; ++i) {
      const int u = adj_.targets[i];
      if (u > root) first.push_back(u);
      ++covered_[u];
    }
    extend(1, 0);
    --covered_[root];
    for (int i = adj_.offsets[root]; i < adj_.offsets[root + 1]; ++i) --covered_[adj_.targets[i]];
  }

  const Buckets& buckets() const { return buckets_; }

 private:
  Code link(int w, int depth) const {
    Code bits = 0;
    for (int q = 0; q < depth; ++q)
      if (adj_.host.adjacent(sub_[q], w)) bits |= kPairBit[q][depth];
    return bits;
  }

  // `depth` vertices are placed; ext_[depth] holds the extension set.
  void extend(int depth, Code code) {
    const auto& ext = ext_[depth];
    if (depth == kK - 1) {
      for (int w : ext) ++buckets_[table_[code | link(w, depth)]];
      return;
    }
    for (int i = static_cast<int>(ext.size()) - 1; i >= 0; --i) {
      const int w = ext[i];
      auto& next = ext_[depth + 1];
      next.assign(ext.begin(), ext.begin() + i);
      const int begin = adj_.offsets[w];
      const int end = adj_.offsets[w + 1];
      ++covered_[w];
      for (int j = begin; j < end; ++j) {
        const int u = adj_.targets[j];
        if (covered_[u] == 0 && u > root_) next.push_back(u);
        ++covered_[u];
      }
      sub_[depth] = w;
      extend(depth + 1, code | link(w, depth));
      --covered_[w];
      for (int j = begin; j < end; ++j) --covered_[adj_.targets[j]];
    }
  }

  const Adjacency& adj_;
  const std::uint8_t* table_;
  // Number of placed vertices equal or adjacent to each host vertex.
  std::vector<std::uint8_t> covered_;
  std::array<int, kK> sub_{};
  std::array<std::vector<int>, kK> ext_;
  int root_ = 0;
  Buckets buckets_{};
};

}  // namespace

std::uint64_t CountVector::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

CountVector census_subsets(const HostGraph& host, const Classifier& classifier) {
  if (host.order() > kSubsetOracleMaxOrder)
    throw std::invalid_argument("subset census is limited to hosts of at most 64 vertices, got " +
                                std::to_string(host.order()));
  Buckets b{};
  if (host.order() >= kK) b = SubsetWalker(host, classifier).run();
  return make_vector(host, classifier, b);
}

CountVector census_extend(const HostGraph& host, const Classifier& classifier, int jobs) {
  const Adjacency adj(host);
  const int n = host.order();
  const int workers = std::max(1, std::min(resolve_jobs(jobs), n));

  Buckets total{};
  if (n < kK) return make_vector(host, classifier, total);

  std::atomic<int> next_root{0};
  std::vector<Buckets> partial(workers);
  auto work = [&](int slot) {
    Extender ext(adj, classifier);
    for (int root = next_root.fetch_add(1); root < n; root = next_root.fetch_add(1))
      ext.run_root(root);
    partial[slot] = ext.buckets();
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
  }
  for (const auto& p : partial) merge_into(total, p);
  return make_vector(host, classifier, total);
}

}  // namespace hepta
