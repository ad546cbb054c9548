#include <benchmark/benchmark.h>

#include <random>

#include "hepta/canon.hpp"
#include "hepta/graph6.hpp"
#include "hepta/construct.hpp"

namespace {

// Codes are fresh each iteration so the memo table does not answer for us.
void BM_CanonicalForm(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const auto mask = (hepta::Code{1} << hepta::pair_count(order)) - 1;
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    const auto g = hepta::SmallGraph::from_code(order, static_cast<hepta::Code>(rng()) & mask);
    benchmark::DoNotOptimize(hepta::canonical_form(g));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(5, 8);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto g = hepta::random_graph(static_cast<int>(state.range(0)), {1, 2}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(hepta::parse_graph6(hepta::emit_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(99)->Arg(1000);

}  // namespace
