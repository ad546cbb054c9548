#include <benchmark/benchmark.h>

#include "hepta/catalog.hpp"
#include "hepta/census.hpp"
#include "hepta/classifier.hpp"
#include "hepta/construct.hpp"
#include "hepta/polygons.hpp"

namespace {

const hepta::Classifier& classifier() {
  static const hepta::Classifier c = hepta::build_classifier(hepta::generate_catalog(7, true));
  return c;
}

void BM_CatalogOrder7(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hepta::generate_catalog(7, true));
}
BENCHMARK(BM_CatalogOrder7)->Unit(benchmark::kMillisecond);

void BM_BuildClassifier(benchmark::State& state) {
  const hepta::Catalog catalog = hepta::generate_catalog(7, true);
  for (auto _ : state) benchmark::DoNotOptimize(hepta::build_classifier(catalog));
}
BENCHMARK(BM_BuildClassifier)->Unit(benchmark::kMillisecond);

// Regular hosts of growing order at degree 8.
void BM_CensusExtend(benchmark::State& state) {
  const auto host = hepta::random_regular(static_cast<int>(state.range(0)), 8, 1);
  classifier();
  for (auto _ : state) benchmark::DoNotOptimize(hepta::census_extend(host, classifier(), 1));
}
BENCHMARK(BM_CensusExtend)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_CensusSubsets(benchmark::State& state) {
  const auto host = hepta::random_regular(static_cast<int>(state.range(0)), 8, 1);
  classifier();
  for (auto _ : state) benchmark::DoNotOptimize(hepta::census_subsets(host, classifier()));
}
BENCHMARK(BM_CensusSubsets)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_Polygons(benchmark::State& state) {
  const auto host = hepta::random_regular(99, 14, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hepta::count_polygons(host));
}
BENCHMARK(BM_Polygons)->Unit(benchmark::kMillisecond);

}  // namespace
