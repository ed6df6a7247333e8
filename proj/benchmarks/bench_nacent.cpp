#include <benchmark/benchmark.h>

#include "nacent/classifier.hpp"
#include "nacent/corpus.hpp"
#include "nacent/partition.hpp"
#include "nacent/predicates.hpp"

namespace {

using namespace nacent;

const FiniteGroup& flagship() {
  static const FiniteGroup g = heisenberg_frobenius(7, 3);
  return g;
}

void BM_CentStatsFlagship(benchmark::State& state) {
  const auto& g = flagship();
  for (auto _ : state) benchmark::DoNotOptimize(cent_stats(g).cent_count());
}
BENCHMARK(BM_CentStatsFlagship)->Unit(benchmark::kMillisecond);

void BM_Centralizer(benchmark::State& state) {
  const auto& g = flagship();
  Element x = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(centralizer(g, x).size());
    x = x + 1 == g.order() ? 1 : x + 1;
  }
}
BENCHMARK(BM_Centralizer);

void BM_FromPermutations(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::uint32_t> cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
  for (std::size_t i = 0; i < n; ++i) swap[i] = static_cast<std::uint32_t>(i);
  std::swap(swap[0], swap[1]);
  for (auto _ : state) benchmark::DoNotOptimize(FiniteGroup::from_permutations({cycle, swap}).order());
}
BENCHMARK(BM_FromPermutations)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CayleyValidation(benchmark::State& state) {
  const auto g = build(parse_spec(state.range(0) == 0 ? "symmetric(5)" : "heisenberg_frobenius(7,3)"));
  for (auto _ : state) benchmark::DoNotOptimize(FiniteGroup::from_cayley_table(g.table(), g.order()).order());
}
BENCHMARK(BM_CayleyValidation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CentralizerPartitionFlagship(benchmark::State& state) {
  const auto& g = flagship();
  for (auto _ : state) benchmark::DoNotOptimize(centralizer_partition(g).has_value());
}
BENCHMARK(BM_CentralizerPartitionFlagship)->Unit(benchmark::kMillisecond);

void BM_VerifyGroupFlagship(benchmark::State& state) {
  const auto& g = flagship();
  for (auto _ : state) benchmark::DoNotOptimize(verify_group(g).violations.size());
}
BENCHMARK(BM_VerifyGroupFlagship)->Unit(benchmark::kMillisecond);

void BM_NormalSubgroups(benchmark::State& state) {
  const auto g = symmetric(5);
  for (auto _ : state) benchmark::DoNotOptimize(normal_subgroups(g).size());
}
BENCHMARK(BM_NormalSubgroups)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
