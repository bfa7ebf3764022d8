#include <benchmark/benchmark.h>

#include "mv/bracket.hpp"
#include "mv/combinatorics.hpp"
#include "mv/volumes.hpp"
#include "mv/wick.hpp"

namespace {

void BM_SingleBracketCold(benchmark::State& state) {
  std::vector<int> m(static_cast<std::size_t>(state.range(0)), 2);
  m.front() = 3;
  for (auto _ : state) {
    mv::clear_bracket_cache();
    benchmark::DoNotOptimize(mv::single_bracket_coefficient(mv::PartMultiset(m)));
  }
}
BENCHMARK(BM_SingleBracketCold)->DenseRange(2, 8, 2);

void BM_ComplementEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> labels;
  for (int e = 0; e < n; ++e) labels.push_back(e / 2);
  const auto rho = mv::SetPartition::from_labels(labels);
  for (auto _ : state) {
    mv::ComplementEnumerator e(rho);
    while (e.next()) benchmark::DoNotOptimize(e.current());
    state.counters["complements"] = static_cast<double>(e.count());
  }
}
BENCHMARK(BM_ComplementEnumeration)->DenseRange(4, 12, 2);

void BM_MultiBracket(benchmark::State& state) {
  const std::vector<mv::Partition> args{{3, 2, 1}, {4, 1}, {2, 2}, {1}};
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mv::multi_bracket_coefficient(args, threads));
}
BENCHMARK(BM_MultiBracket)->Arg(1)->Arg(4);

void BM_VolumeCold(benchmark::State& state) {
  const mv::Stratum s(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) {
    mv::clear_volume_caches();
    benchmark::DoNotOptimize(mv::volume_value(s));
  }
}
BENCHMARK(BM_VolumeCold)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VolumeMinimalCold(benchmark::State& state) {
  const mv::Stratum s({static_cast<int>(state.range(0))});
  for (auto _ : state) {
    mv::clear_volume_caches();
    benchmark::DoNotOptimize(mv::volume_value(s));
  }
}
BENCHMARK(BM_VolumeMinimalCold)->Arg(2)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
