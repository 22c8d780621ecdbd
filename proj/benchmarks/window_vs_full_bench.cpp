#include <coverkit/covering.hpp>
#include <coverkit/oracle.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace coverkit;

// Systems of zero classes with the first `count` moduli of a few families.
const std::vector<std::vector<Modulus>> kFamilies{
    {2, 3, 5, 7, 11, 13, 17},
    {2, 4, 8, 16, 32, 64, 128},
    {6, 10, 15, 21, 35, 77, 143},
};

System build(std::int64_t family, std::int64_t count) {
  std::vector<WeightedSequence> seqs;
  for (std::int64_t i = 0; i < count; ++i) {
    seqs.emplace_back(0, kFamilies[static_cast<std::size_t>(family)][static_cast<std::size_t>(i)]);
  }
  return System(std::move(seqs));
}

void BM_Window(benchmark::State& state) {
  const System sys = build(state.range(0), state.range(1));
  const auto target = PeriodicValueTable::constant(1);
  WindowOptions opts;
  opts.exhaustive = true;
  ScanVerdict v;
  for (auto _ : state) {
    v = verify_target_function(sys, target, 0, opts);
    benchmark::DoNotOptimize(v.holds);
  }
  state.counters["points"] = static_cast<double>(v.points_examined);
}

void BM_FullPeriod(benchmark::State& state) {
  const System sys = build(state.range(0), state.range(1));
  const auto target = PeriodicValueTable::constant(1);
  ScanVerdict v;
  for (auto _ : state) {
    v = brute_cover_verdict(sys, target, {}, true);
    benchmark::DoNotOptimize(v.holds);
  }
  state.counters["points"] = static_cast<double>(v.points_examined);
}

void families(benchmark::internal::Benchmark* b) {
  for (std::int64_t f = 0; f < 3; ++f) {
    for (std::int64_t count = 2; count <= 6; count += 2) b->Args({f, count});
  }
}

}  // namespace

BENCHMARK(BM_Window)->Apply(families);
BENCHMARK(BM_FullPeriod)->Apply(families);
BENCHMARK_MAIN();
