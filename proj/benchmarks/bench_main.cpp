#include <benchmark/benchmark.h>

#include <random>

#include "uncond/lemma_lab.hpp"
#include "uncond/unconditionality.hpp"
#include "uncond/witness.hpp"

namespace {

using uncond::Exponent;

uncond::Family gaussian_family(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<uncond::FinSeq> vs;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> v(dim);
    for (auto& e : v) e = g(rng);
    vs.emplace_back(std::move(v));
  }
  return uncond::Family(std::move(vs));
}

void BM_SubsetMaxExhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto fam = gaussian_family(n, 16, 7);
  const auto q = Exponent::finite(1.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(uncond::subset_max_norm(fam, q, uncond::Exhaustive{}).value);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SubsetMaxExhaustive)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_SubsetMaxThreads(benchmark::State& state) {
  const auto fam = gaussian_family(20, 16, 7);
  uncond::EnumerationOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uncond::subset_max_norm(fam, Exponent::finite(2.0), uncond::Exhaustive{}, opts).value);
  }
}
BENCHMARK(BM_SubsetMaxThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SubsetMaxRandomized(benchmark::State& state) {
  const auto fam = gaussian_family(32, 16, 7);
  const uncond::Randomized mode{static_cast<std::uint64_t>(state.range(0)), 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(uncond::subset_max_norm(fam, Exponent::finite(2.0), mode).value);
  }
}
BENCHMARK(BM_SubsetMaxRandomized)->Arg(16)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Sylvester(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(uncond::sylvester(n).order());
}
BENCHMARK(BM_Sylvester)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_ComplexHalfPlane(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::complex<double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(1.0, 2.0 * uncond::kPi * double(k) / double(n));
  for (auto _ : state) benchmark::DoNotOptimize(uncond::complex_subset_max_half_plane(z));
}
BENCHMARK(BM_ComplexHalfPlane)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
BENCHMARK_MAIN();
