#include <benchmark/benchmark.h>

#include <vector>

#include "sdiep/coherence.hpp"
#include "sdiep/cycle_basis.hpp"
#include "sdiep/hadamard.hpp"
#include "sdiep/oracle.hpp"
#include "sdiep/phase_basis.hpp"
#include "sdiep/realise.hpp"

namespace {

sdiep::Spectrum flat_spectrum(std::size_t n, double trace) {
  std::vector<double> v(n, -(1.0 - trace) / static_cast<double>(n - 1));
  v[0] = 1.0;
  return sdiep::validate_spectrum(std::move(v));
}

void BuildCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::cycle::build_canonical(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildCanonical)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BuildPhaseOptimised(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::phase::build_phase_optimised(n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BuildPhaseOptimised)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void SylvesterBasis(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sdiep::hadamard::normalise_perron(sdiep::hadamard::sylvester(d)));
  }
}
BENCHMARK(SylvesterBasis)->DenseRange(4, 8, 2);

void Realise(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = sdiep::phase::build_phase_optimised(n);
  const auto s = flat_spectrum(n, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::realise(s, q));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(Realise)->RangeMultiplier(2)->Range(16, 256)->Complexity();

// Fast path O(n^2) against the oracle's O(n^3) triple loop.
void CoherenceFast(benchmark::State& state) {
  const auto q = sdiep::cycle::build_canonical(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::coherence(q));
}
BENCHMARK(CoherenceFast)->RangeMultiplier(2)->Range(16, 128);

void CoherenceOracle(benchmark::State& state) {
  const auto q = sdiep::cycle::build_canonical(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sdiep::oracle::brute_coherence(q));
}
BENCHMARK(CoherenceOracle)->RangeMultiplier(2)->Range(16, 128);

}  // namespace

BENCHMARK_MAIN();
