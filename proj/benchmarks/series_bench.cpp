// Microbenchmarks for the hot paths: series arithmetic, differentiation,
// budgeted inversion and couple validation. Inputs are seeded so runs are
// comparable across machines.

#include <hahn/couple.hpp>
#include <hahn/derivation.hpp>
#include <hahn/sampling.hpp>
#include <hahn/series.hpp>

#include <benchmark/benchmark.h>

#include <cstddef>

namespace {

hahn::HahnSeries sampled_series(hahn::IndexSet index, std::size_t terms,
                                std::uint64_t seed) {
  hahn::Sampler sampler(seed);
  hahn::HahnSeries f = hahn::HahnSeries::zero(index);
  for (std::size_t k = 0; k < terms; ++k)
    f.set_coeff(sampler.element(index, 6, 4), sampler.nonzero_rational(9, 5));
  return f;
}

void bm_series_multiply(benchmark::State& state) {
  hahn::IndexSet index(3);
  hahn::HahnSeries f = sampled_series(index, static_cast<std::size_t>(state.range(0)), 1);
  hahn::HahnSeries g = sampled_series(index, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}

void bm_derive(benchmark::State& state) {
  hahn::IndexSet index(3);
  hahn::DerivationContext ctx(hahn::AsymptoticCouple::log_couple(index));
  hahn::HahnSeries f = sampled_series(index, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(ctx.derive(f));
}

void bm_invert(benchmark::State& state) {
  hahn::IndexSet index(2);
  hahn::HahnSeries f = hahn::HahnSeries::constant(index, 2);
  f.set_coeff(hahn::GroupElement::unit(index, 1), 1);
  f.set_coeff(hahn::GroupElement::unit(index, 0), hahn::Scalar(1) / 3);
  hahn::TruncationBudget budget(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hahn::invert(f, budget));
}

void bm_validate_couple(benchmark::State& state) {
  hahn::IndexSet index(4);
  hahn::AsymptoticCouple couple = hahn::AsymptoticCouple::log_couple(index);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        hahn::validate_axioms(couple, static_cast<std::size_t>(state.range(0)), 42));
}

}  // namespace

BENCHMARK(bm_series_multiply)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_derive)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(bm_invert)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(bm_validate_couple)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
