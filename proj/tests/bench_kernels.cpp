// Serial reference vs. OpenMP kernels on the enumeration hot paths.

#include <benchmark/benchmark.h>

#include "gq/analysis.hpp"
#include "gq/experiments.hpp"
#include "gq/operation.hpp"
#include "gq/sweep.hpp"

namespace {

  gq::Exec mode(benchmark::State const& state) {
    return state.range(0) == 0 ? gq::Exec::serial : gq::Exec::parallel;
  }

  gq::FiniteRelation chain(std::size_t n) {
    gq::FiniteRelation r(n, 2);
    for (gq::Element a = 0; a < n; ++a) {
      for (gq::Element b = a; b < n; ++b) {
        r.insert(gq::Tuple{a, b});
      }
    }
    return r;
  }

  void filter_gquords(benchmark::State& state) {
    for (auto _ : state) {
      auto rels = gq::filter_relations(
          2, 4, [](gq::FiniteRelation const& r) { return gq::is_gquord(r); }, mode(state));
      benchmark::DoNotOptimize(rels);
    }
  }

  void closure_gquords(benchmark::State& state) {
    for (auto _ : state) {
      auto rels = gq::enumerate_gquords(3, 3, mode(state));
      benchmark::DoNotOptimize(rels);
    }
  }

  void polymorphisms(benchmark::State& state) {
    auto const rho = chain(3);
    for (auto _ : state) {
      auto ops = gq::pol_bounded(3, {rho}, 2, 1u << 24, mode(state));
      benchmark::DoNotOptimize(ops);
    }
  }

  void pp_family(benchmark::State& state) {
    auto const rho = chain(3);
    for (auto _ : state) {
      auto sweep = gq::pp_sweep(rho, 3, 6, mode(state));
      benchmark::DoNotOptimize(sweep);
    }
  }

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP kernel.
BENCHMARK(filter_gquords)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(closure_gquords)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(polymorphisms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(pp_family)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
