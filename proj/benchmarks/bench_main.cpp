// Microbenchmarks for the hot paths: certification sweeps, orbit
// enumeration, series arithmetic, and the transfer map.  All on the running
// example (full 2-shift vs. golden mean shift).

#include "coeq/coe.hpp"
#include "coeq/cohomology.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/shift_space.hpp"
#include "coeq/transfer.hpp"
#include "coeq/zeta.hpp"

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

namespace {

using namespace coeq;

CoeSpec example_spec() {
  ShiftSpace A = make_shift_space({{1, 1}, {1, 1}});
  ShiftSpace B = make_shift_space({{1, 1}, {1, 0}});
  using Rule = Transducer::Rule;
  std::vector<std::optional<Rule>> hr = {Rule{0, {1}}, Rule{0, {2, 1}}};
  Transducer h = make_transducer(A, B, {"s0"}, 0, hr);
  std::vector<std::optional<Rule>> gr = {Rule{0, {1}}, Rule{1, {}},
                                         Rule{0, {2}}, std::nullopt};
  Transducer hinv = make_transducer(B, A, {"s0", "s1"}, 0, gr);
  CylFn k1 = CylFn::constant(A, 0);
  CylFn l1(A, 1, {{{1}, 1}, {{2}, 2}});
  CylFn k2(B, 1, {{{1}, 0}, {{2}, 1}});
  CylFn l2 = CylFn::constant(B, 1);
  return make_coe_spec(A, B, h, hinv, k1, l1, k2, l2);
}

void BM_verify_coe(benchmark::State& state) {
  const CoeSpec spec = example_spec();
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_coe(spec, bound));
  }
}
BENCHMARK(BM_verify_coe)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_orbit_enumeration(benchmark::State& state) {
  const ShiftSpace A = make_shift_space({{1, 1}, {1, 1}});
  const int P = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(periodic_orbits_up_to(A, P));
  }
}
BENCHMARK(BM_orbit_enumeration)->Arg(12)->Arg(16)->Arg(18)
    ->Unit(benchmark::kMillisecond);

void BM_weighted_zeta(benchmark::State& state) {
  const CoeSpec spec = example_spec();
  const CylFn c1 = cocycle_c(spec, 1);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_zeta(c1, L));
  }
}
BENCHMARK(BM_weighted_zeta)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_weighted_zeta_halfmean(benchmark::State& state) {
  // weight with min cycle mean 1/2: the enumeration runs to period 2L
  const CoeSpec spec = example_spec();
  const CylFn c2 = cocycle_c(spec, 2);
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weighted_zeta(c2, L));
  }
}
BENCHMARK(BM_weighted_zeta_halfmean)->Arg(6)->Arg(8)
    ->Unit(benchmark::kMillisecond);

void BM_zeta_series(benchmark::State& state) {
  const ShiftSpace B = make_shift_space({{1, 1}, {1, 0}});
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_series(B, L));
  }
}
BENCHMARK(BM_zeta_series)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_psi_transfer(benchmark::State& state) {
  const CoeSpec spec = example_spec();
  const int D = static_cast<int>(state.range(0));
  const CylFn f(spec.B, 1, {{{1}, 3}, {{2}, -1}});
  const CylFn deep = extend(f, D);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_transfer(spec, deep));
  }
}
BENCHMARK(BM_psi_transfer)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_min_cycle_mean(benchmark::State& state) {
  const CoeSpec spec = example_spec();
  const CylFn c1 = cocycle_c(spec, 1);
  const CylFn deep = extend(c1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_cycle_mean(deep));
  }
}
BENCHMARK(BM_min_cycle_mean)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
