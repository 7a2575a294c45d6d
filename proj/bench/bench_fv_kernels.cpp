// Serial reference vs OpenMP kernels of the finite-volume step.

#include <benchmark/benchmark.h>

#include <vector>

#include "hornwave/fv_kernels.hpp"
#include "hornwave/fv_solver.hpp"
#include "hornwave/gas_model.hpp"

namespace {

using namespace hornwave;

struct Fixture {
  explicit Fixture(std::size_t n)
      : gas(GasConstants::make()),
        src{0.01, source_constant_for(0.2, 10.0, gas)},
        state(sinusoidal_state(n, 200.0, 0.01, 0.2, src, gas)),
        fq(n),
        fm(n),
        q_out(n),
        m_out(n) {}

  GasConstants gas;
  SourceParams src;
  FieldState state;
  std::vector<double> fq, fm, q_out, m_out;
};

template <bool Parallel>
void BM_Fluxes(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    if constexpr (Parallel) {
      kernels::omp::interface_fluxes(f.state.q, f.state.m, f.gas.c0, kernels::FluxKind::Rusanov, f.fq, f.fm);
    } else {
      kernels::serial::interface_fluxes(f.state.q, f.state.m, f.gas.c0, kernels::FluxKind::Rusanov, f.fq, f.fm);
    }
    benchmark::DoNotOptimize(f.fq.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_Step(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  SolverConfig cfg;
  cfg.execution = Parallel ? Execution::Parallel : Execution::Serial;
  for (auto _ : st) {
    auto next = step(f.state, cfg, f.src, f.gas);
    benchmark::DoNotOptimize(next.q.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_Correlation(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  std::vector<double> out(f.state.size());
  for (auto _ : st) {
    if constexpr (Parallel) {
      kernels::omp::circular_correlation(f.state.q, f.state.q, out);
    } else {
      kernels::serial::circular_correlation(f.state.q, f.state.q, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Fluxes<false>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Fluxes<true>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Step<false>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Step<true>)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_Correlation<false>)->RangeMultiplier(2)->Range(1 << 10, 1 << 13);
BENCHMARK(BM_Correlation<true>)->RangeMultiplier(2)->Range(1 << 10, 1 << 13);

BENCHMARK_MAIN();
