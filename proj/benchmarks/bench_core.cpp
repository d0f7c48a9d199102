#include <numbers>

#include <benchmark/benchmark.h>

#include "qlangevin/evolution.hpp"
#include "qlangevin/friction.hpp"
#include "qlangevin/liouvillian.hpp"
#include "qlangevin/thermo.hpp"

using namespace qlangevin;

namespace {

SystemModel oscillator() { return build_oscillator(16, 1.0, 1.0, 1.0); }
BathParams bath() { return BathParams(1.0, 0.3); }

Liouvillian liouvillian() {
  const SystemModel m = oscillator();
  return assemble(m, bath(), friction_operator(m, bath()));
}

}  // namespace

static void BM_Assemble(benchmark::State& state) {
  const SystemModel m = oscillator();
  const ComplexMatrix theta = friction_operator(m, bath());
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(m, bath(), theta));
  }
}
BENCHMARK(BM_Assemble)->Unit(benchmark::kMillisecond);

static void BM_Propagator256(benchmark::State& state) {
  const Liouvillian l = liouvillian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(l, std::numbers::pi / 200.0));
  }
}
BENCHMARK(BM_Propagator256)->Unit(benchmark::kMillisecond);

static void BM_PropagationStep(benchmark::State& state) {
  const ComplexMatrix p = propagator(liouvillian(), std::numbers::pi / 200.0);
  ComplexVector v = vectorize(initial_state(16, 1.0).matrix());
  for (auto _ : state) {
    v = p * v;
    benchmark::DoNotOptimize(v.data());
  }
}
BENCHMARK(BM_PropagationStep);

static void BM_ObserverEvaluate(benchmark::State& state) {
  const SystemModel m = oscillator();
  const ComplexMatrix theta = friction_operator(m, bath());
  const ThermoEvaluator obs(m, bath(), assemble(m, bath(), theta), theta);
  const ComplexMatrix rho = initial_state(16, 2.0).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(obs.evaluate(rho, 0.0));
  }
}
BENCHMARK(BM_ObserverEvaluate);

static void BM_HermEig16(benchmark::State& state) {
  const ComplexMatrix rho = canonical_state(oscillator(), bath()).rho;
  for (auto _ : state) {
    benchmark::DoNotOptimize(herm_eig(rho));
  }
}
BENCHMARK(BM_HermEig16);

static void BM_ThetaRoute(benchmark::State& state) {
  const SystemModel m = build_well(15, 3.0, 2.0, 1.0);
  const BathParams b(1.0, 1.0);
  const auto route = static_cast<ThetaRoute>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(friction_operator(m, b, route));
  }
  state.SetLabel(to_string(route));
}
BENCHMARK(BM_ThetaRoute)
    ->Arg(static_cast<int>(ThetaRoute::energy_basis))
    ->Arg(static_cast<int>(ThetaRoute::lyapunov))
    ->Arg(static_cast<int>(ThetaRoute::quadrature))
    ->Arg(static_cast<int>(ThetaRoute::series))
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
