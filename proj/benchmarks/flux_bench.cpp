#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "esmhd/dissipation.hpp"
#include "esmhd/driver.hpp"
#include "esmhd/kepec.hpp"

using namespace esmhd;

namespace {

std::vector<Prim> random_states(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Prim> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Prim w;
    w.rho = 0.5 + 0.4 * u(rng) + 0.6;
    w.p = 0.5 + 0.4 * u(rng) + 0.6;
    w.vel = {u(rng), u(rng), u(rng)};
    w.B = {u(rng), u(rng), u(rng)};
    out.push_back(w);
  }
  return out;
}

} // namespace

static void BM_KepecFlux(benchmark::State &state) {
  const GasModel g{5.0 / 3.0};
  const auto ws = random_states(1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec8 f = kepec_flux(ws[i % 1023], ws[(i + 1) % 1023], g);
    benchmark::DoNotOptimize(f);
    ++i;
  }
}
BENCHMARK(BM_KepecFlux);

static void BM_KepesFlux(benchmark::State &state) {
  const GasModel g{5.0 / 3.0};
  const auto ws = random_states(1024, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const Vec8 f = kepes_flux(ws[i % 1023], ws[(i + 1) % 1023], g);
    benchmark::DoNotOptimize(f);
    ++i;
  }
}
BENCHMARK(BM_KepesFlux);

static void BM_Eigensystem(benchmark::State &state) {
  const GasModel g{5.0 / 3.0};
  const auto ws = random_states(1024, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    const InterfaceMeans m = interface_means(ws[i % 1023], ws[(i + 1) % 1023], g);
    const EigenSystem es = eigensystem(m, g);
    benchmark::DoNotOptimize(es);
    ++i;
  }
}
BENCHMARK(BM_Eigensystem);

static void BM_FvRhs2D(benchmark::State &state) {
  RunConfig cfg;
  cfg.problem = make_problem("orszag-tang");
  cfg.problem.resize_grid(static_cast<int>(state.range(0)),
                          static_cast<int>(state.range(0)), 1);
  Field f(cfg.problem.grid), rhs(cfg.problem.grid);
  initialize(f, cfg.problem.grid, cfg.problem);
  fill_ghosts(f, cfg.problem.grid, cfg.problem.bcs, cfg.problem.gas);
  for (auto _ : state) {
    fv_rhs(f, cfg.problem.grid, {ReconKind::Minmod, 0.5}, FluxKind::Kepes,
           cfg.problem.gas, rhs);
    benchmark::DoNotOptimize(rhs);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_FvRhs2D)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
