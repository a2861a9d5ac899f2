#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "hqlat/lattice.hpp"
#include "hqlat/mps.hpp"
#include "hqlat/scenario.hpp"
#include "hqlat/tebd.hpp"

using namespace hqlat;

namespace {

LatticeSpec bench_chain(int num_sites, int n_max) {
  LatticeSpec lat;
  const JCParams p(1.0, 1.0, 0.2);
  for (int j = 0; j < num_sites; ++j) lat.sites.push_back(SiteSpec::jc_unit(p, n_max));
  for (int b = 0; b + 1 < num_sites; ++b) lat.bonds.push_back({b, 0.05});
  return lat;
}

Eigen::MatrixXcd random_theta(int rows, int cols) {
  std::mt19937 rng(7);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd theta(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      theta(i, j) = std::complex<double>(dist(rng), dist(rng));
  theta /= theta.norm();
  return theta;
}

// An entangled state to give the gate benchmark realistic bond dimensions.
MatrixProductState entangled_state(const LatticeSpec& lat,
                                   const TruncationPolicy& policy) {
  MatrixProductState mps = MatrixProductState::from_product_state(
      initial_state(lat, InitialStateKind::centered_polariton));
  const auto bonds = bond_hamiltonians(lat);
  for (int b = 0; b < lat.num_bonds(); ++b) {
    mps.apply_two_site_gate(b, exponentiate_bond(bonds[b], 0.5), policy);
  }
  return mps;
}

void BM_SplitAndTruncate(benchmark::State& state) {
  const int chi = static_cast<int>(state.range(0));
  const Eigen::MatrixXcd theta = random_theta(chi * 6, 6 * chi);
  TruncationPolicy policy;
  policy.chi_max = chi;
  for (auto _ : state) {
    benchmark::DoNotOptimize(split_and_truncate(theta, policy));
  }
}
BENCHMARK(BM_SplitAndTruncate)->Arg(4)->Arg(8)->Arg(16);

void BM_ExponentiateBond(benchmark::State& state) {
  const LatticeSpec lat = bench_chain(4, 2);
  const Eigen::MatrixXcd h = bond_hamiltonians(lat)[1];
  double dt = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(exponentiate_bond(h, dt));
    dt += 1e-9;  // defeat any external caching of identical inputs
  }
}
BENCHMARK(BM_ExponentiateBond);

void BM_TwoSiteGate(benchmark::State& state) {
  const LatticeSpec lat = bench_chain(9, 2);  // odd length: a centre site exists
  TruncationPolicy policy;
  policy.chi_max = static_cast<int>(state.range(0));
  MatrixProductState mps = entangled_state(lat, policy);
  const Eigen::MatrixXcd gate = exponentiate_bond(bond_hamiltonians(lat)[4], 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mps.apply_two_site_gate(4, gate, policy));
  }
}
BENCHMARK(BM_TwoSiteGate)->Arg(4)->Arg(8);

void BM_EvolutionSlice(benchmark::State& state) {
  ScenarioSpec spec = scenario_preset("fig2");
  spec.num_sites = 8;
  spec.section_boundary = 8;
  spec.t_final = 20.0;
  spec.measure_stride = 100;
  const LatticeSpec lat = build_lattice(spec);
  SimulationConfig config;
  config.tau = spec.tau;
  config.t_final = spec.t_final;
  config.measure_stride = spec.measure_stride;
  config.policy = spec.policy;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(lat, spec.initial, config));
  }
  state.SetItemsProcessed(state.iterations() * 100);  // steps per run
}
BENCHMARK(BM_EvolutionSlice)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
