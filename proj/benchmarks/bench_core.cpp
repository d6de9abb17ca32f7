#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "gme/analytic.hpp"
#include "gme/bloch_messiah.hpp"
#include "gme/expm.hpp"
#include "gme/momentum.hpp"
#include "gme/ppt.hpp"
#include "gme/report.hpp"
#include "gme/states.hpp"
#include "gme/sweep.hpp"

namespace {

using namespace gme;

CovarianceMatrix random_covariance(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> squeeze(-1.0, 1.0);
  CMat a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<CMat> qr(a);
  Vec rs(n);
  for (int j = 0; j < n; ++j) rs(j) = squeeze(rng);
  return covariance_from_bm(BlochMessiahSpec{CMat(qr.householderQ()), rs});
}

void BM_TripartiteFactory(benchmark::State& state) {
  const TripartiteParams p{0.6, 0.8, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(tripartite_state(p).covariance);
  }
}
BENCHMARK(BM_TripartiteFactory);

void BM_FourModeSquareFactory(benchmark::State& state) {
  const FourModeSquareParams p{1.0, 0.7, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_mode_square_state(p).covariance);
  }
}
BENCHMARK(BM_FourModeSquareFactory);

void BM_SymplecticSpectrum(benchmark::State& state) {
  const auto v = random_covariance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symplectic_spectrum(v));
  }
}
BENCHMARK(BM_SymplecticSpectrum)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_PptReport(benchmark::State& state) {
  const auto v = four_mode_linear_state({0.6, 0.8, 1.0}).covariance;
  const auto partition = ModePartition::of(4, {0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ppt_report(v, partition));
  }
}
BENCHMARK(BM_PptReport);

void BM_PtSpectrumFromFactor(benchmark::State& state) {
  const auto bm = four_mode_linear_state({0.6, 0.8, 1.0}).bm;
  const auto partition = ModePartition::of(4, {0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pt_spectrum_from_bm(bm, partition));
  }
}
BENCHMARK(BM_PtSpectrumFromFactor);

void BM_Expm8(benchmark::State& state) {
  const auto m = drift_matrix(four_mode_square_momentum(0.7, 0.9));
  const Mat mz = m.entries * 1.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expm(mz));
  }
}
BENCHMARK(BM_Expm8);

void BM_EvolutionCrosscheck(benchmark::State& state) {
  const FourModeLinearParams p{0.6, 0.8, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(crosscheck(p));
  }
}
BENCHMARK(BM_EvolutionCrosscheck);

void BM_SweepPoint(benchmark::State& state) {
  // one full grid point of the lin4 sweep: report across all 7 partitions
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_report(sweep_point(StateFamily::linear4, 1.3, 0.9)));
  }
}
BENCHMARK(BM_SweepPoint);

void BM_AnalyticSpectrum(benchmark::State& state) {
  const FourModeLinearParams p{0.6, 0.8, 1.0};
  const auto partition = ModePartition::of(4, {0, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_pt_spectrum(p, partition));
  }
}
BENCHMARK(BM_AnalyticSpectrum);

}  // namespace

BENCHMARK_MAIN();
