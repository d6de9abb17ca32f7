#include "gme/bounds.hpp"

#include <cmath>
#include <limits>

#include "gme/labels.hpp"

namespace gme {

TripartiteBoundSuite tripartite_bound_suite(const TripartiteParams& p) {
  const auto state = tripartite_state(p);
  const auto [d, dp] = tripartite_eta_pair(p.theta());

  TripartiteBoundSuite suite;
  for (int mode = 0; mode < 3; ++mode) {
    const auto partition = ModePartition::of(3, {mode});
    suite.modes[mode] = evaluate_sum_bound(state.covariance, d, dp, partition,
                                           "mode " + std::to_string(mode));
  }

  const double g1 = std::abs(p.g1);
  const double g2 = std::abs(p.g2);
  const double inf = std::numeric_limits<double>::infinity();
  // Violation onsets in ḡz; entanglement of a weakly coupled mode needs more gain.
  suite.threshold_mode1 = g1 == 0.0 ? inf : 0.5 * std::log1p((g2 / g1) * (g2 / g1));
  suite.threshold_mode2 = g2 == 0.0 ? inf : 0.5 * std::log1p((g1 / g2) * (g1 / g2));
  return suite;
}

std::vector<FourModeBoundRow> four_mode_bound_suite(const FourModeLinearParams& p) {
  const auto state = four_mode_linear_state(p);
  const auto eta = four_mode_eta(p.gamma());

  std::vector<FourModeBoundRow> rows;
  for (const auto& partition : family_partitions(StateFamily::linear4)) {
    FourModeBoundRow row{partition, partition_label(StateFamily::linear4, partition), {}, 0};
    row.bounds[0] =
        evaluate_sum_bound(state.covariance, eta.sigma, eta.sigma_prime, partition, "sigma-sigma'");
    row.bounds[1] =
        evaluate_sum_bound(state.covariance, eta.delta, eta.delta_prime, partition, "delta-delta'");
    row.bounds[2] = evaluate_product_bound(state.covariance, eta.sigma, eta.delta_prime, partition,
                                           "sigma-delta'");
    row.bounds[3] = evaluate_product_bound(state.covariance, eta.delta, eta.sigma_prime, partition,
                                           "delta-sigma'");

    // The bound that is violated first as the gain grows: the σ pair has the
    // deepest noise reduction, so σσ' wins wherever its commutator is nonzero;
    // the single-link modes P3/P4 need the δ channel, and the shared pair P12
    // only has the mixed commutators.
    if (row.label == "P3" || row.label == "P4") {
      row.best_index = 1;
    } else if (row.label == "P12") {
      row.best_index = 2;
    } else {
      row.best_index = 0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gme
