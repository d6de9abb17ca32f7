#pragma once

#include <array>
#include <string>
#include <vector>

#include "gme/observables.hpp"
#include "gme/states.hpp"

namespace gme {

/// Variance-bound tests of the 3-mode state: the mirrored-commutator bound of
/// the (η, η') pair against each single-mode partition. Mode 0's bound is
/// violated for any gain; modes 1 and 2 require ḡz above a threshold.
struct TripartiteBoundSuite {
  std::array<BoundEvaluation, 3> modes;  // partitions {0}, {1}, {2}
  double threshold_mode1 = 0.0;          // onset in ḡz: ln √(1 + x²)
  double threshold_mode2 = 0.0;          // onset in ḡz: ln √(1 + 1/x²)
};

TripartiteBoundSuite tripartite_bound_suite(const TripartiteParams& p);

/// One partition row of the 4-mode linear suite: the four mirrored-commutator
/// bounds (σσ', δδ' as variance sums; σδ', δσ' as root-products) plus the
/// index of the bound that is violated first as the gain grows.
struct FourModeBoundRow {
  ModePartition partition;
  std::string label;  // P1..P14
  std::array<BoundEvaluation, 4> bounds;
  int best_index = 0;

  const BoundEvaluation& best() const { return bounds[best_index]; }
  bool violated() const { return best().violated; }
};

/// Evaluates all seven partitions of the linear state. Zero gain yields no
/// violations. (The square state has no variance suite; it is certified by
/// PPT spectra only.)
std::vector<FourModeBoundRow> four_mode_bound_suite(const FourModeLinearParams& p);

}  // namespace gme
