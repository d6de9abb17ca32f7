#pragma once

#include <string>
#include <vector>

namespace gme {

/// Test hook: corrupts the factory inside the verification run so the named
/// checks demonstrably catch a broken build (fault injection).
enum class FaultInjection { none, flip_squeeze_sign };

struct VerifyOptions {
  bool fine = false;  // coarse: seconds; fine: full 101x101 oracle grids
  FaultInjection fault = FaultInjection::none;
};

struct VerifyCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs the consistency suite: factory-vs-oracle covariances, closed-form
/// vs numeric PT spectra, factory purity, and the sufficiency ordering
/// (variance-bound violations must be a subset of PPT violations).
std::vector<VerifyCheck> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace gme
