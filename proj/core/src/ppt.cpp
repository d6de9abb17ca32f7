#include "gme/ppt.hpp"

#include <cmath>
#include <stdexcept>

namespace gme {

CovarianceMatrix y_mirror(const CovarianceMatrix& v, std::span<const int> modes) {
  if (modes.empty()) {
    throw std::invalid_argument("y_mirror: empty mode set");
  }
  const int n = v.n_modes;
  Vec sign = Vec::Ones(2 * n);
  for (int j : modes) {
    if (j < 0 || j >= n) {
      throw std::invalid_argument("y_mirror: mode index out of range");
    }
    sign(n + j) = -1.0;
  }
  Mat out = v.entries;
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) {
      out(r, c) *= sign(r) * sign(c);
    }
  }
  return CovarianceMatrix{n, std::move(out)};
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& v, const ModePartition& a) {
  if (a.n_modes() != v.n_modes) {
    throw std::invalid_argument("partial_transpose: partition size does not match covariance");
  }
  return y_mirror(v, a.alice());
}

EntanglementReport ppt_report(const CovarianceMatrix& v, const ModePartition& a, double tol) {
  EntanglementReport report{.partition = a,
                            .spectrum_pt = symplectic_spectrum(partial_transpose(v, a)),
                            .sub_unity = {},
                            .log_negativity = 0.0,
                            .verdict = EntanglementReport::Verdict::undecided};
  // Spectrum is descending; collect the sub-unity tail, smallest first.
  for (auto it = report.spectrum_pt.values.rbegin(); it != report.spectrum_pt.values.rend(); ++it) {
    if (*it < 1.0 - tol) {
      report.sub_unity.push_back(*it);
      report.log_negativity -= std::log2(*it);
    } else {
      break;
    }
  }
  if (!report.sub_unity.empty()) {
    report.verdict = EntanglementReport::Verdict::entangled;
  }
  return report;
}

}  // namespace gme
