#pragma once

#include <vector>

#include "gme/types.hpp"

namespace gme {

// Conventions used throughout:
//   quadratures  X = a + a†,  Y = (a − a†)/i,   [X, Y] = 2i
//   ordering     Q = (X_1..X_N, Y_1..Y_N)  ("xxyy"; interleaved ordering is
//                deliberately not supported)
//   vacuum       V = identity
// All bound constants and tolerances assume this convention.

/// Symplectic form Ω = [[0, I_N], [−I_N, 0]] in the xxyy ordering.
/// Throws std::invalid_argument for n_modes < 1.
Mat symplectic_form(int n_modes);

/// Second-moment matrix of an N-mode Gaussian state, V_ab = <{δQ_a, δQ_b}>.
struct CovarianceMatrix {
  int n_modes = 0;
  Mat entries;  // 2N x 2N, real symmetric

  static CovarianceMatrix vacuum(int n_modes);

  /// Wraps a 2N x 2N matrix. Throws std::invalid_argument when the input is
  /// non-square or of odd dimension. Symmetry is checked by validate_covariance,
  /// not here, so partial transposes and unphysical test inputs can be carried.
  static CovarianceMatrix from_matrix(Mat m);

  int dim() const { return 2 * n_modes; }
};

struct ValidityReport {
  bool symmetric = false;
  bool physical = false;
  double max_asymmetry = 0.0;           // max |V - V^T|
  double min_eig_v_plus_i_omega = 0.0;  // smallest eigenvalue of V + iΩ
  double min_marginal_product = 0.0;    // min_j  V_xx V_yy − V_xy² of mode j

  bool ok() const { return symmetric && physical; }
};

/// Physicality test: V + iΩ must be positive semidefinite (uncertainty
/// principle in matrix form). `tol` bounds how negative the smallest
/// eigenvalue may be; asymmetry beyond 1e-9 rejects the matrix outright.
ValidityReport validate_covariance(const CovarianceMatrix& v, double tol = 1e-10);

/// Symplectic spectrum {ν_1 ≥ ... ≥ ν_N}: positive eigenvalues of iΩV.
/// ν_j ≥ 1 for physical states, = 1 for pure states (Williamson form).
struct SymplecticSpectrum {
  std::vector<double> values;  // descending

  std::size_t size() const { return values.size(); }
  double min() const { return values.back(); }
  double max() const { return values.front(); }
};

/// Computes the spectrum from the singular values of V^{1/2} Ω V^{1/2},
/// which come in equal pairs. Uses only a symmetric eigensolve plus an SVD;
/// the generic eigensolve of iΩV serves as an independent test oracle.
/// Throws std::invalid_argument when V is not positive definite.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v);

/// True when every symplectic eigenvalue is within `tol` of 1.
bool is_pure(const SymplecticSpectrum& spectrum, double tol = 1e-9);

}  // namespace gme
