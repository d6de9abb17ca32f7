#include "gme/covariance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gme {

namespace {

// The closed-form checks demand ~1e-9 absolute agreement on eigenvalues as
// large as e^12, i.e. a handful of double ulps through an eigensolve + SVD
// chain. Running the spectrum pipeline in extended precision keeps the
// roundoff floor well below every contract tolerance.
using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using LCMat = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace

Mat symplectic_form(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
  }
  const int n = n_modes;
  Mat omega = Mat::Zero(2 * n, 2 * n);
  omega.topRightCorner(n, n) = Mat::Identity(n, n);
  omega.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
  return omega;
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
  if (n_modes < 1) {
    throw std::invalid_argument("CovarianceMatrix::vacuum: n_modes must be >= 1");
  }
  return CovarianceMatrix{n_modes, Mat::Identity(2 * n_modes, 2 * n_modes)};
}

CovarianceMatrix CovarianceMatrix::from_matrix(Mat m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("CovarianceMatrix: matrix must be square");
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw std::invalid_argument("CovarianceMatrix: dimension must be a positive even number");
  }
  const int n = static_cast<int>(m.rows()) / 2;
  return CovarianceMatrix{n, std::move(m)};
}

ValidityReport validate_covariance(const CovarianceMatrix& v, double tol) {
  ValidityReport report;
  const Mat& m = v.entries;
  const int n = v.n_modes;

  report.max_asymmetry = (m - m.transpose()).cwiseAbs().maxCoeff();
  report.symmetric = report.max_asymmetry <= 1e-9;

  // Hermitian eigensolve of V + iΩ; the smallest eigenvalue decides physicality.
  const LCMat herm = m.cast<std::complex<long double>>() +
                     std::complex<long double>(0.0L, 1.0L) *
                         symplectic_form(n).cast<std::complex<long double>>();
  Eigen::SelfAdjointEigenSolver<LCMat> solver(herm, Eigen::EigenvaluesOnly);
  report.min_eig_v_plus_i_omega = static_cast<double>(solver.eigenvalues().minCoeff());

  report.min_marginal_product = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double p = m(j, j) * m(n + j, n + j) - m(j, n + j) * m(j, n + j);
    report.min_marginal_product = std::min(report.min_marginal_product, p);
  }

  report.physical = report.symmetric && report.min_eig_v_plus_i_omega >= -tol;
  return report;
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& v) {
  const int n = v.n_modes;
  const LMat vl = v.entries.cast<long double>();
  Eigen::SelfAdjointEigenSolver<LMat> solver(vl);
  if (solver.eigenvalues().minCoeff() <= 0.0L) {
    throw std::invalid_argument("symplectic_spectrum: covariance is not positive definite");
  }
  const LMat sqrt_v = solver.operatorSqrt();
  const LMat k = sqrt_v * symplectic_form(n).cast<long double>() * sqrt_v;  // antisymmetric

  // Singular values of K come in equal pairs (±iν eigenvalues); each pair is
  // one symplectic eigenvalue.
  Eigen::JacobiSVD<LMat> svd(k);
  const auto& sigma = svd.singularValues();  // descending

  SymplecticSpectrum spectrum;
  spectrum.values.reserve(n);
  for (int j = 0; j < n; ++j) {
    spectrum.values.push_back(static_cast<double>(0.5L * (sigma(2 * j) + sigma(2 * j + 1))));
  }
  return spectrum;
}

bool is_pure(const SymplecticSpectrum& spectrum, double tol) {
  for (double nu : spectrum.values) {
    if (std::abs(nu - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace gme
