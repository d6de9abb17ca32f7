#include "gme/bloch_messiah.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gme {

double unitarity_defect(const CMat& u) {
  const auto n = u.rows();
  return (u * u.adjoint() - CMat::Identity(n, n)).cwiseAbs().maxCoeff();
}

Mat symplectic_from_passive(const CMat& u) {
  const auto n = u.rows();
  Mat s(2 * n, 2 * n);
  s.topLeftCorner(n, n) = u.real();
  s.topRightCorner(n, n) = -u.imag();
  s.bottomLeftCorner(n, n) = u.imag();
  s.bottomRightCorner(n, n) = u.real();
  return s;
}

CovarianceMatrix covariance_from_bm(const BlochMessiahSpec& spec) {
  const int n = spec.n_modes();
  if (n < 1 || spec.passive.rows() != n || spec.passive.cols() != n) {
    throw std::invalid_argument("covariance_from_bm: passive block must be N x N, N >= 1");
  }
  const double defect = unitarity_defect(spec.passive);
  if (!(defect <= 1e-10)) {
    throw std::invalid_argument("covariance_from_bm: passive block is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
  Vec diag(2 * n);
  for (int j = 0; j < n; ++j) {
    diag(j) = std::exp(2.0 * spec.squeeze(j));
    diag(n + j) = std::exp(-2.0 * spec.squeeze(j));
  }
  const Mat s = symplectic_from_passive(spec.passive);
  Mat v = s * diag.asDiagonal() * s.transpose();
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix{n, std::move(v)};
}

SymplecticSpectrum pt_spectrum_from_bm(const BlochMessiahSpec& spec, const ModePartition& a) {
  const int n = spec.n_modes();
  if (a.n_modes() != n) {
    throw std::invalid_argument("pt_spectrum_from_bm: partition size does not match state");
  }
  const double defect = unitarity_defect(spec.passive);
  if (!(defect <= 1e-10)) {
    throw std::invalid_argument("pt_spectrum_from_bm: passive block is not unitary (defect " +
                                std::to_string(defect) + ")");
  }
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using LVec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

  LVec sign = LVec::Ones(2 * n);
  for (int j : a.alice()) sign(n + j) = -1.0L;

  const LMat s = symplectic_from_passive(spec.passive).cast<long double>();
  LMat mirrored_omega = symplectic_form(n).cast<long double>();
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) mirrored_omega(r, c) *= sign(r) * sign(c);
  }
  const LMat w = s.transpose() * mirrored_omega * s;  // orthogonal, antisymmetric

  LVec half_scale(2 * n);
  for (int j = 0; j < n; ++j) {
    const long double r = static_cast<long double>(spec.squeeze(j));
    half_scale(j) = std::exp(r);
    half_scale(n + j) = std::exp(-r);
  }
  LMat k = w;
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) k(r, c) *= half_scale(r) * half_scale(c);
  }

  Eigen::JacobiSVD<LMat> svd(k);
  const auto& sigma = svd.singularValues();
  SymplecticSpectrum spectrum;
  spectrum.values.reserve(n);
  for (int j = 0; j < n; ++j) {
    spectrum.values.push_back(static_cast<double>(0.5L * (sigma(2 * j) + sigma(2 * j + 1))));
  }
  return spectrum;
}

}  // namespace gme
