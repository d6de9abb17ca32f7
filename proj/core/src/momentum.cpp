#include "gme/momentum.hpp"

#include <cmath>
#include <stdexcept>

#include "gme/expm.hpp"

namespace gme {

DriftMatrix drift_matrix(const QuadraticMomentum& p) {
  if (p.n_modes < 1) {
    throw std::invalid_argument("drift_matrix: n_modes must be >= 1");
  }
  if (p.couplings.empty()) {
    throw std::invalid_argument("drift_matrix: coupling list is empty");
  }
  const int n = p.n_modes;
  CMat c = CMat::Zero(n, n);
  for (const auto& term : p.couplings) {
    if (term.j < 0 || term.j >= n || term.k < 0 || term.k >= n) {
      throw std::invalid_argument("drift_matrix: coupling mode index out of range");
    }
    if (term.j == term.k) {
      c(term.j, term.j) += 0.5 * term.g;
    } else {
      c(term.j, term.k) += 0.5 * term.g;
      c(term.k, term.j) += 0.5 * term.g;
    }
  }
  // da_m/dz = 2 Σ_k C_mk a_k†  maps to the quadrature flow below.
  Mat m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = 2.0 * c.real();
  m.topRightCorner(n, n) = 2.0 * c.imag();
  m.bottomLeftCorner(n, n) = 2.0 * c.imag();
  m.bottomRightCorner(n, n) = -2.0 * c.real();
  return DriftMatrix{n, std::move(m)};
}

CovarianceMatrix evolve_vacuum(const DriftMatrix& m, double z) {
  if (z < 0.0) {
    throw std::invalid_argument("evolve_vacuum: propagation length must be >= 0");
  }
  const Mat mz = m.entries * z;
  const double norm = mz.cwiseAbs().rowwise().sum().maxCoeff();
  if (norm > 50.0) {
    throw std::invalid_argument("evolve_vacuum: ||Mz|| > 50, unphysically large gain");
  }
  const Mat e = expm(mz);
  Mat v = e * e.transpose();
  v = 0.5 * (v + v.transpose()).eval();
  return CovarianceMatrix{m.n_modes, std::move(v)};
}

QuadraticMomentum tripartite_momentum(double g1_mag, double g2_mag) {
  return QuadraticMomentum{3, {{0, 1, g1_mag}, {0, 2, g2_mag}}};
}

QuadraticMomentum four_mode_linear_momentum(double g1_mag, double g2_mag) {
  // Storage (b_s, b_i, c_s, c_i): g1 on the shared pair, g2 on b_i–c_s and b_s–c_i.
  return QuadraticMomentum{4, {{0, 1, g1_mag}, {1, 2, g2_mag}, {0, 3, g2_mag}}};
}

QuadraticMomentum four_mode_square_momentum(double g_mag, double phi_minus) {
  // Symmetric pumps: outer links g_mag, cross links |g1 + g2| = 2 g_mag cos φ₋.
  const double cross = 2.0 * g_mag * std::cos(phi_minus);
  return QuadraticMomentum{4, {{0, 1, g_mag}, {2, 3, g_mag}, {1, 2, cross}, {0, 3, cross}}};
}

namespace {

double max_abs_diff(const CovarianceMatrix& a, const CovarianceMatrix& b) {
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

}  // namespace

double crosscheck(const TripartiteParams& p) {
  const auto factory = tripartite_state(p);
  const auto oracle =
      evolve_vacuum(drift_matrix(tripartite_momentum(std::abs(p.g1), std::abs(p.g2))), p.z);
  return max_abs_diff(factory.covariance, oracle);
}

double crosscheck(const FourModeLinearParams& p) {
  const auto factory = four_mode_linear_state(p);
  const auto oracle =
      evolve_vacuum(drift_matrix(four_mode_linear_momentum(std::abs(p.g1), std::abs(p.g2))), p.z);
  return max_abs_diff(factory.covariance, oracle);
}

double crosscheck(const FourModeSquareParams& p) {
  const auto factory = four_mode_square_state(p);
  const double phi = reduce_phi_minus(p.phi_minus).value;
  const auto oracle = evolve_vacuum(drift_matrix(four_mode_square_momentum(p.g_mag, phi)), p.z);
  return max_abs_diff(factory.covariance, oracle);
}

double crosscheck(const StateSpec& spec) {
  return std::visit([](const auto& p) { return crosscheck(p); }, spec.params);
}

}  // namespace gme
