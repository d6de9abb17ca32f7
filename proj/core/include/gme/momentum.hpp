#pragma once

#include <vector>

#include "gme/covariance.hpp"
#include "gme/states.hpp"
#include "gme/types.hpp"

namespace gme {

/// One pair-creation term g·a_j†a_k† − g*·a_j a_k of a quadratic generator,
/// symmetrized over j ↔ k. A diagonal term (j = j, g) is the single-mode
/// squeezer ½g·a_j†a_j† − h.c., so that evolve_vacuum over z gives
/// V = diag(e^{2gz}, e^{−2gz}) on that mode.
struct PairCoupling {
  int j = 0;
  int k = 0;
  Complex g{};
};

/// The quadratic momentum generating the z-evolution, P = −iħ Σ (g a†a† − h.c.).
struct QuadraticMomentum {
  int n_modes = 0;
  std::vector<PairCoupling> couplings;
};

/// Linearized Heisenberg flow of a quadratic momentum: d<Q>/dz = M <Q> and
/// dV/dz = MV + VM^T. M is Ω-Hamiltonian (ΩM symmetric), so e^{Mz} is
/// symplectic and evolution preserves purity.
struct DriftMatrix {
  int n_modes = 0;
  Mat entries;  // 2N x 2N
};

/// Assembles M = 2 [[Re C, Im C], [Im C, −Re C]] from the coupling matrix C.
/// Throws std::invalid_argument on empty coupling lists or bad indices.
DriftMatrix drift_matrix(const QuadraticMomentum& p);

/// V(z) = e^{Mz} · e^{M^T z} (vacuum input). Rejects z < 0 and drift norms
/// ‖Mz‖ > 50 (unphysically large gain; the exponential would overflow).
CovarianceMatrix evolve_vacuum(const DriftMatrix& m, double z);

/// The three momenta of the state families, with the local phase rotations
/// already applied (couplings reduced to real magnitudes):
QuadraticMomentum tripartite_momentum(double g1_mag, double g2_mag);
QuadraticMomentum four_mode_linear_momentum(double g1_mag, double g2_mag);
QuadraticMomentum four_mode_square_momentum(double g_mag, double phi_minus);

/// Max absolute elementwise deviation between the covariance built by direct
/// exponentiation of the momentum and the one from the Bloch-Messiah factory.
/// This is the cross-check anchoring both construction routes.
double crosscheck(const TripartiteParams& p);
double crosscheck(const FourModeLinearParams& p);
double crosscheck(const FourModeSquareParams& p);
double crosscheck(const StateSpec& spec);

}  // namespace gme
