#pragma once

#include "gme/covariance.hpp"
#include "gme/partition.hpp"
#include "gme/types.hpp"

namespace gme {

/// Bloch-Messiah data of a pure Gaussian state: N independent squeezed modes
/// followed by a passive (linear, photon-number-preserving) mixer U_B.
///
/// Sign convention for the squeeze parameters: r > 0 squeezes the Y
/// quadrature, <δY²> = e^{−2r} and <δX²> = e^{+2r}. This is the convention
/// under which the sub-shot-noise observables of the three state families
/// come out with variance e^{−2r} exactly.
struct BlochMessiahSpec {
  CMat passive;  // N x N unitary U_B
  Vec squeeze;   // N signed squeeze parameters r_j

  int n_modes() const { return static_cast<int>(squeeze.size()); }
};

/// max |U U† − I|, used to reject non-unitary passive blocks.
double unitarity_defect(const CMat& u);

/// Quadrature representation of a passive transformation:
/// S_B = [[Re U, −Im U], [Im U, Re U]], orthogonal and symplectic.
Mat symplectic_from_passive(const CMat& u);

/// Covariance of the pure state |ψ> = U_B · (squeezers) |0>:
///   V = S_B · diag(e^{2r_1}..e^{2r_N}, e^{−2r_1}..e^{−2r_N}) · S_B^T.
/// Throws std::invalid_argument when U_B fails unitarity beyond 1e-10.
CovarianceMatrix covariance_from_bm(const BlochMessiahSpec& spec);

/// Partial-transpose symplectic spectrum of the pure state, computed from the
/// factored form D^{1/2} S_B^T (Γ Ω Γ) S_B D^{1/2} instead of the assembled
/// covariance. The inner matrix is orthogonal, so the Jacobi SVD of this
/// diagonally scaled product carries full relative accuracy even at squeeze
/// exponents where rounding the 2Nx2N covariance to doubles already smears
/// its small eigenvalues (that smearing scales like e^{4r_max} ulps).
SymplecticSpectrum pt_spectrum_from_bm(const BlochMessiahSpec& spec, const ModePartition& a);

}  // namespace gme
