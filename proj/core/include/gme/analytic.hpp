#pragma once

#include "gme/covariance.hpp"
#include "gme/partition.hpp"
#include "gme/states.hpp"

namespace gme {

/// Closed-form symplectic spectra of the partially transposed covariances of
/// the three state families, one expression per bipartition. These are the
/// analytic counterparts of symplectic_spectrum(partial_transpose(...)) and
/// the two routes must agree to 1e-9 over the parameter domains.
/// Throws std::invalid_argument for partitions not matching the family.
SymplecticSpectrum analytic_pt_spectrum(const TripartiteParams& p, const ModePartition& a);
SymplecticSpectrum analytic_pt_spectrum(const FourModeLinearParams& p, const ModePartition& a);
SymplecticSpectrum analytic_pt_spectrum(const FourModeSquareParams& p, const ModePartition& a);
SymplecticSpectrum analytic_pt_spectrum(const StateSpec& spec, const ModePartition& a);

/// Logarithmic negativity of the signal-idler partition P13 of the linear
/// state: E_N = (2/ln 2) √(|g1|² + 4|g2|²) · z. Both sub-unity eigenvalues
/// e^{−2r_S}, e^{−2r_D} contribute, and r_S + r_D telescopes to the root.
double negativity_p13(const FourModeLinearParams& p);

}  // namespace gme
