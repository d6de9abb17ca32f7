#pragma once

#include <span>
#include <string>
#include <vector>

#include "gme/covariance.hpp"
#include "gme/partition.hpp"

namespace gme {

/// Mirror reflection of the Y-quadratures of the given modes: Γ V Γ with
/// Γ = diag(1,..,1, ±1,..,±1). Pure sign flips, hence an exact involution.
/// Any nonempty subset of modes is allowed here, including all of them
/// (a global reflection, which is symplectic and preserves the spectrum).
CovarianceMatrix y_mirror(const CovarianceMatrix& v, std::span<const int> modes);

/// Partial transpose with respect to Alice's side of the partition,
/// V → Γ_A V Γ_A. The result is symmetric and positive definite but need not
/// be a physical covariance; a symplectic eigenvalue below 1 certifies that
/// the state is not A-separable (PPT criterion in phase space).
CovarianceMatrix partial_transpose(const CovarianceMatrix& v, const ModePartition& a);

struct EntanglementReport {
  enum class Verdict { entangled, undecided };

  ModePartition partition;
  SymplecticSpectrum spectrum_pt;  // spectrum of the partial transpose
  std::vector<double> sub_unity;   // ν < 1 − tol, ascending (smallest first)
  double log_negativity = 0.0;     // −log2 Π sub_unity, 0 when empty
  Verdict verdict = Verdict::undecided;

  bool entangled() const { return verdict == Verdict::entangled; }
};

/// PPT test for one bipartition. ν < 1 − tol counts as a violation;
/// eigenvalues within tol of 1 are treated as the separability boundary
/// (verdict "undecided"), so roundoff cannot fake entanglement.
EntanglementReport ppt_report(const CovarianceMatrix& v, const ModePartition& a,
                              double tol = 1e-10);

}  // namespace gme
