#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gme/covariance.hpp"
#include "gme/partition.hpp"
#include "gme/types.hpp"

namespace gme {

/// Real linear combination of quadratures, η(d) = Σ d_a Q_a.
struct NonlocalObservable {
  Vec coeffs;  // length 2N
  std::string label;
};

/// Variance <δη²(d)> = d^T V d on the state with covariance V.
double observable_variance(const CovarianceMatrix& v, const NonlocalObservable& d);

/// Commutator magnitude |<[η(d), η(d')]>| = 2 |d^T Ω d'|. The Heisenberg
/// inequality bounds both the sum of variances and twice the root-product
/// of variances from below by this value, on every physical state.
double heisenberg_bound(const NonlocalObservable& d, const NonlocalObservable& d_prime);

/// Commutator of the mirrored observables, 2 |d^T Γ_A Ω Γ_A d'|. States
/// separable across A obey the same two variance inequalities with this
/// bound; violating either certifies A-entanglement.
double ppt_bound(const NonlocalObservable& d, const NonlocalObservable& d_prime,
                 const ModePartition& a);

struct BoundEvaluation {
  enum class Kind { heisenberg, ppt };

  Kind kind = Kind::heisenberg;
  std::string label;
  double lhs = 0.0;  // sum of variances, or 2·sqrt(product) for unequal pairs
  double rhs = 0.0;  // commutator bound
  std::optional<ModePartition> partition;
  bool violated = false;  // lhs < rhs − 1e-10
};

/// Sum-of-variances form, used when the two variances are equal by symmetry.
BoundEvaluation evaluate_sum_bound(const CovarianceMatrix& v, const NonlocalObservable& d,
                                   const NonlocalObservable& d_prime,
                                   const std::optional<ModePartition>& a,
                                   std::string label = {});

/// 2·√(product) form; strictly sharper than the sum when variances differ.
BoundEvaluation evaluate_product_bound(const CovarianceMatrix& v, const NonlocalObservable& d,
                                       const NonlocalObservable& d_prime,
                                       const std::optional<ModePartition>& a,
                                       std::string label = {});

/// Sub-shot-noise observable pair of the 3-mode state (X-type, Y-type);
/// both have variance e^{−2 ḡz} and commute with each other.
std::pair<NonlocalObservable, NonlocalObservable> tripartite_eta_pair(double theta);

/// The four sub-shot-noise observables of the 4-mode linear state. Variances
/// are e^{−2Λ_S z} for the σ pair and e^{−2Λ_D z} for the δ pair.
struct FourModeEta {
  NonlocalObservable sigma;        // X-type, σ channel
  NonlocalObservable sigma_prime;  // Y-type, σ channel
  NonlocalObservable delta;        // X-type, δ channel
  NonlocalObservable delta_prime;  // Y-type, δ channel
};

FourModeEta four_mode_eta(double gamma);

}  // namespace gme
