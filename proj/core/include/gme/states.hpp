#pragma once

#include <string>
#include <variant>

#include "gme/bloch_messiah.hpp"
#include "gme/covariance.hpp"
#include "gme/types.hpp"

namespace gme {

enum class StateFamily { tripartite, linear4, square4 };

std::string to_string(StateFamily family);                 // "tri", "lin4", "sq4"
StateFamily family_from_string(const std::string& name);   // throws on unknown

/// Two concurrent processes feeding one shared mode: couplings g1 (modes 0-1)
/// and g2 (modes 0-2). Storage order is (shared, coupled-1, coupled-2).
struct TripartiteParams {
  Complex g1{};
  Complex g2{};
  double z = 0.0;  // propagation length

  double theta() const;  // mixing angle, tan θ = |g2|/|g1|, in [0, π/2]
  double gbar() const;   // √(|g1|² + |g2|²)
};

/// Linear chain of four modes: g1 couples the shared pair (b_s, b_i), g2
/// couples b_i–c_s and b_s–c_i. Storage order is (b_s, b_i, c_s, c_i), so the
/// shared modes are 1,2 and the single-link modes 3,4 in 1-based labels.
struct FourModeLinearParams {
  Complex g1{};
  Complex g2{};
  double z = 0.0;

  double gbar() const;
  double ratio() const;     // x = |g2|/|g1| (inf when g1 = 0)
  double lambda_s() const;  // (√(|g1|² + 4|g2|²) + |g1|) / 2
  double lambda_d() const;  // |g2|² / Λ_S  (= Λ_S − |g1|, always in [0, Λ_S])
  double gamma() const;     // mixer angle, tan² γ = Λ_D / Λ_S
};

/// Closed square chain with equal pump strengths |g1| = |g2| = g_mag and pump
/// phase offset φ₋; the two cross links carry |g1 + g2| = 2 g_mag cos φ₋.
/// Storage order is (b_s, b_i, c_s, c_i) as for the linear state.
struct FourModeSquareParams {
  double g_mag = 0.0;
  double phi_minus = 0.0;  // in [0, π/2]; see reduce_phi_minus
  double z = 0.0;

  double gbar() const;      // √2 · g_mag
  double lambda_s() const;  // g_mag (2 cos φ₋ + 1)
  double lambda_d() const;  // g_mag (2 cos φ₋ − 1), negative past φ₋ = π/3
};

struct PhiReduction {
  double value = 0.0;
  bool reduced = false;  // true when the input was folded into [0, π/2]
};

/// Folds an arbitrary phase offset into [0, π/2] using the evenness and
/// π-periodicity of the square coupling in φ₋.
PhiReduction reduce_phi_minus(double phi);

struct StateResult {
  CovarianceMatrix covariance;
  BlochMessiahSpec bm;
};

/// Builders for the three pure entangled states. Each returns the covariance
/// together with the Bloch-Messiah data generating it. The phases of g1, g2
/// are local rotations that do not affect entanglement and are stripped
/// before construction. Preconditions violated -> std::invalid_argument.
StateResult tripartite_state(const TripartiteParams& p);
StateResult four_mode_linear_state(const FourModeLinearParams& p);
StateResult four_mode_square_state(const FourModeSquareParams& p);

/// A parsed state request (family + parameters), e.g. from a JSON spec file.
struct StateSpec {
  StateFamily family = StateFamily::tripartite;
  std::variant<TripartiteParams, FourModeLinearParams, FourModeSquareParams> params;
  bool phi_was_reduced = false;

  int n_modes() const { return family == StateFamily::tripartite ? 3 : 4; }
};

StateResult build_state(const StateSpec& spec);

}  // namespace gme
