#include "gme/states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gme {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

std::string to_string(StateFamily family) {
  switch (family) {
    case StateFamily::tripartite: return "tri";
    case StateFamily::linear4: return "lin4";
    case StateFamily::square4: return "sq4";
  }
  throw std::invalid_argument("to_string: bad StateFamily");
}

StateFamily family_from_string(const std::string& name) {
  if (name == "tri") return StateFamily::tripartite;
  if (name == "lin4") return StateFamily::linear4;
  if (name == "sq4") return StateFamily::square4;
  throw std::invalid_argument("unknown state family '" + name + "' (expected tri, lin4 or sq4)");
}

double TripartiteParams::theta() const { return std::atan2(std::abs(g2), std::abs(g1)); }
double TripartiteParams::gbar() const { return std::hypot(std::abs(g1), std::abs(g2)); }

double FourModeLinearParams::gbar() const { return std::hypot(std::abs(g1), std::abs(g2)); }

double FourModeLinearParams::ratio() const {
  const double g1m = std::abs(g1);
  const double g2m = std::abs(g2);
  return g1m == 0.0 ? std::numeric_limits<double>::infinity() : g2m / g1m;
}

double FourModeLinearParams::lambda_s() const {
  return 0.5 * (std::hypot(std::abs(g1), 2.0 * std::abs(g2)) + std::abs(g1));
}

double FourModeLinearParams::lambda_d() const {
  // Λ_S Λ_D = |g2|² exactly; dividing avoids cancellation for small |g2|.
  const double g2m = std::abs(g2);
  return g2m == 0.0 ? 0.0 : g2m * g2m / lambda_s();
}

double FourModeLinearParams::gamma() const {
  return std::atan2(std::sqrt(lambda_d()), std::sqrt(lambda_s()));
}

double FourModeSquareParams::gbar() const { return std::sqrt(2.0) * g_mag; }
double FourModeSquareParams::lambda_s() const { return g_mag * (2.0 * std::cos(phi_minus) + 1.0); }
double FourModeSquareParams::lambda_d() const { return g_mag * (2.0 * std::cos(phi_minus) - 1.0); }

PhiReduction reduce_phi_minus(double phi) {
  if (phi >= 0.0 && phi <= kPi / 2.0) {
    return {phi, false};
  }
  // The coupling depends on φ₋ only through cos φ₋ (even) and the point
  // structure repeats mod π, so fold |φ| into [0, π] and reflect at π/2.
  double folded = std::fmod(std::abs(phi), kPi);
  if (folded > kPi / 2.0) folded = kPi - folded;
  return {folded, true};
}

StateResult tripartite_state(const TripartiteParams& p) {
  const double g1 = std::abs(p.g1);
  const double g2 = std::abs(p.g2);
  if (g1 == 0.0 && g2 == 0.0) {
    throw std::invalid_argument("tripartite_state: g1 and g2 cannot both vanish");
  }
  if (p.z < 0.0) {
    throw std::invalid_argument("tripartite_state: propagation length must be >= 0");
  }
  const double theta = p.theta();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double r = p.gbar() * p.z;

  // 50:50 mixer on (0,1) followed by a cos²θ/sin²θ splitter on (1,2);
  // columns are the squeezed modes (s+, s−, vacuum).
  CMat u(3, 3);
  u << 1.0, 1.0, 0.0,
       c, -c, -std::sqrt(2.0) * s,
       s, -s, std::sqrt(2.0) * c;
  u *= kInvSqrt2;

  Vec squeeze(3);
  squeeze << r, -r, 0.0;

  BlochMessiahSpec bm{std::move(u), std::move(squeeze)};
  return StateResult{covariance_from_bm(bm), std::move(bm)};
}

StateResult four_mode_linear_state(const FourModeLinearParams& p) {
  if (std::abs(p.g1) == 0.0 && std::abs(p.g2) == 0.0) {
    throw std::invalid_argument("four_mode_linear_state: g1 and g2 cannot both vanish");
  }
  if (p.z < 0.0) {
    throw std::invalid_argument("four_mode_linear_state: propagation length must be >= 0");
  }
  const double gamma = p.gamma();
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  const double rs = p.lambda_s() * p.z;
  const double rd = p.lambda_d() * p.z;

  // Balanced mixers form two EPR pairs from (σ+,σ−) and (δ+,δ−); a γ-rotation
  // then couples them pairwise. Rows are the physical modes (b_s, b_i, c_s, c_i).
  CMat u(4, 4);
  u << c, c, -s, -s,
       c, -c, -s, s,
       s, s, c, c,
       s, -s, c, -c;
  u *= kInvSqrt2;

  Vec squeeze(4);
  squeeze << rs, -rs, -rd, rd;

  BlochMessiahSpec bm{std::move(u), std::move(squeeze)};
  return StateResult{covariance_from_bm(bm), std::move(bm)};
}

StateResult four_mode_square_state(const FourModeSquareParams& p) {
  if (!(p.g_mag > 0.0)) {
    throw std::invalid_argument("four_mode_square_state: g_mag must be > 0 (symmetric case only)");
  }
  if (p.z < 0.0) {
    throw std::invalid_argument("four_mode_square_state: propagation length must be >= 0");
  }
  FourModeSquareParams q = p;
  q.phi_minus = reduce_phi_minus(p.phi_minus).value;

  const double rs = q.lambda_s() * q.z;
  const double rd = q.lambda_d() * q.z;  // signed: Y-squeezing flips past φ₋ = π/3

  CMat u(4, 4);
  u << 1.0, 1.0, 1.0, 1.0,
       1.0, -1.0, 1.0, -1.0,
       1.0, 1.0, -1.0, -1.0,
       1.0, -1.0, -1.0, 1.0;
  u *= 0.5;

  Vec squeeze(4);
  squeeze << rs, -rs, -rd, rd;

  BlochMessiahSpec bm{std::move(u), std::move(squeeze)};
  return StateResult{covariance_from_bm(bm), std::move(bm)};
}

StateResult build_state(const StateSpec& spec) {
  return std::visit(
      [](const auto& params) {
        using T = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<T, TripartiteParams>) return tripartite_state(params);
        else if constexpr (std::is_same_v<T, FourModeLinearParams>) return four_mode_linear_state(params);
        else return four_mode_square_state(params);
      },
      spec.params);
}

}  // namespace gme
