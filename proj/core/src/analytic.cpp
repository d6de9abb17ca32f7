#include "gme/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gme {

namespace {

// ν± = b ± √(b²−1) for b ≥ 1; the small root is computed as 1/ν₊ to avoid
// cancellation at large b.
std::pair<double, double> nu_pair(double b) {
  const double big = b + std::sqrt(std::max(0.0, (b - 1.0) * (b + 1.0)));
  return {big, 1.0 / big};
}

std::pair<double, double> sqrt_nu_pair(double b) {
  const auto [big, small] = nu_pair(b);
  const double w = std::sqrt(big);
  return {w, 1.0 / w};
}

SymplecticSpectrum sorted_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return SymplecticSpectrum{std::move(values)};
}

int lone_mode(const ModePartition& p) {
  if (p.alice().size() == 1) return p.alice().front();
  if (p.alice().size() == static_cast<std::size_t>(p.n_modes()) - 1) return p.bob().front();
  return -1;
}

}  // namespace

SymplecticSpectrum analytic_pt_spectrum(const TripartiteParams& p, const ModePartition& a) {
  if (a.n_modes() != 3) {
    throw std::invalid_argument("analytic_pt_spectrum: tripartite partition expected");
  }
  const double r = p.gbar() * p.z;
  const int mode = lone_mode(a);
  if (mode == 0) {
    // The shared mode is one arm of a balanced mix of the two squeezers,
    // an EPR member regardless of θ.
    return sorted_spectrum({std::exp(2.0 * r), 1.0, std::exp(-2.0 * r)});
  }
  const double trig = mode == 1 ? std::cos(p.theta()) : std::sin(p.theta());
  const double u = trig * std::sinh(r);
  const auto [big, small] = nu_pair(1.0 + 2.0 * u * u);
  return sorted_spectrum({big, 1.0, small});
}

SymplecticSpectrum analytic_pt_spectrum(const FourModeLinearParams& p, const ModePartition& a) {
  if (a.n_modes() != 4) {
    throw std::invalid_argument("analytic_pt_spectrum: 4-mode partition expected");
  }
  const double rs = p.lambda_s() * p.z;
  const double rd = p.lambda_d() * p.z;
  const double gamma = p.gamma();
  const double cos2 = std::cos(gamma) * std::cos(gamma);
  const double sin2 = 1.0 - cos2;
  // cos 2γ = (Λ_S − Λ_D)/(Λ_S + Λ_D) = |g1|/√(|g1|² + 4|g2|²), exactly.
  const double big_t = std::hypot(std::abs(p.g1), 2.0 * std::abs(p.g2));
  const double cos_2g = big_t == 0.0 ? 1.0 : std::abs(p.g1) / big_t;
  const double sin_2g = big_t == 0.0 ? 0.0 : 2.0 * std::abs(p.g2) / big_t;

  const int mode = lone_mode(a);
  if (mode >= 0) {
    const double cw = mode < 2 ? cos2 : sin2;  // shared modes weight cosh(2r_S) by cos²γ
    const double sw = 1.0 - cw;
    const double m = std::cosh(2.0 * rs) * cw + std::cosh(2.0 * rd) * sw;
    const auto [w_big, w_small] = sqrt_nu_pair(2.0 * m * m - 1.0);
    return sorted_spectrum({w_big, 1.0, 1.0, w_small});
  }

  const auto& alice = a.alice();  // canonical: {0, k}
  const int k = alice[1];
  if (k == 1) {  // P12: the shared pair
    const double av = sin_2g * std::sinh(rs + rd);
    const double big = std::sqrt(1.0 + av * av) + av;
    const double small = 1.0 / big;
    return sorted_spectrum({big, big, small, small});
  }
  if (k == 2) {  // P13: signal vs idler
    return sorted_spectrum({std::exp(2.0 * rs), std::exp(2.0 * rd), std::exp(-2.0 * rd),
                            std::exp(-2.0 * rs)});
  }
  // P14: single g1 link across the cut
  const double c = rs - rd;
  const double u = cos_2g * std::sinh(rs + rd);
  const auto [w_big, w_small] = sqrt_nu_pair(1.0 + 2.0 * u * u);
  return sorted_spectrum({std::exp(c) * w_big, std::exp(c) * w_small, std::exp(-c) * w_big,
                          std::exp(-c) * w_small});
}

SymplecticSpectrum analytic_pt_spectrum(const FourModeSquareParams& p, const ModePartition& a) {
  if (a.n_modes() != 4) {
    throw std::invalid_argument("analytic_pt_spectrum: 4-mode partition expected");
  }
  FourModeSquareParams q = p;
  q.phi_minus = reduce_phi_minus(p.phi_minus).value;
  const double rs = q.lambda_s() * q.z;
  const double rd = q.lambda_d() * q.z;  // signed

  if (lone_mode(a) >= 0) {
    // All four single-mode cuts coincide by the symmetry of the square.
    const double m = 0.5 * (std::cosh(2.0 * rs) + std::cosh(2.0 * rd));
    const auto [w_big, w_small] = sqrt_nu_pair(2.0 * m * m - 1.0);
    return sorted_spectrum({w_big, 1.0, 1.0, w_small});
  }
  const int k = a.alice()[1];
  if (k == 1) {  // P12: cut across the two |g1+g2| links; r_S + r_D = 2|g1+g2| z
    const double e = std::exp(std::abs(rs + rd));
    return sorted_spectrum({e, e, 1.0 / e, 1.0 / e});
  }
  if (k == 2) {  // P13: all four links cross the cut
    return sorted_spectrum({std::exp(2.0 * rs), std::exp(2.0 * std::abs(rd)),
                            std::exp(-2.0 * std::abs(rd)), std::exp(-2.0 * rs)});
  }
  // P14: cut across the two |g1| = |g2| links; r_S − r_D = 2 g_mag z, φ₋-independent
  const double e = std::exp(rs - rd);
  return sorted_spectrum({e, e, 1.0 / e, 1.0 / e});
}

SymplecticSpectrum analytic_pt_spectrum(const StateSpec& spec, const ModePartition& a) {
  return std::visit([&](const auto& p) { return analytic_pt_spectrum(p, a); }, spec.params);
}

double negativity_p13(const FourModeLinearParams& p) {
  return 2.0 / std::numbers::ln2 * std::hypot(std::abs(p.g1), 2.0 * std::abs(p.g2)) * p.z;
}

}  // namespace gme
