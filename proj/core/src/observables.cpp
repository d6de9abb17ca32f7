#include "gme/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gme {

namespace {

void check_dim(const NonlocalObservable& d, Eigen::Index two_n, const char* who) {
  if (two_n < 2 || two_n % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": coefficient length must be 2N");
  }
  if (d.coeffs.size() != two_n) {
    throw std::invalid_argument(std::string(who) + ": observable dimension mismatch");
  }
  if (!d.coeffs.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": observable has non-finite coefficients");
  }
}

Vec mirrored(const Vec& d, const ModePartition& a) {
  const int n = a.n_modes();
  Vec out = d;
  for (int j : a.alice()) out(n + j) = -out(n + j);
  return out;
}

}  // namespace

double observable_variance(const CovarianceMatrix& v, const NonlocalObservable& d) {
  check_dim(d, v.dim(), "observable_variance");
  return d.coeffs.dot(v.entries * d.coeffs);
}

double heisenberg_bound(const NonlocalObservable& d, const NonlocalObservable& d_prime) {
  check_dim(d, d.coeffs.size(), "heisenberg_bound");
  check_dim(d_prime, d.coeffs.size(), "heisenberg_bound");
  const int n = static_cast<int>(d.coeffs.size()) / 2;
  return 2.0 * std::abs(d.coeffs.dot(symplectic_form(n) * d_prime.coeffs));
}

double ppt_bound(const NonlocalObservable& d, const NonlocalObservable& d_prime,
                 const ModePartition& a) {
  check_dim(d, 2 * a.n_modes(), "ppt_bound");
  check_dim(d_prime, 2 * a.n_modes(), "ppt_bound");
  const Vec gd = mirrored(d.coeffs, a);
  const Vec gdp = mirrored(d_prime.coeffs, a);
  return 2.0 * std::abs(gd.dot(symplectic_form(a.n_modes()) * gdp));
}

BoundEvaluation evaluate_sum_bound(const CovarianceMatrix& v, const NonlocalObservable& d,
                                   const NonlocalObservable& d_prime,
                                   const std::optional<ModePartition>& a, std::string label) {
  BoundEvaluation out;
  out.kind = a ? BoundEvaluation::Kind::ppt : BoundEvaluation::Kind::heisenberg;
  out.label = std::move(label);
  out.lhs = observable_variance(v, d) + observable_variance(v, d_prime);
  out.rhs = a ? ppt_bound(d, d_prime, *a) : heisenberg_bound(d, d_prime);
  out.partition = a;
  out.violated = out.lhs < out.rhs - 1e-10;
  return out;
}

BoundEvaluation evaluate_product_bound(const CovarianceMatrix& v, const NonlocalObservable& d,
                                       const NonlocalObservable& d_prime,
                                       const std::optional<ModePartition>& a, std::string label) {
  BoundEvaluation out;
  out.kind = a ? BoundEvaluation::Kind::ppt : BoundEvaluation::Kind::heisenberg;
  out.label = std::move(label);
  out.lhs = 2.0 * std::sqrt(observable_variance(v, d) * observable_variance(v, d_prime));
  out.rhs = a ? ppt_bound(d, d_prime, *a) : heisenberg_bound(d, d_prime);
  out.partition = a;
  out.violated = out.lhs < out.rhs - 1e-10;
  return out;
}

std::pair<NonlocalObservable, NonlocalObservable> tripartite_eta_pair(double theta) {
  const double inv_sqrt2 = (1.0 / std::numbers::sqrt2);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Vec d = Vec::Zero(6);
  Vec dp = Vec::Zero(6);
  // η(d)  = (X_0 − cosθ X_1 − sinθ X_2)/√2
  d(0) = inv_sqrt2;
  d(1) = -c * inv_sqrt2;
  d(2) = -s * inv_sqrt2;
  // η(d') = (Y_0 + cosθ Y_1 + sinθ Y_2)/√2
  dp(3) = inv_sqrt2;
  dp(4) = c * inv_sqrt2;
  dp(5) = s * inv_sqrt2;
  return {NonlocalObservable{std::move(d), "eta"}, NonlocalObservable{std::move(dp), "eta'"}};
}

FourModeEta four_mode_eta(double gamma) {
  const double inv_sqrt2 = (1.0 / std::numbers::sqrt2);
  const double c = std::cos(gamma) * inv_sqrt2;
  const double s = std::sin(gamma) * inv_sqrt2;

  // Rows of the inverse mixer: each observable is the X or Y quadrature of
  // one squeezed mode expressed in the physical basis (b_s, b_i, c_s, c_i).
  Vec sig = Vec::Zero(8), sigp = Vec::Zero(8), del = Vec::Zero(8), delp = Vec::Zero(8);
  // X of σ−:  cosγ(X1 − X2) + sinγ(X3 − X4), all /√2
  sig(0) = c; sig(1) = -c; sig(2) = s; sig(3) = -s;
  // Y of σ+:  cosγ(Y1 + Y2) + sinγ(Y3 + Y4)
  sigp(4) = c; sigp(5) = c; sigp(6) = s; sigp(7) = s;
  // X of δ+: −sinγ(X1 + X2) + cosγ(X3 + X4)
  del(0) = -s; del(1) = -s; del(2) = c; del(3) = c;
  // Y of δ−: −sinγ(Y1 − Y2) + cosγ(Y3 − Y4)
  delp(4) = -s; delp(5) = s; delp(6) = c; delp(7) = -c;

  return FourModeEta{NonlocalObservable{std::move(sig), "eta_sigma"},
                     NonlocalObservable{std::move(sigp), "eta_sigma'"},
                     NonlocalObservable{std::move(del), "eta_delta"},
                     NonlocalObservable{std::move(delp), "eta_delta'"}};
}

}  // namespace gme
