#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gme/covariance.hpp"
#include "gme/momentum.hpp"
#include "gme/states.hpp"
#include "test_support.hpp"

using namespace gme;

TEST_CASE("symplectic form: block structure and identities") {
  const Mat omega1 = symplectic_form(1);
  CHECK(omega1(0, 0) == 0.0);
  CHECK(omega1(0, 1) == 1.0);
  CHECK(omega1(1, 0) == -1.0);
  CHECK(omega1(1, 1) == 0.0);

  const Mat omega2 = symplectic_form(2);
  CHECK(((omega2 * omega2) + Mat::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  const Mat omega3 = symplectic_form(3);
  CHECK(((omega3.transpose() * omega3) - Mat::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((omega3 + omega3.transpose()).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(symplectic_form(0), std::invalid_argument);
}

TEST_CASE("covariance construction rejects bad shapes") {
  CHECK_THROWS_AS(CovarianceMatrix::from_matrix(Mat::Zero(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(CovarianceMatrix::from_matrix(Mat::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(CovarianceMatrix::from_matrix(Mat::Zero(0, 0)), std::invalid_argument);
}

TEST_CASE("validate: vacuum saturates the uncertainty bound") {
  const auto report = validate_covariance(CovarianceMatrix::vacuum(2));
  CHECK(report.symmetric);
  CHECK(report.physical);
  CHECK(std::abs(report.min_eig_v_plus_i_omega) < 1e-12);
  CHECK(report.min_marginal_product == doctest::Approx(1.0));
}

TEST_CASE("validate: below vacuum noise in all quadratures is unphysical") {
  const auto v = CovarianceMatrix::from_matrix(0.5 * Mat::Identity(2, 2));
  const auto report = validate_covariance(v);
  CHECK(report.symmetric);
  CHECK_FALSE(report.physical);
  CHECK(report.min_eig_v_plus_i_omega < -0.1);
  CHECK(report.min_marginal_product < 1.0);
}

TEST_CASE("validate: asymmetry beyond 1e-9 is rejected and reported") {
  Mat m = Mat::Identity(2, 2);
  m(0, 1) = 1e-6;
  const auto report = validate_covariance(CovarianceMatrix::from_matrix(m));
  CHECK_FALSE(report.symmetric);
  CHECK(report.max_asymmetry == doctest::Approx(1e-6));
  CHECK_FALSE(report.ok());
}

TEST_CASE("validate: tripartite factory output is physical") {
  // theta = pi/4, gbar z = 1
  const TripartiteParams p{Complex((1.0 / std::numbers::sqrt2), 0.0),
                           Complex((1.0 / std::numbers::sqrt2), 0.0), 1.0};
  const auto report = validate_covariance(tripartite_state(p).covariance);
  CHECK(report.ok());
  CHECK(report.min_eig_v_plus_i_omega >= -1e-10);
}

TEST_CASE("spectrum: vacuum and single-mode pure squeezed state") {
  for (int n : {1, 2, 5}) {
    const auto spectrum = symplectic_spectrum(CovarianceMatrix::vacuum(n));
    for (double nu : spectrum.values) CHECK(nu == doctest::Approx(1.0));
  }
  Mat m(2, 2);
  const double sigma = 3.7;
  m << sigma, 0.0, 0.0, 1.0 / sigma;
  const auto spectrum = symplectic_spectrum(CovarianceMatrix::from_matrix(m));
  CHECK(spectrum.values[0] == doctest::Approx(1.0));
  CHECK(is_pure(spectrum));
}

TEST_CASE("spectrum: two-mode EPR at r = 1 is pure (oracle cross-check)") {
  // Build by exponentiating the two-mode squeezer momentum, then compare the
  // production route against the generic eigensolve of iΩV.
  const auto epr = evolve_vacuum(drift_matrix(QuadraticMomentum{2, {{0, 1, 1.0}}}), 1.0);
  const auto spectrum = symplectic_spectrum(epr);
  const auto oracle = test::spectrum_oracle(epr);
  REQUIRE(spectrum.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(spectrum.values[i] - 1.0) < 1e-9);
    CHECK(std::abs(spectrum.values[i] - oracle[i]) < 1e-9);
  }
}

TEST_CASE("spectrum rejects non-positive-definite input") {
  Mat m = Mat::Identity(2, 2);
  m(1, 1) = -0.5;
  CHECK_THROWS_AS(symplectic_spectrum(CovarianceMatrix::from_matrix(m)), std::invalid_argument);
}

TEST_CASE("spectrum: SVD route equals generic eigensolve on random covariances") {
  std::mt19937 rng(421);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const auto v = test::random_covariance(n, rng);
    const auto spectrum = symplectic_spectrum(v);
    const auto oracle = test::spectrum_oracle(v);
    REQUIRE(spectrum.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(spectrum.values[i] - oracle[i]) < 1e-9);
      CHECK(spectrum.values[i] >= 1.0 - 1e-10);  // physical by construction
    }
  }
}

TEST_CASE("spectrum is invariant under symplectic congruence") {
  std::mt19937 rng(98);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 3;
    const auto v = test::random_covariance(n, rng);
    const Mat s = test::random_symplectic(n, rng);
    CHECK((s.transpose() * symplectic_form(n) * s - symplectic_form(n)).cwiseAbs().maxCoeff() <
          1e-10);

    Mat w = s * v.entries * s.transpose();
    w = 0.5 * (w + w.transpose()).eval();
    const auto before = symplectic_spectrum(v);
    const auto after = symplectic_spectrum(CovarianceMatrix::from_matrix(std::move(w)));
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(before.values[i] - after.values[i]) < 1e-9);
    }
  }
}
