#include "relm/numerics.hpp"

#include "relm/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>

using relm::Matrix;

namespace {

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed,
                     double scale = 1.0) {
  std::mt19937_64 rng(seed);
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = scale * (2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0);
    }
  }
  return m;
}

Matrix random_spd(Eigen::Index n, std::uint64_t seed) {
  const Matrix A = random_matrix(n, n, seed);
  return relm::gram(A) + Matrix::Identity(n, n);
}

}  // namespace

TEST_CASE("gram: identity and hand-computed cases") {
  CHECK(relm::gram(Matrix::Identity(2, 2)).isApprox(Matrix::Identity(2, 2), 0.0));

  Matrix H(2, 2);
  H << 1, 0, 1, 0;
  Matrix expected(2, 2);
  expected << 2, 0, 0, 0;
  CHECK(relm::gram(H) == expected);
}

TEST_CASE("gram matches the triple-loop oracle") {
  const Matrix H = random_matrix(5, 3, 101);
  const Matrix G = relm::gram(H);
  const Matrix ref = oracle::naive_gram(H);
  CHECK((G - ref).cwiseAbs().maxCoeff() <= 1e-12 * ref.cwiseAbs().maxCoeff());
}

TEST_CASE("gram is symmetric to exact bit equality") {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    const Matrix G = relm::gram(random_matrix(6, 4, seed, 3.0));
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
      for (Eigen::Index j = 0; j < G.cols(); ++j) {
        CHECK(G(i, j) == G(j, i));
      }
    }
  }
}

TEST_CASE("gram rejects NaN input") {
  Matrix H = Matrix::Zero(2, 2);
  H(0, 0) = std::nan("");
  CHECK_THROWS_AS(relm::gram(H), relm::Error);
}

TEST_CASE("spectral_bounds on a diagonal matrix") {
  Matrix G = Matrix::Zero(3, 3);
  G.diagonal() << 1, 2, 3;
  const double tol = 1e-9;
  const auto sb = relm::spectral_bounds(G, tol, 10000);
  CHECK(std::abs(sb.kappa - 3.0) <= 10 * tol * 3.0);
  CHECK(std::abs(sb.kappa0 - 1.0) <= 10 * tol * 3.0);
  CHECK(sb.kappa0 <= sb.kappa);
  CHECK(sb.iterations_used > 0);
}

TEST_CASE("spectral_bounds on the zero matrix") {
  const auto sb = relm::spectral_bounds(Matrix::Zero(4, 4), 1e-9, 100);
  CHECK(sb.kappa == 0.0);
  CHECK(sb.kappa0 == 0.0);
}

TEST_CASE("spectral_bounds brackets the Jacobi spectrum on random SPD 6x6") {
  // Rayleigh-quotient estimates: the bracketing slack reflects how far a
  // windowed-change stop can still be from the limit on clustered spectra.
  for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
    const Matrix G = random_spd(6, seed);
    const auto ev = oracle::jacobi_eigenvalues(G);
    const auto sb = relm::spectral_bounds(G, 1e-10, 50000);
    CHECK(sb.kappa >= ev.back() * (1.0 - 1e-6));
    CHECK(sb.kappa0 <= ev.front() * (1.0 + 1e-6));
    CHECK(sb.kappa0 >= 0.0);
  }
}

TEST_CASE("spectral_bounds rejects non-symmetric input") {
  Matrix G(2, 2);
  G << 1, 2, 3, 4;
  CHECK_THROWS_AS(relm::spectral_bounds(G, 1e-9, 100), relm::Error);
}

TEST_CASE("solve_spd: identity and diagonal systems") {
  const Matrix B = random_matrix(3, 2, 33);
  CHECK(relm::solve_spd(Matrix::Identity(3, 3), B, 0.0) == B);

  Matrix A = Matrix::Zero(2, 2);
  A.diagonal() << 2, 4;
  Matrix rhs(2, 1);
  rhs << 2, 8;
  Matrix expected(2, 1);
  expected << 1, 2;
  CHECK(relm::solve_spd(A, rhs, 0.0).isApprox(expected, 1e-14));
}

TEST_CASE("solve_spd matches the elimination oracle on random SPD systems") {
  for (std::uint64_t seed : {40u, 41u, 42u}) {
    const Matrix A = random_spd(5, seed);
    const Matrix B = random_matrix(5, 3, seed + 100);
    const Matrix X = relm::solve_spd(A, B, 0.0);
    const Matrix ref = oracle::gauss_solve(A, B);
    CHECK((X - ref).norm() <= 1e-9 * ref.norm());
    // multiply-back residual contract
    CHECK((A * X - B).norm() <= 1e-8 * B.norm());
  }
}

TEST_CASE("solve_spd reports the failing pivot index") {
  Matrix A = Matrix::Zero(3, 3);
  A.diagonal() << 1, -1, 1;  // indefinite: pivot 1 goes negative
  const Matrix B = Matrix::Ones(3, 1);
  try {
    relm::solve_spd(A, B, 0.0);
    FAIL("expected FactorizationError");
  } catch (const relm::FactorizationError& e) {
    CHECK(e.pivot() == 1);
  }
}

TEST_CASE("solve_spd validates inputs") {
  const Matrix B = Matrix::Ones(2, 1);
  Matrix skew(2, 2);
  skew << 1, 5, -5, 1;
  CHECK_THROWS_AS(relm::solve_spd(skew, B, 0.0), relm::Error);
  CHECK_THROWS_AS(relm::solve_spd(Matrix::Identity(3, 3), B, 0.0),
                  relm::DimensionError);
  CHECK_THROWS_AS(relm::solve_spd(Matrix::Identity(2, 2), B, -1.0),
                  relm::ConfigError);
}

TEST_CASE("min_norm_lsq: identity and orthonormal columns") {
  const Matrix T = random_matrix(4, 2, 55);
  CHECK(relm::min_norm_lsq(Matrix::Identity(4, 4), T, 0.0) == T);

  // Orthonormal columns: H^T H = I, so beta = H^T T.
  Matrix H(4, 2);
  H << 1, 0, 0, 1, 0, 0, 0, 0;
  CHECK(relm::min_norm_lsq(H, T, 0.0).isApprox(H.transpose() * T, 1e-14));
}

TEST_CASE("min_norm_lsq matches the normal-equation oracle, 8x3 over-determined") {
  const Matrix H = random_matrix(8, 3, 60);
  const Matrix T = random_matrix(8, 2, 61);
  const Matrix beta = relm::min_norm_lsq(H, T, 0.0);
  const Matrix ref = oracle::gauss_solve(oracle::naive_gram(H), H.transpose() * T);
  CHECK((beta - ref).norm() <= 1e-8 * ref.norm());
}

TEST_CASE("min_norm_lsq satisfies the normal equations") {
  for (std::uint64_t seed : {70u, 71u}) {
    const Matrix H = random_matrix(9, 4, seed);
    const Matrix T = random_matrix(9, 2, seed + 5);
    const Matrix beta = relm::min_norm_lsq(H, T, 0.0);
    const Matrix G = relm::gram(H);
    const Matrix rhs = H.transpose() * T;
    CHECK((G * beta - rhs).norm() <= 1e-8 * rhs.norm());
  }
}
