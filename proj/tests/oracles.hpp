#pragma once

// Test-only reference implementations, deliberately independent of the
// library code paths they check: naive loops, textbook elimination, grid
// search. Keep them dumb.

#include "relm/types.hpp"

#include <utility>
#include <vector>

namespace oracle {

// Triple-loop H^T H.
relm::Matrix naive_gram(const relm::Matrix& H);

// Cyclic Jacobi rotations; returns eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(relm::Matrix A);

// Gaussian elimination with partial pivoting on a general square system.
relm::Matrix gauss_solve(relm::Matrix A, relm::Matrix B);

// Global minimizer of (1/2)(u - t)^2 + lambda*(gamma*sqrt(|u|) + eps*u^2)
// over u with sign(u) = sign(t): coarse grid over [0, |t|] to bracket the
// basin, golden-section refinement, compared against the u = 0 boundary.
double grid_prox_hybrid_half(double lambda, double gamma, double eps, double t,
                             int grid_points = 4001);

// Same machinery for (1/2)(u - t)^2 + lambda*(gamma*|u| + eps*u^2).
double grid_prox_hybrid_soft(double lambda, double gamma, double eps, double t,
                             int grid_points = 4001);

// Literal fine grid at the given step plus local refinement; used for the
// single-case spot checks.
double fine_grid_prox_half(double lambda, double t, double step);

// Cyclic coordinate descent for (1/2)||H b - T||_F^2 + lambda*||b||_1,
// run to stationarity (max coordinate change below tol) or max_sweeps.
relm::Matrix cd_lasso(const relm::Matrix& H, const relm::Matrix& T, double lambda,
                      int max_sweeps = 100000, double tol = 1e-13);

// One-pass (Welford) mean and sample standard deviation.
std::pair<double, double> welford_mean_std(const std::vector<double>& values);

// Test instance generator: n x p matrix with prescribed singular-value range
// (geometric spacing), via Gram-Schmidt on Gaussian blocks. Spectrum of
// H^T H then spans [smin^2, smax^2].
relm::Matrix conditioned_matrix(int n, int p, double smin, double smax,
                                std::uint64_t seed);

}  // namespace oracle
