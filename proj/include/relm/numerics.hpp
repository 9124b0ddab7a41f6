#pragma once

#include "relm/types.hpp"

namespace relm {

// Spectral estimates for a symmetric PSD matrix G: kappa0 is a lower
// estimate of the smallest eigenvalue, kappa an upper estimate of the
// largest. Both come from power iteration, so the guarantees hold up to the
// iteration tolerance.
struct SpectrumBounds {
  double kappa0 = 0.0;
  double kappa = 0.0;
  int iterations_used = 0;
};

// G = H^T H. Both triangles are filled from one computation, so the result
// is symmetric to exact bit equality.
Matrix gram(const Matrix& H);

// Power iteration for kappa, then shifted power iteration on (kappa*I - G)
// for kappa0. Runs until the relative Rayleigh-quotient change drops below
// tol or max_iter is hit. Rejects non-symmetric input (1e-9 relative).
SpectrumBounds spectral_bounds(const Matrix& G, double tol, int max_iter);

// Solves (A + jitter*I) X = B for symmetric positive definite A via an
// unblocked Cholesky factorization. Throws FactorizationError carrying the
// failing pivot index when the shifted matrix is not positive definite.
Matrix solve_spd(const Matrix& A, const Matrix& B, double jitter);

// beta ~ H^+ T through regularized normal equations:
//   solve_spd(gram(H), H^T T, ridge_floor * trace(G) / cols).
// Exact least squares for full-column-rank H as ridge_floor -> 0.
Matrix min_norm_lsq(const Matrix& H, const Matrix& T, double ridge_floor = 1e-10);

}  // namespace relm
