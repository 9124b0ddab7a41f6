#pragma once

#include "relm/numerics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relm {

enum class DeltaPolicy { FromSpectrum, Fixed };

// Shared knob set for every training routine. Individual solvers read the
// subset they need: the hybrid solvers use lambda/gamma/epsilon/xi, the
// ridge solver uses mu, train_elm uses ridge_floor.
struct RegConfig {
  double lambda = 1.0;    // overall penalty weight (must be > 0 when used)
  double gamma = 1.0;     // sparsity weight inside the hybrid penalty
  double epsilon = 0.0;   // l2 weight inside the hybrid penalty
  double mu = 0.0;        // l2-ELM weight
  double xi = 1e-4;       // acceptable error for the residual stop
  DeltaPolicy delta_policy = DeltaPolicy::FromSpectrum;
  double delta_fixed = 0.0;      // step size when delta_policy == Fixed
  int hard_iter_cap = 10000;
  bool record_objective_trace = true;  // off: only first/last objective kept
  double ridge_floor = 1e-10;    // train_elm pseudo-inverse regularization
  double spectral_tol = 1e-9;
  int spectral_max_iter = 10000;
};

struct SolverOutput {
  Matrix beta;
  int iterations = 0;
  std::vector<double> objective_trace;
  std::int64_t support_size = 0;  // exact nonzero entries of beta
  double delta_used = 0.0;
  std::optional<std::int64_t> lmax_used;
  std::optional<SpectrumBounds> kappa_bounds;
  double wall_time_s = 0.0;
  std::vector<std::string> diagnostics;
};

// (1/2)||H beta - T||_F^2 + lambda * (gamma * sum_ij sqrt|beta_ij| +
//                                     epsilon * ||beta||_F^2)
double objective_hybrid_half(const Matrix& H, const Matrix& T, const Matrix& beta,
                             double lambda, double gamma, double epsilon);

// Same data term with the l1 penalty in place of the l0.5 one.
double objective_hybrid_soft(const Matrix& H, const Matrix& T, const Matrix& beta,
                             double lambda, double gamma, double epsilon);

// One application of the contraction map Gamma: a gradient step
// z = beta - delta*(H^T H beta - H^T T) followed by the hybrid half prox
// with effective parameters (lambda*delta, gamma, epsilon).
Matrix fixed_point_map(const Matrix& H, const Matrix& T, const Matrix& beta,
                       double lambda, double gamma, double epsilon, double delta);

// Smallest positive integer strictly exceeding the a-priori bound
//   log(||b1-b0|| (k+k0) / (xi k0 (k+k0+4 eps lambda))) / log((k+k0)/(k-k0)).
// Returns 1 when the log argument is <= 1 or when kappa0 == kappa; throws
// when kappa0 <= 0 (callers should rely on the residual stop instead).
std::int64_t lmax_bound(const Matrix& beta0, const Matrix& beta1, double kappa0,
                        double kappa, double epsilon, double lambda, double xi);

// The six training procedures. All are pure functions of (H, T, cfg).
SolverOutput train_hybrid_half(const Matrix& H, const Matrix& T, const RegConfig& cfg);
SolverOutput train_half(const Matrix& H, const Matrix& T, const RegConfig& cfg);
SolverOutput train_hybrid_soft(const Matrix& H, const Matrix& T, const RegConfig& cfg);
SolverOutput train_l1(const Matrix& H, const Matrix& T, const RegConfig& cfg);
SolverOutput train_l2(const Matrix& H, const Matrix& T, const RegConfig& cfg);
SolverOutput train_elm(const Matrix& H, const Matrix& T, const RegConfig& cfg);

}  // namespace relm
