#include "relm/solvers.hpp"

#include "relm/errors.hpp"
#include "relm/thresholding.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>

namespace relm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::int64_t count_nonzero(const Matrix& beta) {
  std::int64_t n = 0;
  for (Eigen::Index r = 0; r < beta.rows(); ++r) {
    for (Eigen::Index c = 0; c < beta.cols(); ++c) {
      if (beta(r, c) != 0.0) ++n;
    }
  }
  return n;
}

double penalty_half(const Matrix& beta) {
  double s = 0.0;
  for (Eigen::Index r = 0; r < beta.rows(); ++r) {
    for (Eigen::Index c = 0; c < beta.cols(); ++c) {
      s += std::sqrt(std::abs(beta(r, c)));
    }
  }
  return s;
}

void check_train_inputs(const Matrix& H, const Matrix& T, const char* who) {
  require_nonempty(H, who);
  require_nonempty(T, who);
  require_finite(H, who);
  require_finite(T, who);
  if (H.rows() != T.rows()) {
    throw DimensionError(std::string(who) + ": H and T must have the same row count");
  }
}

void check_reg_common(const RegConfig& cfg, const char* who) {
  if (!(cfg.lambda > 0.0) || !std::isfinite(cfg.lambda)) {
    throw ConfigError(std::string(who) + ": lambda must be finite and > 0");
  }
  if (!(cfg.gamma >= 0.0) || !(cfg.epsilon >= 0.0)) {
    throw ConfigError(std::string(who) + ": gamma and epsilon must be >= 0");
  }
  if (!(cfg.xi > 0.0)) {
    throw ConfigError(std::string(who) + ": xi must be > 0");
  }
  if (cfg.hard_iter_cap < 1) {
    throw ConfigError(std::string(who) + ": hard_iter_cap must be >= 1");
  }
}

struct StepPlan {
  double delta = 0.0;
  std::optional<SpectrumBounds> bounds;  // set when derived from the spectrum
  bool kappa0_clamped = false;
  std::vector<std::string> diagnostics;
};

// delta = 2/(kappa0 + kappa), with kappa0 clamped away from zero on
// rank-deficient H so the step stays finite; in that regime the a-priori
// l_max is unreliable and the residual stop governs termination.
StepPlan plan_step(const Matrix& H, const RegConfig& cfg, const char* who) {
  StepPlan plan;
  if (cfg.delta_policy == DeltaPolicy::Fixed) {
    if (!(cfg.delta_fixed > 0.0) || !std::isfinite(cfg.delta_fixed)) {
      throw ConfigError(std::string(who) + ": fixed delta must be finite and > 0");
    }
    plan.delta = cfg.delta_fixed;
    return plan;
  }
  SpectrumBounds sb = spectral_bounds(gram(H), cfg.spectral_tol, cfg.spectral_max_iter);
  if (!(sb.kappa > 0.0)) {
    throw Error(std::string(who) + ": H^T H has zero norm (zero H); no valid step size");
  }
  if (sb.kappa0 < 1e-12 * sb.kappa) {
    plan.diagnostics.push_back(
        "kappa0 estimate " + std::to_string(sb.kappa0) +
        " clamped to 1e-12*kappa; a-priori l_max unreliable, residual stop governs");
    sb.kappa0 = 1e-12 * sb.kappa;
    plan.kappa0_clamped = true;
  }
  plan.bounds = sb;
  plan.delta = 2.0 / (sb.kappa0 + sb.kappa);
  return plan;
}

enum class ProxKind { Half, Soft };

// Shared forward-backward engine for the four iterative solvers. The half
// path honors the a-priori l_max floor (when kappa0 is trustworthy) and
// terminates on the fixed-point residual ||beta - Gamma(beta)||, so the
// returned iterate carries the certificate directly. The convex soft path
// stops on the relative step between consecutive iterates.
SolverOutput iterate_solver(const Matrix& H, const Matrix& T, const RegConfig& cfg,
                            ProxKind kind, const char* who) {
  check_train_inputs(H, T, who);
  check_reg_common(cfg, who);

  const auto t0 = Clock::now();
  SolverOutput out;

  StepPlan plan = plan_step(H, cfg, who);
  const double delta = plan.delta;
  out.delta_used = delta;
  out.kappa_bounds = plan.bounds;
  out.diagnostics = std::move(plan.diagnostics);

  const Matrix HtT = H.transpose() * T;
  const double lam_eff = cfg.lambda * delta;
  const double shrink = 1.0 + 2.0 * cfg.epsilon * lam_eff;
  const double threshold = lam_eff * cfg.gamma / shrink;

  const auto step_map = [&](const Matrix& b) -> Matrix {
    Matrix z = b - delta * (H.transpose() * (H * b) - HtT);
    z /= shrink;
    return kind == ProxKind::Half ? half_vector(threshold, z)
                                  : soft_vector(threshold, z);
  };
  const auto objective = [&](const Matrix& b) {
    return kind == ProxKind::Half
               ? objective_hybrid_half(H, T, b, cfg.lambda, cfg.gamma, cfg.epsilon)
               : objective_hybrid_soft(H, T, b, cfg.lambda, cfg.gamma, cfg.epsilon);
  };
  const auto check_finite_iterate = [&](const Matrix& b) {
    if (!b.allFinite()) {
      throw Error(std::string(who) + ": iteration diverges at delta = " +
                  std::to_string(delta));
    }
  };

  Matrix cur = Matrix::Zero(H.cols(), T.cols());
  out.objective_trace.push_back(objective(cur));
  int l = 0;

  if (kind == ProxKind::Half) {
    Matrix nxt = step_map(cur);
    check_finite_iterate(nxt);

    std::int64_t floor_iters = 1;
    if (cfg.delta_policy == DeltaPolicy::FromSpectrum) {
      const auto& sb = *out.kappa_bounds;
      out.lmax_used =
          lmax_bound(cur, nxt, sb.kappa0, sb.kappa, cfg.epsilon, cfg.lambda, cfg.xi);
      if (!plan.kappa0_clamped) {
        floor_iters = std::min<std::int64_t>(*out.lmax_used, cfg.hard_iter_cap);
      }
    }

    while (true) {
      const bool resid_ok = (nxt - cur).norm() <= cfg.xi * (1.0 + cur.norm());
      if (l >= floor_iters && resid_ok) break;
      if (l >= cfg.hard_iter_cap) {
        out.diagnostics.push_back("hard_iter_cap reached before the stopping rule");
        break;
      }
      cur = nxt;
      ++l;
      if (cfg.record_objective_trace) out.objective_trace.push_back(objective(cur));
      nxt = step_map(cur);
      check_finite_iterate(nxt);
    }
  } else {
    while (true) {
      if (l >= cfg.hard_iter_cap) {
        out.diagnostics.push_back("hard_iter_cap reached before the stopping rule");
        break;
      }
      Matrix nxt = step_map(cur);
      check_finite_iterate(nxt);
      ++l;
      if (cfg.record_objective_trace) out.objective_trace.push_back(objective(nxt));
      const bool stop = (nxt - cur).norm() <= cfg.xi * (1.0 + nxt.norm());
      cur = std::move(nxt);
      if (stop) break;
    }
  }

  if (!cfg.record_objective_trace) out.objective_trace.push_back(objective(cur));
  if (!std::isfinite(out.objective_trace.back())) {
    throw Error(std::string(who) + ": objective became nonfinite at delta = " +
                std::to_string(delta));
  }
  out.beta = std::move(cur);
  out.iterations = l;
  out.support_size = count_nonzero(out.beta);
  out.wall_time_s = seconds_since(t0);
  return out;
}

}  // namespace

double objective_hybrid_half(const Matrix& H, const Matrix& T, const Matrix& beta,
                             double lambda, double gamma, double epsilon) {
  return 0.5 * (H * beta - T).squaredNorm() +
         lambda * (gamma * penalty_half(beta) + epsilon * beta.squaredNorm());
}

double objective_hybrid_soft(const Matrix& H, const Matrix& T, const Matrix& beta,
                             double lambda, double gamma, double epsilon) {
  return 0.5 * (H * beta - T).squaredNorm() +
         lambda * (gamma * beta.cwiseAbs().sum() + epsilon * beta.squaredNorm());
}

Matrix fixed_point_map(const Matrix& H, const Matrix& T, const Matrix& beta,
                       double lambda, double gamma, double epsilon, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ConfigError("fixed_point_map: delta must be finite and > 0");
  }
  const Matrix z = beta - delta * (H.transpose() * (H * beta) - H.transpose() * T);
  const double lam_eff = lambda * delta;
  const double shrink = 1.0 + 2.0 * epsilon * lam_eff;
  return half_vector(lam_eff * gamma / shrink, z / shrink);
}

std::int64_t lmax_bound(const Matrix& beta0, const Matrix& beta1, double kappa0,
                        double kappa, double epsilon, double lambda, double xi) {
  if (!(xi > 0.0)) {
    throw ConfigError("lmax_bound: xi must be > 0");
  }
  if (!(kappa0 > 0.0)) {
    throw Error("lmax_bound: kappa0 <= 0; rely on residual stopping instead");
  }
  if (kappa < kappa0) {
    throw ConfigError("lmax_bound: kappa must be >= kappa0");
  }
  const double step = (beta1 - beta0).norm();
  if (step == 0.0) return 1;
  const double arg = step * (kappa + kappa0) /
                     (xi * kappa0 * (kappa + kappa0 + 4.0 * epsilon * lambda));
  if (arg <= 1.0) return 1;
  if (kappa == kappa0) return 1;  // contraction factor 0: one step suffices
  const double x = std::log(arg) / std::log((kappa + kappa0) / (kappa - kappa0));
  if (!(x < 9.0e18)) return std::numeric_limits<std::int64_t>::max();
  return static_cast<std::int64_t>(std::floor(x)) + 1;
}

SolverOutput train_hybrid_half(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  return iterate_solver(H, T, cfg, ProxKind::Half, "train_hybrid_half");
}

SolverOutput train_half(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  RegConfig c = cfg;
  c.epsilon = 0.0;
  return iterate_solver(H, T, c, ProxKind::Half, "train_half");
}

SolverOutput train_hybrid_soft(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  return iterate_solver(H, T, cfg, ProxKind::Soft, "train_hybrid_soft");
}

SolverOutput train_l1(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  RegConfig c = cfg;
  c.gamma = 1.0;
  c.epsilon = 0.0;
  return iterate_solver(H, T, c, ProxKind::Soft, "train_l1");
}

SolverOutput train_l2(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  check_train_inputs(H, T, "train_l2");
  if (!(cfg.mu >= 0.0) || !std::isfinite(cfg.mu)) {
    throw ConfigError("train_l2: mu must be finite and >= 0");
  }
  const auto t0 = Clock::now();
  SolverOutput out;
  const Matrix G = gram(H);
  // Stationarity of (1/2)||H beta - T||^2 + mu ||beta||^2:
  // (H^T H + 2 mu I) beta = H^T T.
  out.beta = solve_spd(G, H.transpose() * T, 2.0 * cfg.mu);
  out.support_size = count_nonzero(out.beta);
  out.objective_trace.push_back(0.5 * (H * out.beta - T).squaredNorm() +
                                cfg.mu * out.beta.squaredNorm());
  out.wall_time_s = seconds_since(t0);
  return out;
}

SolverOutput train_elm(const Matrix& H, const Matrix& T, const RegConfig& cfg) {
  check_train_inputs(H, T, "train_elm");
  const auto t0 = Clock::now();
  SolverOutput out;
  out.beta = min_norm_lsq(H, T, cfg.ridge_floor);
  out.support_size = count_nonzero(out.beta);
  out.objective_trace.push_back((H * out.beta - T).squaredNorm());
  out.wall_time_s = seconds_since(t0);
  return out;
}

}  // namespace relm
