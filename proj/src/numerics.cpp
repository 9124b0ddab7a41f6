#include "relm/numerics.hpp"

#include "relm/errors.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>

namespace relm {

namespace {

void require_symmetric(const Matrix& A, const std::string& what) {
  const double scale = A.cwiseAbs().maxCoeff();
  const double skew = (A - A.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-9 * scale && skew > 0.0) {
    throw Error(what + ": matrix is not symmetric (max |A - A^T| = " +
                std::to_string(skew) + ")");
  }
}

struct PowerResult {
  double rayleigh = 0.0;
  int iterations = 0;
};

// Power iteration with a fixed deterministic start. If the start vector is
// annihilated (it can lie in the null space), restarts from basis vectors.
// The relative Rayleigh-quotient change is measured over a 25-iteration
// window: per-iteration changes go quiet long before convergence on
// clustered spectra, while the windowed change keeps the iteration alive
// until genuine stagnation.
template <typename Apply>
PowerResult power_method(Eigen::Index n, Apply&& apply, double tol, int max_iter) {
  constexpr int kWindow = 25;
  Vector v = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Eigen::Index restart = 0;
  double history[kWindow] = {};
  PowerResult out;
  for (int it = 1; it <= max_iter; ++it) {
    out.iterations = it;
    Vector w = apply(v);
    const double r = v.dot(w);
    const double nw = w.norm();
    if (!(nw > 0.0) || !std::isfinite(nw)) {
      if (restart < n) {
        v.setZero();
        v(restart++) = 1.0;
        it = 0;  // measure the window on the restarted run
        out.rayleigh = 0.0;
        continue;
      }
      out.rayleigh = 0.0;
      return out;
    }
    v = w / nw;
    out.rayleigh = r;
    if (it > kWindow) {
      const double past = history[it % kWindow];
      if (std::abs(r - past) <=
          tol * std::max(std::abs(r), std::numeric_limits<double>::min())) {
        return out;
      }
    }
    history[it % kWindow] = r;
  }
  return out;
}

}  // namespace

Matrix gram(const Matrix& H) {
  require_nonempty(H, "gram");
  require_finite(H, "gram");
  const Eigen::Index n = H.cols();
  const auto limit = static_cast<Eigen::Index>(
      std::sqrt(static_cast<double>(std::numeric_limits<std::ptrdiff_t>::max()) /
                sizeof(double)));
  if (n > limit) {
    throw DimensionError("gram: cols^2 exceeds platform limits");
  }
  Matrix G = Matrix::Zero(n, n);
  G.selfadjointView<Eigen::Lower>().rankUpdate(H.transpose());
  G = G.selfadjointView<Eigen::Lower>();  // mirror: both triangles bit-equal
  return G;
}

SpectrumBounds spectral_bounds(const Matrix& G, double tol, int max_iter) {
  require_nonempty(G, "spectral_bounds");
  require_finite(G, "spectral_bounds");
  if (G.rows() != G.cols()) {
    throw DimensionError("spectral_bounds: matrix must be square");
  }
  if (!(tol > 0.0) || max_iter < 1) {
    throw ConfigError("spectral_bounds: tol must be > 0 and max_iter >= 1");
  }
  require_symmetric(G, "spectral_bounds");

  SpectrumBounds out;
  if (G.cwiseAbs().maxCoeff() == 0.0) {
    return out;  // zero matrix: kappa0 = kappa = 0, caller handles delta
  }

  const Eigen::Index n = G.rows();
  const PowerResult top =
      power_method(n, [&](const Vector& v) -> Vector { return G * v; }, tol, max_iter);
  out.kappa = top.rayleigh * (1.0 + tol);

  const double kappa = out.kappa;
  const PowerResult bottom = power_method(
      n, [&](const Vector& v) -> Vector { return kappa * v - G * v; }, tol, max_iter);
  // The shifted Rayleigh quotient approaches kappa - lambda_min from below,
  // so the raw difference overshoots lambda_min; deflate by the tolerance to
  // keep kappa0 a lower estimate.
  const double kappa0_raw = kappa - bottom.rayleigh;
  out.kappa0 = std::clamp(kappa0_raw - 2.0 * tol * kappa, 0.0, kappa);
  out.iterations_used = top.iterations + bottom.iterations;
  return out;
}

Matrix solve_spd(const Matrix& A, const Matrix& B, double jitter) {
  require_nonempty(A, "solve_spd");
  require_finite(A, "solve_spd");
  require_finite(B, "solve_spd");
  if (A.rows() != A.cols()) {
    throw DimensionError("solve_spd: A must be square");
  }
  if (B.rows() != A.rows()) {
    throw DimensionError("solve_spd: B row count must equal the order of A");
  }
  if (!(jitter >= 0.0) || !std::isfinite(jitter)) {
    throw ConfigError("solve_spd: jitter must be finite and >= 0");
  }
  require_symmetric(A, "solve_spd");

  const Eigen::Index n = A.rows();
  Matrix L = A;
  L.diagonal().array() += jitter;

  // In-place lower Cholesky; the strictly upper triangle is left untouched
  // and never read below.
  for (Eigen::Index k = 0; k < n; ++k) {
    const double d = L(k, k) - L.row(k).head(k).squaredNorm();
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw FactorizationError(
          "solve_spd: non-positive pivot at index " + std::to_string(k) +
              " (matrix not positive definite even after jitter)",
          static_cast<int>(k));
    }
    const double lkk = std::sqrt(d);
    L(k, k) = lkk;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      L(i, k) = (L(i, k) - L.row(i).head(k).dot(L.row(k).head(k))) / lkk;
    }
  }

  Matrix X = B;
  for (Eigen::Index k = 0; k < n; ++k) {  // L Y = B
    X.row(k) -= L.row(k).head(k) * X.topRows(k);
    X.row(k) /= L(k, k);
  }
  for (Eigen::Index k = n - 1; k >= 0; --k) {  // L^T X = Y
    const Eigen::Index below = n - 1 - k;
    if (below > 0) {
      X.row(k) -= L.col(k).tail(below).transpose() * X.bottomRows(below);
    }
    X.row(k) /= L(k, k);
  }
  return X;
}

Matrix min_norm_lsq(const Matrix& H, const Matrix& T, double ridge_floor) {
  require_nonempty(H, "min_norm_lsq");
  require_nonempty(T, "min_norm_lsq");
  if (H.rows() != T.rows()) {
    throw DimensionError("min_norm_lsq: H and T must have the same row count");
  }
  if (!(ridge_floor >= 0.0)) {
    throw ConfigError("min_norm_lsq: ridge_floor must be >= 0");
  }
  const Matrix G = gram(H);
  const Matrix rhs = H.transpose() * T;
  const double jitter = ridge_floor * G.trace() / static_cast<double>(G.cols());
  return solve_spd(G, rhs, jitter);
}

}  // namespace relm
