#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace oracle {

using relm::Matrix;

Matrix naive_gram(const Matrix& H) {
  const auto n = H.rows();
  const auto p = H.cols();
  Matrix G = Matrix::Zero(p, p);
  for (Eigen::Index i = 0; i < p; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        s += H(k, i) * H(k, j);
      }
      G(i, j) = s;
    }
  }
  return G;
}

std::vector<double> jacobi_eigenvalues(Matrix A) {
  const auto n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("jacobi: square matrices only");
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        off = std::max(off, std::abs(A(p, q)));
      }
    }
    if (off < 1e-14 * scale) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (std::abs(A(p, q)) < 1e-300) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * A(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = A(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

Matrix gauss_solve(Matrix A, Matrix B) {
  const auto n = A.rows();
  if (A.cols() != n || B.rows() != n) {
    throw std::invalid_argument("gauss_solve: shape mismatch");
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
    }
    if (A(piv, k) == 0.0) throw std::runtime_error("gauss_solve: singular matrix");
    if (piv != k) {
      A.row(piv).swap(A.row(k));
      B.row(piv).swap(B.row(k));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double f = A(i, k) / A(k, k);
      if (f == 0.0) continue;
      A.row(i).tail(n - k) -= f * A.row(k).tail(n - k);
      B.row(i) -= f * B.row(k);
    }
  }
  Matrix X = B;
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    for (Eigen::Index j = k + 1; j < n; ++j) {
      X.row(k) -= A(k, j) * X.row(j);
    }
    X.row(k) /= A(k, k);
  }
  return X;
}

namespace {

template <typename F>
double golden_refine(F&& f, double lo, double hi) {
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 220 && hi - lo > 0.0; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  return 0.5 * (lo + hi);
}

// Grid to find the basin, then bisection on the objective's derivative
// inside it (the quadratic flatness of J limits value-only refinement to
// ~sqrt(eps); the derivative root is sharp). Falls back to golden-section
// when the basin does not bracket a sign change.
template <typename Penalty, typename PenaltyGrad>
double grid_prox_impl(double t, Penalty&& pen, PenaltyGrad&& pen_grad,
                      int grid_points) {
  const double a = std::abs(t);
  if (a == 0.0) return 0.0;
  const auto J = [&](double u) { return 0.5 * (u - a) * (u - a) + pen(u); };
  const auto g = [&](double u) { return (u - a) + pen_grad(u); };

  int best = 0;
  double best_val = J(0.0);
  const double h = a / (grid_points - 1);
  for (int i = 1; i < grid_points; ++i) {
    const double v = J(i * h);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1) * h);
  double hi = std::min(a, (best + 1) * h);
  double u;
  if (lo > 0.0 && g(lo) <= 0.0 && g(hi) >= 0.0) {
    for (int it = 0; it < 300 && hi > lo; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    u = 0.5 * (lo + hi);
  } else {
    u = golden_refine(J, lo, hi);
  }
  if (J(0.0) <= J(u)) u = 0.0;  // boundary wins ties
  return t < 0.0 ? -u : u;
}

}  // namespace

double grid_prox_hybrid_half(double lambda, double gamma, double eps, double t,
                             int grid_points) {
  return grid_prox_impl(
      t,
      [&](double u) { return lambda * (gamma * std::sqrt(u) + eps * u * u); },
      [&](double u) {
        return lambda * (gamma * 0.5 / std::sqrt(u) + 2.0 * eps * u);
      },
      grid_points);
}

double grid_prox_hybrid_soft(double lambda, double gamma, double eps, double t,
                             int grid_points) {
  return grid_prox_impl(
      t, [&](double u) { return lambda * (gamma * u + eps * u * u); },
      [&](double u) { return lambda * (gamma + 2.0 * eps * u); }, grid_points);
}

double fine_grid_prox_half(double lambda, double t, double step) {
  const double a = std::abs(t);
  const auto J = [&](double u) {
    return 0.5 * (u - a) * (u - a) + lambda * std::sqrt(u);
  };
  double best_u = 0.0;
  double best_val = J(0.0);
  const auto n = static_cast<long long>(a / step);
  for (long long i = 1; i <= n; ++i) {
    const double u = i * step;
    const double v = J(u);
    if (v < best_val) {
      best_val = v;
      best_u = u;
    }
  }
  const double u =
      golden_refine(J, std::max(0.0, best_u - step), std::min(a, best_u + step));
  const double refined = J(u) < best_val ? u : best_u;
  return t < 0.0 ? -refined : refined;
}

Matrix cd_lasso(const Matrix& H, const Matrix& T, double lambda, int max_sweeps,
                double tol) {
  const auto p = H.cols();
  const Matrix G = naive_gram(H);
  const Matrix C = H.transpose() * T;
  Matrix beta = Matrix::Zero(p, T.cols());
  for (Eigen::Index col = 0; col < T.cols(); ++col) {
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      double max_change = 0.0;
      for (Eigen::Index j = 0; j < p; ++j) {
        if (G(j, j) == 0.0) {
          beta(j, col) = 0.0;
          continue;
        }
        double rho = C(j, col);
        for (Eigen::Index k = 0; k < p; ++k) {
          if (k != j) rho -= G(j, k) * beta(k, col);
        }
        const double old = beta(j, col);
        double next = 0.0;
        if (rho > lambda) next = (rho - lambda) / G(j, j);
        else if (rho < -lambda) next = (rho + lambda) / G(j, j);
        beta(j, col) = next;
        max_change = std::max(max_change, std::abs(next - old));
      }
      if (max_change < tol) break;
    }
  }
  return beta;
}

Matrix conditioned_matrix(int n, int p, double smin, double smax,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto gaussian = [&rng]() {
    const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  };
  const int r = std::min(n, p);
  const auto ortho = [&](int rows, int cols) {
    Matrix Q(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) Q(i, j) = gaussian();
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < cols; ++c) {
        for (int k = 0; k < c; ++k) Q.col(c) -= Q.col(k).dot(Q.col(c)) * Q.col(k);
        const double nc = Q.col(c).norm();
        if (nc > 0.0) Q.col(c) /= nc;
      }
    }
    return Q;
  };
  const Matrix U = ortho(n, r);
  const Matrix V = ortho(p, r);
  Eigen::VectorXd d(r);
  for (int i = 0; i < r; ++i) {
    d(i) = r == 1 ? smax
                  : smax * std::pow(smin / smax,
                                    static_cast<double>(i) / (r - 1));
  }
  return U * d.asDiagonal() * V.transpose();
}

std::pair<double, double> welford_mean_std(const std::vector<double>& values) {
  double mean = 0.0, m2 = 0.0;
  std::size_t count = 0;
  for (double v : values) {
    ++count;
    const double d1 = v - mean;
    mean += d1 / static_cast<double>(count);
    m2 += d1 * (v - mean);
  }
  const double sd = count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0;
  return {mean, sd};
}

}  // namespace oracle
