#include "relm/thresholding.hpp"

#include "relm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relm {

double half_threshold(double lambda) {
  if (!(lambda >= 0.0)) {
    throw ConfigError("half_threshold: lambda must be >= 0");
  }
  return 1.5 * std::cbrt(lambda * lambda);
}

double half_scalar(double lambda, double t) {
  if (!(lambda >= 0.0)) {
    throw ConfigError("half_scalar: lambda must be >= 0");
  }
  if (lambda == 0.0) {
    return t;  // zero threshold: exact identity, not the cosine path
  }
  const double a = std::abs(t);
  if (a <= half_threshold(lambda)) {
    return 0.0;
  }
  // On |t| > threshold the arccos argument is < 1 mathematically; clamp
  // against rounding just above the branch point.
  const double arg =
      std::clamp((lambda / 4.0) * std::pow(a / 3.0, -1.5), -1.0, 1.0);
  const double phi = std::acos(arg);
  return (2.0 / 3.0) * t * (1.0 + std::cos(2.0 * (std::numbers::pi - phi) / 3.0));
}

double soft_scalar(double lambda, double t) {
  if (!(lambda >= 0.0)) {
    throw ConfigError("soft_scalar: lambda must be >= 0");
  }
  const double a = std::abs(t) - lambda;
  if (a <= 0.0) return 0.0;
  return t < 0.0 ? -a : a;
}

Matrix half_vector(double lambda, const Matrix& beta) {
  return beta.unaryExpr([lambda](double t) { return half_scalar(lambda, t); });
}

Matrix soft_vector(double lambda, const Matrix& beta) {
  return beta.unaryExpr([lambda](double t) { return soft_scalar(lambda, t); });
}

Matrix prox_hybrid_half(double lambda, double gamma, double epsilon,
                        const Matrix& beta) {
  if (!(lambda > 0.0)) {
    throw ConfigError("prox_hybrid_half: lambda must be > 0");
  }
  if (!(gamma >= 0.0) || !(epsilon >= 0.0)) {
    throw ConfigError("prox_hybrid_half: gamma and epsilon must be >= 0");
  }
  const double shrink = 1.0 + 2.0 * epsilon * lambda;
  return half_vector(lambda * gamma / shrink, beta / shrink);
}

Matrix prox_hybrid_soft(double lambda, double gamma, double epsilon,
                        const Matrix& beta) {
  if (!(lambda > 0.0)) {
    throw ConfigError("prox_hybrid_soft: lambda must be > 0");
  }
  if (!(gamma >= 0.0) || !(epsilon >= 0.0)) {
    throw ConfigError("prox_hybrid_soft: gamma and epsilon must be >= 0");
  }
  const double shrink = 1.0 + 2.0 * epsilon * lambda;
  return soft_vector(lambda * gamma / shrink, beta / shrink);
}

}  // namespace relm
