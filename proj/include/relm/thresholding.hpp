#pragma once

#include "relm/types.hpp"

namespace relm {

// Largest |t| that half_scalar(lambda, .) maps to zero: (3/2) * lambda^(2/3).
// This is the exact breakeven where the interior stationary point of
// (1/2)(u-t)^2 + lambda*sqrt(|u|) ties with u = 0.
double half_threshold(double lambda);

// Half thresholding: the proximity operator of lambda*sqrt(|.|), i.e. the
// global minimizer of (1/2)(u-t)^2 + lambda*sqrt(|u|). Zero below
// half_threshold(lambda); above it, the cosine closed form
//   (2/3) t (1 + cos(2(pi - phi)/3)),  phi = arccos((lambda/4)(|t|/3)^(-3/2)),
// with the arccos argument clamped to [-1, 1] against rounding. Output has
// the sign of t (or is 0) and |output| <= |t|.
double half_scalar(double lambda, double t);

// Soft thresholding: sign(t) * max(|t| - lambda, 0), the prox of lambda*|.|.
double soft_scalar(double lambda, double t);

// Entrywise application; shape preserved.
Matrix half_vector(double lambda, const Matrix& beta);
Matrix soft_vector(double lambda, const Matrix& beta);

// Proximity operator of lambda * (gamma*||.||_0.5 + epsilon*||.||_2^2):
// half applied with threshold lambda*gamma/(1+2*epsilon*lambda) to
// beta/(1+2*epsilon*lambda). Requires lambda > 0.
Matrix prox_hybrid_half(double lambda, double gamma, double epsilon, const Matrix& beta);

// Same scaling with the soft operator: prox of
// lambda * (gamma*||.||_1 + epsilon*||.||_2^2). Requires lambda > 0.
Matrix prox_hybrid_soft(double lambda, double gamma, double epsilon, const Matrix& beta);

}  // namespace relm
