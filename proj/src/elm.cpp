#include "relm/elm.hpp"

#include "relm/errors.hpp"

#include <cmath>
#include <random>
#include <unordered_map>

namespace relm {

namespace {

// Fixed 53-bit mapping from raw generator output to [0, 1); identical on
// every platform, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_pm(std::mt19937_64& rng, double c) {
  return c * (2.0 * unit_uniform(rng) - 1.0);
}

}  // namespace

double sigmoid(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

HiddenLayer init_hidden(int input_dim, int node_count, double weight_range,
                        std::uint64_t seed) {
  if (input_dim < 1 || node_count < 1) {
    throw ConfigError("init_hidden: input_dim and node_count must be >= 1");
  }
  if (!(weight_range > 0.0) || !std::isfinite(weight_range)) {
    throw ConfigError("init_hidden: weight_range must be finite and > 0");
  }
  HiddenLayer layer;
  layer.input_dim = input_dim;
  layer.node_count = node_count;
  layer.weight_range = weight_range;
  layer.seed = seed;

  std::mt19937_64 rng(seed);
  layer.weights.resize(node_count, input_dim);
  for (int i = 0; i < node_count; ++i) {
    for (int j = 0; j < input_dim; ++j) {
      layer.weights(i, j) = uniform_pm(rng, weight_range);
    }
  }
  layer.biases.resize(node_count);
  for (int i = 0; i < node_count; ++i) {
    layer.biases(i) = uniform_pm(rng, weight_range);
  }
  return layer;
}

Matrix hidden_matrix(const HiddenLayer& layer, const Matrix& X) {
  require_nonempty(X, "hidden_matrix");
  require_finite(X, "hidden_matrix");
  if (X.cols() != layer.input_dim) {
    throw DimensionError("hidden_matrix: X has " + std::to_string(X.cols()) +
                         " columns, layer expects " +
                         std::to_string(layer.input_dim));
  }
  Matrix H = X * layer.weights.transpose();
  H.rowwise() += layer.biases.transpose();
  return H.unaryExpr([](double z) { return sigmoid(z); });
}

int LabelEncoding::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < class_names.size(); ++i) {
    if (class_names[i] == label) return static_cast<int>(i);
  }
  throw DataError("unknown label '" + label + "'");
}

LabelEncoding make_encoding(const std::vector<std::string>& labels) {
  LabelEncoding enc;
  std::unordered_map<std::string, int> seen;
  for (const auto& label : labels) {
    if (seen.emplace(label, 0).second) {
      enc.class_names.push_back(label);
    }
  }
  return enc;
}

Matrix one_hot(const std::vector<std::string>& labels, const LabelEncoding& enc) {
  if (labels.empty() || enc.class_count() < 1) {
    throw DataError("one_hot: empty labels or encoding");
  }
  Matrix T = Matrix::Zero(static_cast<Eigen::Index>(labels.size()), enc.class_count());
  for (std::size_t j = 0; j < labels.size(); ++j) {
    T(static_cast<Eigen::Index>(j), enc.index_of(labels[j])) = 1.0;
  }
  return T;
}

std::vector<int> argmax_rows(const Matrix& scores) {
  std::vector<int> out(static_cast<std::size_t>(scores.rows()));
  for (Eigen::Index r = 0; r < scores.rows(); ++r) {
    int best = 0;
    double best_val = scores(r, 0);
    for (Eigen::Index c = 1; c < scores.cols(); ++c) {
      if (scores(r, c) > best_val) {  // strict: ties keep the lowest index
        best_val = scores(r, c);
        best = static_cast<int>(c);
      }
    }
    out[static_cast<std::size_t>(r)] = best;
  }
  return out;
}

std::vector<int> predict(const HiddenLayer& layer, const Matrix& beta,
                         const Matrix& X) {
  const Matrix H = hidden_matrix(layer, X);
  if (beta.rows() != H.cols()) {
    throw DimensionError("predict: beta has " + std::to_string(beta.rows()) +
                         " rows, expected " + std::to_string(H.cols()));
  }
  return argmax_rows(H * beta);
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size()) {
    throw DimensionError("accuracy: prediction/truth length mismatch");
  }
  if (predicted.empty()) {
    throw DimensionError("accuracy: empty inputs");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == truth[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

int remaining_nodes(const Matrix& beta, double tol) {
  int alive = 0;
  for (Eigen::Index r = 0; r < beta.rows(); ++r) {
    if (beta.row(r).cwiseAbs().maxCoeff() > tol) ++alive;
  }
  return alive;
}

}  // namespace relm
