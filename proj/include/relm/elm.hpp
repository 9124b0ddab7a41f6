#pragma once

#include "relm/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relm {

enum class Activation { Sigmoid };

// 1 / (1 + e^-x), evaluated without overflow for large |x|.
double sigmoid(double x);

// Random hidden layer. Weights and biases are drawn once and never trained;
// treat instances as immutable after init_hidden.
struct HiddenLayer {
  int input_dim = 0;
  int node_count = 0;
  Matrix weights;      // node_count x input_dim, entries in [-c, c]
  Vector biases;       // node_count, entries in [-c, c]
  Activation activation = Activation::Sigmoid;
  double weight_range = 1.0;
  std::uint64_t seed = 0;
};

// Draws weights and biases i.i.d. uniform on [-c, c] from a deterministic
// generator. The same (p, N, c, seed) always yields a bit-identical layer;
// the mapping from raw 64-bit draws to doubles is fixed here, not delegated
// to std::uniform_real_distribution, so layers are portable across builds.
HiddenLayer init_hidden(int input_dim, int node_count, double weight_range,
                        std::uint64_t seed);

// H[j,i] = g(<w_i, x_j> + b_i), one row per sample, one column per node.
Matrix hidden_matrix(const HiddenLayer& layer, const Matrix& X);

// Class label <-> index bijection, in first-appearance order.
struct LabelEncoding {
  std::vector<std::string> class_names;

  int class_count() const { return static_cast<int>(class_names.size()); }
  // Throws DataError naming the label when it is not in the encoding.
  int index_of(const std::string& label) const;
};

LabelEncoding make_encoding(const std::vector<std::string>& labels);

// Indicator rows: row j has a 1 at the class index of labels[j].
Matrix one_hot(const std::vector<std::string>& labels, const LabelEncoding& enc);

// Row-wise argmax with ties broken toward the lowest index.
std::vector<int> argmax_rows(const Matrix& scores);

// argmax_rows(hidden_matrix(layer, X) * beta).
std::vector<int> predict(const HiddenLayer& layer, const Matrix& beta, const Matrix& X);

// Fraction of exact matches. Throws DimensionError on length mismatch.
double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

// A hidden node survives if any of its outgoing weights exceeds tol in
// magnitude: counts rows of beta with max-abs entry > tol.
int remaining_nodes(const Matrix& beta, double tol = 1e-8);

}  // namespace relm
