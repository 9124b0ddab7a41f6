#pragma once

#include "relm/elm.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace relm {

struct Dataset {
  std::string name;
  Matrix X;                         // n x p feature matrix
  std::vector<std::string> labels;  // n class labels
  LabelEncoding encoding;           // shared across splits of the same source

  int n() const { return static_cast<int>(X.rows()); }
  int p() const { return static_cast<int>(X.cols()); }
};

struct SplitSpec {
  double train_fraction = 0.5;
  bool stratified = true;
  std::uint64_t seed = 0;
};

// RFC-4180-style CSV: quoted fields, embedded delimiters/quotes/newlines,
// UTF-8 (BOM tolerated), '.' decimal point only. The label column is
// excluded from X; classes are discovered in first-appearance order.
// Throws DataError on unparseable cells (row/col reported), ragged rows,
// fewer than 2 classes, or nonfinite features.
Dataset load_csv(const std::string& path, int label_column, bool has_header,
                 char delimiter = ',');
Dataset load_csv(const std::string& path, const std::string& label_column,
                 bool has_header, char delimiter = ',');

// Per-feature affine transform fitted on training data only.
struct Transform {
  Vector mean;
  Vector scale;  // 1 for features with std below 1e-12 (centered only)

  Matrix apply(const Matrix& X) const;
};

// Centers every feature and scales to unit standard deviation (population
// denominator n). Returns the transformed copy and the Transform to apply
// verbatim to held-out data.
std::pair<Dataset, Transform> standardize(const Dataset& train);

// Disjoint, exhaustive partition, deterministic under spec.seed. Stratified
// splits keep per-class counts within one sample of the target fraction and
// throw DataError (naming the class) when a class has fewer than 2 samples.
std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec);

// Regression fixture with controlled conditioning: H = U diag(d) V^T with
// singular values geometrically spaced over one decade, T = H beta_true +
// noise * g. Powers the oracle-based solver tests.
struct SparseFixture {
  Matrix H;          // n x p
  Matrix T;          // n x 1
  Matrix beta_true;  // p x 1, exactly true_support nonzeros
};

SparseFixture synthetic_sparse(int n, int p, int true_support, double noise,
                               std::uint64_t seed);

}  // namespace relm
