#pragma once

#include <Eigen/Core>

#include <string>

namespace relm {

// Row-major dense matrix of doubles — the universal carrier for X, H, beta
// and T. Row-major keeps CSV rows, numpy arrays and per-sample access cheap.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Vector = Eigen::VectorXd;

// Entry points reject NaN/Inf so that downstream code never has to.
void require_finite(const Matrix& m, const std::string& what);
void require_nonempty(const Matrix& m, const std::string& what);

}  // namespace relm
