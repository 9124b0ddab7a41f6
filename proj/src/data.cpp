#include "relm/data.hpp"

#include "relm/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace relm {

namespace {

// RFC-4180-style record reader: quoted fields may contain the delimiter,
// doubled quotes and newlines. CRLF and a leading UTF-8 BOM are tolerated.
std::vector<std::vector<std::string>> read_records(const std::string& path,
                                                   char delimiter) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    text.erase(0, 3);
  }

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool row_started = false;

  const auto end_field = [&] {
    row.push_back(field);
    field.clear();
  };
  const auto end_row = [&] {
    end_field();
    records.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      in_quotes = true;
      row_started = true;
    } else if (c == delimiter) {
      end_field();
      row_started = true;
    } else if (c == '\n') {
      if (row_started || !field.empty() || !row.empty()) end_row();
    } else if (c == '\r') {
      // swallowed; the following '\n' (if any) terminates the row
      if (i + 1 >= text.size() || text[i + 1] != '\n') {
        if (row_started || !field.empty() || !row.empty()) end_row();
      }
    } else {
      field.push_back(c);
      row_started = true;
    }
  }
  if (in_quotes) {
    throw DataError("'" + path + "': unterminated quoted field");
  }
  if (row_started || !field.empty() || !row.empty()) end_row();
  return records;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_cell(const std::string& raw, std::size_t row, std::size_t col,
                  const std::string& path) {
  const std::string cell = trim(raw);
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;  // from_chars rejects leading '+'
  double value = 0.0;
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || first == last) {
    throw DataError("'" + path + "': unparseable numeric cell at row " +
                    std::to_string(row + 1) + ", column " + std::to_string(col + 1) +
                    " ('" + raw + "')");
  }
  return value;
}

Dataset build_dataset(const std::string& path,
                      std::vector<std::vector<std::string>> records,
                      int label_index, bool has_header) {
  if (records.empty()) {
    throw DataError("'" + path + "': file is empty");
  }
  const std::size_t width = records.front().size();
  for (std::size_t r = 0; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw DataError("'" + path + "': ragged row " + std::to_string(r + 1) +
                      " (expected " + std::to_string(width) + " fields, got " +
                      std::to_string(records[r].size()) + ")");
    }
  }
  if (label_index < 0 || static_cast<std::size_t>(label_index) >= width) {
    throw DataError("'" + path + "': label column " + std::to_string(label_index) +
                    " out of range for " + std::to_string(width) + " columns");
  }
  const std::size_t first_data = has_header ? 1 : 0;
  const std::size_t n = records.size() - first_data;
  if (n < 2) {
    throw DataError("'" + path + "': need at least 2 data rows, got " +
                    std::to_string(n));
  }
  if (width < 2) {
    throw DataError("'" + path + "': need at least one feature column");
  }

  Dataset ds;
  ds.name = path;
  ds.X.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(width - 1));
  ds.labels.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& rec = records[r + first_data];
    Eigen::Index out_col = 0;
    for (std::size_t c = 0; c < width; ++c) {
      if (static_cast<int>(c) == label_index) continue;
      const double v = parse_cell(rec[c], r + first_data, c, path);
      if (!std::isfinite(v)) {
        throw DataError("'" + path + "': nonfinite feature at row " +
                        std::to_string(r + first_data + 1) + ", column " +
                        std::to_string(c + 1));
      }
      ds.X(static_cast<Eigen::Index>(r), out_col++) = v;
    }
    ds.labels.push_back(trim(rec[label_index]));
  }
  ds.encoding = make_encoding(ds.labels);
  if (ds.encoding.class_count() < 2) {
    throw DataError("'" + path + "': fewer than 2 distinct classes");
  }
  return ds;
}

// Partial Fisher-Yates shuffle driven by a fixed 64-bit generator; the
// bounded-draw mapping is pinned here for cross-platform determinism.
std::vector<int> shuffled_indices(int n, std::mt19937_64& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  return idx;
}

Dataset take_rows(const Dataset& ds, const std::vector<int>& rows,
                  const std::string& suffix) {
  Dataset out;
  out.name = ds.name + suffix;
  out.encoding = ds.encoding;
  out.X.resize(static_cast<Eigen::Index>(rows.size()), ds.X.cols());
  out.labels.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.X.row(static_cast<Eigen::Index>(i)) = ds.X.row(rows[i]);
    out.labels.push_back(ds.labels[static_cast<std::size_t>(rows[i])]);
  }
  return out;
}

double gaussian(std::mt19937_64& rng) {
  // Box-Muller on the fixed 53-bit uniform; avoids log(0).
  const double u1 = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

// Orthonormal columns via twice-applied modified Gram-Schmidt on a random
// Gaussian block. rows >= cols required.
Matrix random_orthonormal(int rows, int cols, std::mt19937_64& rng) {
  Matrix Q(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Q(r, c) = gaussian(rng);
    }
  }
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < cols; ++c) {
      for (int k = 0; k < c; ++k) {
        Q.col(c) -= Q.col(k).dot(Q.col(c)) * Q.col(k);
      }
      const double nc = Q.col(c).norm();
      if (nc > 0.0) Q.col(c) /= nc;
    }
  }
  return Q;
}

}  // namespace

Dataset load_csv(const std::string& path, int label_column, bool has_header,
                 char delimiter) {
  return build_dataset(path, read_records(path, delimiter), label_column, has_header);
}

Dataset load_csv(const std::string& path, const std::string& label_column,
                 bool has_header, char delimiter) {
  auto records = read_records(path, delimiter);
  if (!has_header) {
    throw DataError("'" + path + "': label column by name requires a header row");
  }
  if (records.empty()) {
    throw DataError("'" + path + "': file is empty");
  }
  const auto& header = records.front();
  int label_index = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == label_column) {
      label_index = static_cast<int>(c);
      break;
    }
  }
  if (label_index < 0) {
    throw DataError("'" + path + "': no column named '" + label_column + "'");
  }
  return build_dataset(path, std::move(records), label_index, true);
}

Matrix Transform::apply(const Matrix& X) const {
  if (X.cols() != mean.size()) {
    throw DimensionError("Transform::apply: column count mismatch");
  }
  Matrix out = X;
  out.rowwise() -= mean.transpose();
  out.array().rowwise() /= scale.transpose().array();
  return out;
}

std::pair<Dataset, Transform> standardize(const Dataset& train) {
  const Eigen::Index n = train.X.rows();
  const Eigen::Index p = train.X.cols();
  Transform tf;
  tf.mean = train.X.colwise().mean();
  tf.scale.resize(p);
  for (Eigen::Index c = 0; c < p; ++c) {
    const double var =
        (train.X.col(c).array() - tf.mean(c)).square().sum() / static_cast<double>(n);
    const double sd = std::sqrt(var);
    tf.scale(c) = sd < 1e-12 ? 1.0 : sd;  // near-constant: center only
  }
  Dataset out = train;
  out.X = tf.apply(train.X);
  return {std::move(out), std::move(tf)};
}

std::pair<Dataset, Dataset> split(const Dataset& ds, const SplitSpec& spec) {
  if (!(spec.train_fraction > 0.0) || !(spec.train_fraction < 1.0)) {
    throw ConfigError("split: train_fraction must lie in (0, 1)");
  }
  const int n = ds.n();
  if (n < 2) {
    throw DataError("split: need at least 2 samples");
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<int> train_rows;
  std::vector<int> test_rows;

  if (spec.stratified) {
    // Group sample indices per class in encoding order and shuffle within
    // each class. Per-class training counts use largest-remainder
    // apportionment against the overall round(fraction * n) target, so each
    // class stays within one sample of its own target and the total matches
    // the unstratified count. Both partitions keep at least one sample per
    // class.
    const int classes = ds.encoding.class_count();
    std::vector<std::vector<int>> members(static_cast<std::size_t>(classes));
    for (int i = 0; i < n; ++i) {
      const int cls = ds.encoding.index_of(ds.labels[static_cast<std::size_t>(i)]);
      members[static_cast<std::size_t>(cls)].push_back(i);
    }
    std::vector<int> take(static_cast<std::size_t>(classes));
    std::vector<double> remainder(static_cast<std::size_t>(classes));
    int assigned = 0;
    for (int cls = 0; cls < classes; ++cls) {
      const int nc = static_cast<int>(members[static_cast<std::size_t>(cls)].size());
      if (nc < 2) {
        throw DataError("split: class '" +
                        ds.encoding.class_names[static_cast<std::size_t>(cls)] +
                        "' has " + std::to_string(nc) +
                        " samples; too small to stratify");
      }
      const double target = spec.train_fraction * nc;
      take[static_cast<std::size_t>(cls)] =
          std::clamp(static_cast<int>(std::floor(target)), 1, nc - 1);
      remainder[static_cast<std::size_t>(cls)] =
          target - std::floor(target);
      assigned += take[static_cast<std::size_t>(cls)];
    }
    int total = std::clamp(static_cast<int>(std::llround(spec.train_fraction * n)),
                           classes, n - classes);
    std::vector<int> order_by_rem(static_cast<std::size_t>(classes));
    for (int cls = 0; cls < classes; ++cls) order_by_rem[static_cast<std::size_t>(cls)] = cls;
    std::sort(order_by_rem.begin(), order_by_rem.end(), [&](int a, int b) {
      const double ra = remainder[static_cast<std::size_t>(a)];
      const double rb = remainder[static_cast<std::size_t>(b)];
      return ra != rb ? ra > rb : a < b;
    });
    for (int round = 0; assigned < total && round < n; ++round) {
      for (int cls : order_by_rem) {
        const int nc = static_cast<int>(members[static_cast<std::size_t>(cls)].size());
        if (assigned < total && take[static_cast<std::size_t>(cls)] < nc - 1) {
          ++take[static_cast<std::size_t>(cls)];
          ++assigned;
        }
      }
    }
    for (int round = 0; assigned > total && round < n; ++round) {
      for (auto it = order_by_rem.rbegin(); it != order_by_rem.rend(); ++it) {
        if (assigned > total && take[static_cast<std::size_t>(*it)] > 1) {
          --take[static_cast<std::size_t>(*it)];
          --assigned;
        }
      }
    }
    for (int cls = 0; cls < classes; ++cls) {
      const auto& m = members[static_cast<std::size_t>(cls)];
      const auto order = shuffled_indices(static_cast<int>(m.size()), rng);
      for (int i = 0; i < static_cast<int>(m.size()); ++i) {
        (i < take[static_cast<std::size_t>(cls)] ? train_rows : test_rows)
            .push_back(m[order[i]]);
      }
    }
  } else {
    const auto order = shuffled_indices(n, rng);
    int take = static_cast<int>(std::llround(spec.train_fraction * n));
    take = std::clamp(take, 1, n - 1);
    for (int i = 0; i < n; ++i) {
      (i < take ? train_rows : test_rows).push_back(order[i]);
    }
  }

  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());
  return {take_rows(ds, train_rows, "/train"), take_rows(ds, test_rows, "/test")};
}

SparseFixture synthetic_sparse(int n, int p, int true_support, double noise,
                               std::uint64_t seed) {
  if (n < 1 || p < 1 || true_support < 0 || true_support > p) {
    throw ConfigError("synthetic_sparse: invalid sizes");
  }
  if (!(noise >= 0.0)) {
    throw ConfigError("synthetic_sparse: noise must be >= 0");
  }
  std::mt19937_64 rng(seed);
  const int r = std::min(n, p);

  const Matrix U = random_orthonormal(n, r, rng);
  const Matrix V = random_orthonormal(p, r, rng);
  Vector d(r);
  for (int i = 0; i < r; ++i) {
    // singular values geometrically spaced over one decade: condition 10
    d(i) = r == 1 ? 1.0 : std::pow(10.0, -static_cast<double>(i) / (r - 1));
  }

  SparseFixture fx;
  fx.H = U * d.asDiagonal() * V.transpose();

  fx.beta_true = Matrix::Zero(p, 1);
  const auto order = shuffled_indices(p, rng);
  for (int k = 0; k < true_support; ++k) {
    const double mag =
        0.5 + 1.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    const double sign = (rng() & 1u) ? 1.0 : -1.0;
    fx.beta_true(order[static_cast<std::size_t>(k)], 0) = sign * mag;
  }

  fx.T = fx.H * fx.beta_true;
  if (noise > 0.0) {
    for (Eigen::Index i = 0; i < fx.T.rows(); ++i) {
      fx.T(i, 0) += noise * gaussian(rng);
    }
  }
  return fx;
}

}  // namespace relm
