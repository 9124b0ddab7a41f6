#include "relm/types.hpp"

#include "relm/errors.hpp"

namespace relm {

void require_nonempty(const Matrix& m, const std::string& what) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionError(what + ": matrix is empty");
  }
}

void require_finite(const Matrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw Error(what + ": matrix contains NaN or Inf entries");
  }
}

}  // namespace relm
