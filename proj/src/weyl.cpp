#include "qdc/weyl.hpp"

#include <cmath>
#include <numbers>

namespace qdc {

WeylSet weyl_set(int d) {
  if (d < 2) {
    throw Error(ErrorCode::invalid_dimension, "Weyl set requires dimension >= 2");
  }
  WeylSet set;
  set.dim = d;
  set.operators.reserve(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) {
      Matrix w = Matrix::Zero(d, d);
      for (int j = 0; j < d; ++j) {
        const double phase = 2.0 * std::numbers::pi * p * j / d;
        w((j + q) % d, j) = std::polar(1.0, phase);
      }
      set.operators.push_back(std::move(w));
    }
  }
  return set;
}

double trace_rule_residual(const WeylSet& w, const Matrix& xi) {
  const int d = w.dim;
  if (xi.rows() != d || xi.cols() != d) {
    throw Error(ErrorCode::dimension_mismatch, "test operator does not match the Weyl dimension");
  }
  Matrix twirl = Matrix::Zero(d, d);
  for (const Matrix& op : w.operators) twirl += op.adjoint() * xi * op;
  twirl /= static_cast<double>(d) * d;
  return max_abs(twirl - (xi.trace() / static_cast<double>(d)) * identity(d));
}

}  // namespace qdc
