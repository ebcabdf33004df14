#pragma once

#include <vector>

#include "qdc/matrix_ops.hpp"

namespace qdc {

/// The d^2 shift-and-multiply unitaries W_(p,q)|j> = exp(i 2*pi*p*j/d) |j+q mod d>,
/// a complete trace-orthogonal unitary basis.
struct WeylSet {
  int dim = 0;
  std::vector<Matrix> operators;  // indexed p*d + q

  const Matrix& op(int p, int q) const {
    return operators[static_cast<size_t>(p) * static_cast<size_t>(dim) + static_cast<size_t>(q)];
  }
};

WeylSet weyl_set(int d);  // throws invalid_dimension for d < 2

/// Max-entry magnitude of (1/d^2) sum_j W_j† X W_j - (tr X / d) I.
/// Vanishes for every X; this twirling identity is what makes the uniform
/// Weyl ensemble optimal for encoding.
double trace_rule_residual(const WeylSet& w, const Matrix& xi);

}  // namespace qdc
