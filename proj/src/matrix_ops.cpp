#include "qdc/matrix_ops.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace qdc {

Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

Complex trace(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::not_square, "trace requires a square matrix");
  return m.trace();
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.adjoint() * m - identity(m.rows())) <= tol;
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

EigenSystem hermitian_eigensystem(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::not_square, "spectral decomposition requires a square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::not_hermitian, "matrix has non-finite entries");
  }
  if (!is_hermitian(m, tol)) {
    throw Error(ErrorCode::not_hermitian, "matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(symmetrized(m));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::not_hermitian, "eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> hermitian_spectrum(const Matrix& m, double tol) {
  const EigenSystem es = hermitian_eigensystem(m, tol);
  std::vector<double> values(es.values.data(), es.values.data() + es.values.size());
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

PsdCheck is_psd(const Matrix& m, double tol) {
  const EigenSystem es = hermitian_eigensystem(m);
  const double min_eig = es.values.minCoeff();
  return {min_eig >= -tol, min_eig};
}

}  // namespace qdc
