#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "qdc/error.hpp"

namespace qdc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Shared numerical tolerances (absolute, max-entry norm unless stated).
inline constexpr double kHermitianTol = 1e-10;   // Hermiticity acceptance
inline constexpr double kPsdTol = 1e-10;         // positive semidefiniteness
inline constexpr double kUnitaryTol = 1e-10;     // unitarity of supplied operators
inline constexpr double kTraceTol = 1e-10;       // unit-trace acceptance
inline constexpr double kEigenvalueClip = 1e-12; // spectrum clipping before logs

// Kronecker product with the qudit index convention
// (i*rows_b + k, j*cols_b + l) -> a(i,j) * b(k,l).
template <typename DerivedA, typename DerivedB>
Matrix tensor(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

template <typename Derived>
Matrix dagger(const Eigen::MatrixBase<Derived>& m) {
  return m.adjoint();
}

Matrix identity(Eigen::Index d);

Complex trace(const Matrix& m);  // throws not_square
double max_abs(const Matrix& m);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

// (m + m†)/2; used to cancel round-off before spectral calls.
Matrix symmetrized(const Matrix& m);

struct EigenSystem {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // columns
};

// Spectral decomposition of a Hermitian matrix (within tol); throws
// not_square / not_hermitian otherwise.
EigenSystem hermitian_eigensystem(const Matrix& m, double tol = kHermitianTol);

// Real eigenvalues sorted descending.
std::vector<double> hermitian_spectrum(const Matrix& m, double tol = kHermitianTol);

struct PsdCheck {
  bool psd = false;
  double min_eigenvalue = 0.0;
};

PsdCheck is_psd(const Matrix& m, double tol = kPsdTol);

}  // namespace qdc
