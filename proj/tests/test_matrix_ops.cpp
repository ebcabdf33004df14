#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qdc/matrix_ops.hpp"
#include "qdc/random_states.hpp"
#include "test_support.hpp"

using namespace qdc;
using qdc::test::near;

namespace {

// Independent Kronecker oracle: the index formula, entry by entry.
Matrix kron_by_formula(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_CASE("tensor of identities is the identity") {
  CHECK(max_abs(tensor(identity(2), identity(2)) - identity(4)) == 0.0);
}

TEST_CASE("tensor of two flips is the anti-diagonal of ones") {
  const Matrix xx = tensor(qdc::test::pauli_x(), qdc::test::pauli_x());
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(xx(r, c) == Complex(r + c == 3 ? 1.0 : 0.0, 0.0));
}

TEST_CASE("tensor matches the index-formula oracle and is associative") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_gaussian(2, 2, rng);
    const Matrix b = random_gaussian(2, 2, rng);
    const Matrix c = random_gaussian(2, 2, rng);
    CHECK(max_abs(tensor(a, b) - kron_by_formula(a, b)) == 0.0);
    CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-12);
  }
}

TEST_CASE("tensor is bilinear") {
  Rng rng(11);
  const Matrix a = random_gaussian(3, 3, rng);
  const Matrix b = random_gaussian(2, 2, rng);
  const Complex alpha(0.3, -1.7);
  CHECK(max_abs(tensor((alpha * a).eval(), b) - alpha * tensor(a, b)) < 1e-12);
  const Matrix a2 = random_gaussian(3, 3, rng);
  CHECK(max_abs(tensor((a + a2).eval(), b) - (tensor(a, b) + tensor(a2, b))) < 1e-12);
}

TEST_CASE("hermitian_spectrum on known matrices") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  const std::vector<double> spec = hermitian_spectrum(d);
  CHECK(spec.size() == 2);
  CHECK(near(spec[0], 2.0, 1e-14));
  CHECK(near(spec[1], 1.0, 1e-14));

  const std::vector<double> flip = hermitian_spectrum(qdc::test::pauli_x());
  CHECK(near(flip[0], 1.0, 1e-12));
  CHECK(near(flip[1], -1.0, 1e-12));
}

TEST_CASE("hermitian_spectrum of the Werner(0.6) matrix") {
  Vector psi_minus = Vector::Zero(4);
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  const Matrix rho = 0.6 * (psi_minus * psi_minus.adjoint()) + 0.4 * identity(4) / 4.0;
  const std::vector<double> spec = hermitian_spectrum(rho);
  // (1+3p)/4 once and (1-p)/4 three times
  CHECK(near(spec[0], 0.70, 1e-12));
  for (int i = 1; i < 4; ++i) CHECK(near(spec[static_cast<size_t>(i)], 0.10, 1e-12));
}

TEST_CASE("spectrum sums to the trace") {
  Rng rng(23);
  for (int d : {2, 3, 5}) {
    const Matrix g = random_gaussian(d, d, rng);
    const Matrix h = symmetrized(g);
    double sum = 0.0;
    for (double lambda : hermitian_spectrum(h)) sum += lambda;
    CHECK(near(sum, h.trace().real(), 1e-10));
  }
}

TEST_CASE("hermitian_spectrum rejects bad inputs") {
  CHECK_THROWS_WITH_AS(hermitian_spectrum(Matrix::Zero(2, 3)), doctest::Contains("NotSquare"),
                       Error);
  Matrix skew(2, 2);
  skew << 0, 1, -1, 0;  // antisymmetric real: m != m†
  CHECK_THROWS_AS(hermitian_spectrum(skew), Error);
  try {
    hermitian_spectrum(skew);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_hermitian);
  }
}

TEST_CASE("dagger is an involution") {
  Rng rng(5);
  const Matrix m = random_gaussian(3, 4, rng);
  CHECK(max_abs(dagger(dagger(m)) - m) == 0.0);
}

TEST_CASE("trace of the 4x4 identity") {
  CHECK(trace(identity(4)) == Complex(4.0, 0.0));
  CHECK_THROWS_AS(trace(Matrix::Zero(2, 3)), Error);
}

TEST_CASE("is_psd reports the minimum eigenvalue") {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -0.5;
  const PsdCheck check = is_psd(d);
  CHECK_FALSE(check.psd);
  CHECK(near(check.min_eigenvalue, -0.5, 1e-14));
  CHECK(is_psd(identity(3)).psd);
}
