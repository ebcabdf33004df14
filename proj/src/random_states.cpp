#include "qdc/random_states.hpp"

#include <Eigen/QR>
#include <cmath>

namespace qdc {

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

Matrix random_unitary(Eigen::Index d, Rng& rng) {
  const Matrix z = random_gaussian(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is uniform.
  for (Eigen::Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (std::abs(rjj) > 0.0) ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
  }
  return q;
}

Vector random_pure_vector(Eigen::Index d, Rng& rng) {
  Vector v = random_gaussian(d, 1, rng);
  while (v.norm() <= 1e-12) v = random_gaussian(d, 1, rng);
  return v / v.norm();
}

Matrix random_density_matrix(Eigen::Index d, Eigen::Index rank, Rng& rng) {
  const Matrix g = random_gaussian(d, rank, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return symmetrized(rho);
}

DensityState random_state(const PartyLayout& layout, Rng& rng, Eigen::Index rank) {
  const Eigen::Index d = layout.total_dim();
  if (rank <= 0) rank = d;
  if (rank == 1) {
    return from_pure(random_pure_vector(d, rng), layout);
  }
  return {layout, random_density_matrix(d, rank, rng)};
}

DensityState random_ppt_state(const PartyLayout& layout,
                              const std::vector<std::string>& transposed, Rng& rng) {
  const Eigen::Index d = layout.total_dim();
  const Matrix base = random_density_matrix(d, d, rng);
  double weight = 0.3;
  while (true) {
    const Matrix rho =
        weight * base + (1.0 - weight) * identity(d) / static_cast<double>(d);
    DensityState candidate(layout, rho);
    if (is_psd(partial_transpose(candidate, transposed), 1e-12).psd) return candidate;
    weight *= 0.5;  // mixing towards the identity reaches PPT eventually
  }
}

std::vector<double> random_probabilities(int k, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(static_cast<size_t>(k));
  double sum = 0.0;
  for (double& value : p) {
    value = expo(rng);
    sum += value;
  }
  for (double& value : p) value /= sum;
  return p;
}

}  // namespace qdc
