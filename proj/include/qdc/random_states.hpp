#pragma once

#include <random>
#include <vector>

#include "qdc/density_state.hpp"

namespace qdc {

using Rng = std::mt19937_64;

Matrix random_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed into Q.
Matrix random_unitary(Eigen::Index d, Rng& rng);

Vector random_pure_vector(Eigen::Index d, Rng& rng);

/// G G† / tr(G G†) with G a d x rank complex Gaussian matrix.
Matrix random_density_matrix(Eigen::Index d, Eigen::Index rank, Rng& rng);

/// Random state on the layout; rank 0 means full rank.
DensityState random_state(const PartyLayout& layout, Rng& rng, Eigen::Index rank = 0);

/// Random state that is PPT for the given transposed party set, obtained by
/// mixing a random state towards the identity until the partial transpose is
/// positive.
DensityState random_ppt_state(const PartyLayout& layout,
                              const std::vector<std::string>& transposed, Rng& rng);

/// Uniform sample from the probability simplex.
std::vector<double> random_probabilities(int k, Rng& rng);

}  // namespace qdc
