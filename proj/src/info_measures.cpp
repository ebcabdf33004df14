#include "qdc/info_measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qdc {

Ensemble::Ensemble(std::vector<std::pair<double, DensityState>> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::invalid_ensemble, "ensemble has no members");
  double sum = 0.0;
  for (const auto& [p, state] : members_) {
    if (p < -kProbabilityTol || p > 1.0 + kProbabilityTol) {
      throw Error(ErrorCode::invalid_ensemble, "probability outside [0, 1]");
    }
    if (!(state.layout() == members_.front().second.layout())) {
      throw Error(ErrorCode::invalid_ensemble, "members live on different layouts");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol) {
    throw Error(ErrorCode::invalid_ensemble, "probabilities sum to " + std::to_string(sum));
  }
}

const PartyLayout& Ensemble::layout() const { return members_.front().second.layout(); }

DensityState Ensemble::average() const {
  Matrix avg = Matrix::Zero(members_.front().second.dim(), members_.front().second.dim());
  for (const auto& [p, state] : members_) avg += p * state.matrix();
  return {layout(), std::move(avg)};
}

double von_neumann_entropy(const DensityState& s) {
  const EigenSystem es = hermitian_eigensystem(s.matrix());
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    const double lambda = std::min(es.values[i], 1.0);
    if (lambda <= kEigenvalueClip) continue;  // 0 log 0 := 0, tiny negatives dropped
    entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double relative_entropy(const DensityState& a, const DensityState& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "states have different total dimensions");
  }
  const EigenSystem ea = hermitian_eigensystem(a.matrix());
  const EigenSystem eb = hermitian_eigensystem(b.matrix());

  double tr_a_log_a = 0.0;
  for (Eigen::Index i = 0; i < ea.values.size(); ++i) {
    const double lambda = std::min(ea.values[i], 1.0);
    if (lambda <= kEigenvalueClip) continue;
    tr_a_log_a += lambda * std::log2(lambda);
  }

  // Weights of a in b's eigenbasis; weight on b's kernel decides finiteness.
  const Matrix overlap = eb.vectors.adjoint() * a.matrix() * eb.vectors;
  double tr_a_log_b = 0.0;
  double leaked = 0.0;
  for (Eigen::Index j = 0; j < eb.values.size(); ++j) {
    const double weight = overlap(j, j).real();
    if (eb.values[j] <= kSupportCutoff) {
      leaked += std::max(weight, 0.0);
    } else {
      tr_a_log_b += weight * std::log2(eb.values[j]);
    }
  }
  if (leaked > kSupportLeakTol) return std::numeric_limits<double>::infinity();
  return std::max(0.0, tr_a_log_a - tr_a_log_b);
}

double holevo(const Ensemble& e) {
  double mean_entropy = 0.0;
  for (const auto& [p, state] : e.members()) {
    if (p > 0.0) mean_entropy += p * von_neumann_entropy(state);
  }
  return std::max(0.0, von_neumann_entropy(e.average()) - mean_entropy);
}

}  // namespace qdc
