#include "qdc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qdc/dense_coding.hpp"
#include "qdc/random_states.hpp"

namespace qdc {

namespace {

std::string residual_detail(double worst, double bound, int checks) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "worst residual %.3e (bound %.0e) over %d checks", worst, bound,
                checks);
  return buf;
}

PartyLayout single_party_layout(int dim) {
  return PartyLayout({{"Q", dim, Role::sender}});
}

Ensemble random_ensemble(int dim, int members, Rng& rng) {
  const PartyLayout layout = single_party_layout(dim);
  const std::vector<double> probs = random_probabilities(members, rng);
  std::vector<std::pair<double, DensityState>> entries;
  for (int i = 0; i < members; ++i) {
    const auto rank = static_cast<Eigen::Index>(1 + rng() % static_cast<unsigned>(dim));
    entries.emplace_back(probs[static_cast<size_t>(i)], random_state(layout, rng, rank));
  }
  return Ensemble(std::move(entries));
}

double ensemble_relative_entropy_sum(const Ensemble& e, const DensityState& reference) {
  double sum = 0.0;
  for (const auto& [p, state] : e.members()) {
    if (p > 0.0) sum += p * relative_entropy(state, reference);
  }
  return sum;
}

}  // namespace

SuiteResult verify_trace_rule(std::uint64_t seed) {
  Rng rng(seed ^ 0x7261636b656c74ULL);
  SuiteResult result{"trace_rule", false, 0, 0.0, ""};
  for (int d = 2; d <= 5; ++d) {
    const WeylSet set = weyl_set(d);
    for (int t = 0; t < 20; ++t) {
      result.worst = std::max(result.worst, trace_rule_residual(set, random_gaussian(d, d, rng)));
      ++result.checks;
    }
  }
  result.passed = result.worst < 1e-10;
  result.detail = residual_detail(result.worst, 1e-10, result.checks);
  return result;
}

SuiteResult verify_holevo_identity(std::uint64_t seed) {
  Rng rng(seed ^ 0x686f6c65766fULL);
  SuiteResult result{"holevo_identity", false, 0, 0.0, ""};
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int members = 2 + static_cast<int>(rng() % 3);
    const Ensemble e = random_ensemble(dim, members, rng);
    const double lhs = holevo(e);
    const double rhs = ensemble_relative_entropy_sum(e, e.average());
    result.worst = std::max(result.worst, std::abs(lhs - rhs));
    ++result.checks;
  }
  result.passed = result.worst < 1e-10;
  result.detail = residual_detail(result.worst, 1e-10, result.checks);
  return result;
}

SuiteResult verify_donald_identity(std::uint64_t seed) {
  Rng rng(seed ^ 0x646f6e616c64ULL);
  SuiteResult result{"donald_identity", false, 0, 0.0, ""};
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 3);
    const int members = 2 + static_cast<int>(rng() % 3);
    const Ensemble e = random_ensemble(dim, members, rng);
    const PartyLayout layout = single_party_layout(dim);
    // Full-support reference: keep a floor of identity in the mixture.
    const Matrix sigma_matrix =
        0.85 * random_density_matrix(dim, dim, rng) + 0.15 * identity(dim) / dim;
    const DensityState sigma(layout, sigma_matrix);

    const double via_sigma = ensemble_relative_entropy_sum(e, sigma);
    const double via_average = ensemble_relative_entropy_sum(e, e.average());
    const double average_to_sigma = relative_entropy(e.average(), sigma);
    result.worst = std::max(result.worst, std::abs(via_sigma - via_average - average_to_sigma));
    ++result.checks;
  }
  result.passed = result.worst < 1e-9;
  result.detail = residual_detail(result.worst, 1e-9, result.checks);
  return result;
}

SuiteResult verify_optimality(std::uint64_t seed) {
  Rng rng(seed ^ 0x6f7074696d616cULL);
  SuiteResult result{"optimality", false, 0, 0.0, ""};

  const std::vector<std::pair<std::vector<int>, int>> layouts = {
      {{2}, 2}, {{2}, 3}, {{3}, 2}, {{3}, 3}, {{2, 2}, 2},
      {{2, 3}, 2}, {{2, 2}, 3}, {{3, 3}, 2}, {{2, 2, 2}, 2}, {{2, 3}, 3},
  };

  double worst_violation = -1.0;  // max over schemes of (scheme capacity - formula)
  double worst_attainment = 0.0;  // max over states of |weyl capacity - formula|
  for (int state_index = 0; state_index < 20; ++state_index) {
    const auto& [sender_dims, receiver_dim] = layouts[static_cast<size_t>(state_index) % layouts.size()];
    std::vector<Party> parties;
    for (size_t k = 0; k < sender_dims.size(); ++k) {
      parties.push_back({"A" + std::to_string(k + 1), sender_dims[k], Role::sender});
    }
    parties.push_back({"B1", receiver_dim, Role::receiver});
    const PartyLayout layout{parties};

    // Cycle full-rank, pure, and low-rank states.
    const Eigen::Index rank = (state_index % 3 == 0) ? layout.total_dim()
                              : (state_index % 3 == 1) ? 1
                                                       : (1 + layout.total_dim() / 2);
    const DensityState s = random_state(layout, rng, rank);
    const double formula = capacity_single_receiver(s);

    for (int trial = 0; trial < 10; ++trial) {
      EncodingScheme scheme;
      for (const std::string& label : layout.sender_labels()) {
        const int d = layout.party(layout.index_of(label)).dim;
        const int count = 1 + static_cast<int>(rng() % 4);
        SenderEnsemble ensemble;
        ensemble.probabilities = random_probabilities(count, rng);
        for (int i = 0; i < count; ++i) ensemble.unitaries.push_back(random_unitary(d, rng));
        scheme.emplace(label, std::move(ensemble));
      }
      worst_violation = std::max(worst_violation, ensemble_capacity(s, scheme) - formula);
      ++result.checks;
    }

    worst_attainment =
        std::max(worst_attainment, std::abs(ensemble_capacity(s, weyl_scheme(layout)) - formula));
  }

  result.worst = std::max(worst_violation, worst_attainment);
  result.passed = worst_violation <= 1e-9 && worst_attainment <= 1e-9;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "worst excess over formula %.3e, worst Weyl attainment gap %.3e over %d schemes",
                worst_violation, worst_attainment, result.checks);
  result.detail = buf;
  return result;
}

std::vector<SuiteResult> verify_all(std::uint64_t seed) {
  return {verify_trace_rule(seed), verify_holevo_identity(seed), verify_donald_identity(seed),
          verify_optimality(seed)};
}

}  // namespace qdc
