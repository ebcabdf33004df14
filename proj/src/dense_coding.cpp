#include "qdc/dense_coding.hpp"

#include <algorithm>
#include <cmath>

namespace qdc {

namespace {

void check_scheme(const DensityState& s, const EncodingScheme& scheme) {
  const PartyLayout& layout = s.layout();
  const std::vector<std::string> senders = layout.sender_labels();
  if (scheme.size() != senders.size()) {
    throw Error(ErrorCode::label_mismatch, "scheme must cover exactly the sender labels");
  }
  for (const std::string& label : senders) {
    const auto it = scheme.find(label);
    if (it == scheme.end()) {
      throw Error(ErrorCode::label_mismatch, "scheme is missing sender '" + label + "'");
    }
    const SenderEnsemble& ensemble = it->second;
    if (ensemble.unitaries.empty() || ensemble.unitaries.size() != ensemble.probabilities.size()) {
      throw Error(ErrorCode::invalid_ensemble,
                  "sender '" + label + "' needs matching probability/unitary lists");
    }
    const int d = layout.party(layout.index_of(label)).dim;
    double sum = 0.0;
    for (size_t i = 0; i < ensemble.unitaries.size(); ++i) {
      const Matrix& u = ensemble.unitaries[i];
      if (u.rows() != d || u.cols() != d) {
        throw Error(ErrorCode::dimension_mismatch,
                    "unitary for sender '" + label + "' does not match its dimension");
      }
      if (!is_unitary(u, kUnitaryTol)) {
        throw Error(ErrorCode::not_unitary, "operator for sender '" + label + "' is not unitary");
      }
      const double p = ensemble.probabilities[i];
      if (p < -kProbabilityTol || p > 1.0 + kProbabilityTol) {
        throw Error(ErrorCode::invalid_ensemble, "probability outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTol) {
      throw Error(ErrorCode::invalid_ensemble,
                  "probabilities for sender '" + label + "' sum to " + std::to_string(sum));
    }
  }
}

struct ReceiverGroups {
  std::string b1, b2;
  std::vector<std::string> group1, group2;  // senders in layout order
};

ReceiverGroups split_by_assignment(const PartyLayout& layout, const Assignment& assignment) {
  const std::vector<std::string> receivers = layout.receiver_labels();
  if (receivers.size() != 2) {
    throw Error(ErrorCode::not_two_receivers,
                "exactly two receivers required, layout has " + std::to_string(receivers.size()));
  }
  ReceiverGroups groups;
  groups.b1 = receivers[0];
  groups.b2 = receivers[1];
  const std::vector<std::string> senders = layout.sender_labels();
  for (const auto& [sender, receiver] : assignment) {
    if (std::find(senders.begin(), senders.end(), sender) == senders.end()) {
      throw Error(ErrorCode::unknown_label, "assignment key '" + sender + "' is not a sender");
    }
    if (receiver != groups.b1 && receiver != groups.b2) {
      throw Error(ErrorCode::unknown_label, "assignment target '" + receiver + "' is not a receiver");
    }
  }
  for (const std::string& sender : senders) {
    const auto it = assignment.find(sender);
    if (it == assignment.end()) {
      throw Error(ErrorCode::unassigned_sender, "sender '" + sender + "' has no receiver");
    }
    (it->second == groups.b1 ? groups.group1 : groups.group2).push_back(sender);
  }
  return groups;
}

std::vector<std::string> with_receiver(std::vector<std::string> group, const std::string& receiver) {
  group.push_back(receiver);
  return group;
}

}  // namespace

EncodingScheme weyl_scheme(const PartyLayout& layout) {
  EncodingScheme scheme;
  for (int idx : layout.sender_indices()) {
    const Party& party = layout.party(idx);
    const WeylSet set = weyl_set(party.dim);
    SenderEnsemble ensemble;
    ensemble.unitaries = set.operators;
    ensemble.probabilities.assign(set.operators.size(),
                                  1.0 / static_cast<double>(set.operators.size()));
    scheme.emplace(party.label, std::move(ensemble));
  }
  return scheme;
}

EncodingScheme identity_scheme(const PartyLayout& layout) {
  EncodingScheme scheme;
  for (int idx : layout.sender_indices()) {
    const Party& party = layout.party(idx);
    scheme.emplace(party.label, SenderEnsemble{{1.0}, {identity(party.dim)}});
  }
  return scheme;
}

Ensemble encode(const DensityState& s, const EncodingScheme& scheme) {
  check_scheme(s, scheme);
  const PartyLayout& layout = s.layout();
  const std::vector<std::string> senders = layout.sender_labels();

  std::vector<const SenderEnsemble*> ensembles;
  ensembles.reserve(senders.size());
  for (const std::string& label : senders) ensembles.push_back(&scheme.at(label));

  std::vector<std::pair<double, DensityState>> members;
  std::vector<size_t> index(senders.size(), 0);
  while (true) {
    double probability = 1.0;
    std::map<std::string, Matrix> ops;
    for (size_t k = 0; k < senders.size(); ++k) {
      probability *= ensembles[k]->probabilities[index[k]];
      ops.emplace(senders[k], ensembles[k]->unitaries[index[k]]);
    }
    members.emplace_back(probability, apply_local_unitaries(s, ops));

    size_t k = senders.size();
    while (k > 0 && ++index[k - 1] == ensembles[k - 1]->unitaries.size()) {
      index[--k] = 0;
    }
    if (k == 0) break;
  }
  return Ensemble(std::move(members));
}

double ensemble_capacity(const DensityState& s, const EncodingScheme& scheme) {
  return holevo(encode(s, scheme));
}

double classical_threshold(const PartyLayout& layout) {
  double threshold = 0.0;
  for (int idx : layout.sender_indices()) threshold += std::log2(layout.party(idx).dim);
  return threshold;
}

double capacity_single_receiver(const DensityState& s) {
  const PartyLayout& layout = s.layout();
  if (layout.sender_indices().empty()) {
    throw Error(ErrorCode::no_sender, "capacity requires at least one sender");
  }
  const std::vector<std::string> receivers = layout.receiver_labels();
  if (receivers.empty()) {
    throw Error(ErrorCode::no_receiver, "capacity requires at least one receiver");
  }
  return classical_threshold(layout) + von_neumann_entropy(partial_trace(s, receivers)) -
         von_neumann_entropy(s);
}

double chi_global(const DensityState& s) {
  const PartyLayout& layout = s.layout();
  if (layout.sender_indices().empty()) {
    throw Error(ErrorCode::no_sender, "chi_global requires at least one sender");
  }
  if (layout.receiver_indices().size() < 2) {
    throw Error(ErrorCode::fewer_than_two_receivers, "chi_global requires at least two receivers");
  }
  return capacity_single_receiver(s);
}

double b_locc(const DensityState& s, const Assignment& assignment) {
  const ReceiverGroups groups = split_by_assignment(s.layout(), assignment);
  const double s_b1 = von_neumann_entropy(partial_trace(s, {groups.b1}));
  const double s_b2 = von_neumann_entropy(partial_trace(s, {groups.b2}));
  const double s_1 = von_neumann_entropy(partial_trace(s, with_receiver(groups.group1, groups.b1)));
  const double s_2 = von_neumann_entropy(partial_trace(s, with_receiver(groups.group2, groups.b2)));
  return classical_threshold(s.layout()) + s_b1 + s_b2 - std::max(s_1, s_2);
}

double chi_local(const DensityState& s, const Assignment& assignment) {
  const ReceiverGroups groups = split_by_assignment(s.layout(), assignment);
  double total = 0.0;
  for (const auto& [group, receiver] :
       {std::pair{groups.group1, groups.b1}, std::pair{groups.group2, groups.b2}}) {
    if (group.empty()) continue;  // a receiver with no assigned sender conveys nothing
    total += capacity_single_receiver(partial_trace(s, with_receiver(group, receiver)));
  }
  return total;
}

const char* to_string(LoccStatus status) {
  switch (status) {
    case LoccStatus::proven: return "proven";
    case LoccStatus::excluded: return "excluded";
    case LoccStatus::unknown: return "unknown";
  }
  return "unknown";
}

CapacityReport capacity_report(const DensityState& s, const std::optional<Assignment>& assignment,
                               double eps) {
  CapacityReport report;
  report.classical_threshold = classical_threshold(s.layout());
  report.chi_single = capacity_single_receiver(s);
  report.chi_glob = report.chi_single;  // all receivers grouped jointly
  report.is_g_dc = report.chi_glob > report.classical_threshold + eps;
  if (assignment) {
    report.b_locc = b_locc(s, *assignment);
    report.chi_local = chi_local(s, *assignment);
    report.is_lo_dc = *report.chi_local > report.classical_threshold + eps;
    report.is_locc_dc_excluded = *report.b_locc <= report.classical_threshold + eps;
    if (*report.is_lo_dc) {
      report.locc_status = LoccStatus::proven;
    } else if (*report.is_locc_dc_excluded) {
      report.locc_status = LoccStatus::excluded;
    } else {
      report.locc_status = LoccStatus::unknown;
    }
  }
  return report;
}

}  // namespace qdc
