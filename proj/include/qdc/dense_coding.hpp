#pragma once

#include <map>
#include <optional>
#include <string>

#include "qdc/info_measures.hpp"
#include "qdc/weyl.hpp"

namespace qdc {

// Capacity excess below this is treated as round-off, not dense-codeability.
inline constexpr double kDcEps = 1e-9;

/// One sender's unitary ensemble {p_i, U_i}.
struct SenderEnsemble {
  std::vector<double> probabilities;
  std::vector<Matrix> unitaries;
};

/// Per-sender ensembles keyed by sender label.
using EncodingScheme = std::map<std::string, SenderEnsemble>;

/// sender label -> receiver label.
using Assignment = std::map<std::string, std::string>;

/// Uniform ensemble over each sender's full Weyl set.
EncodingScheme weyl_scheme(const PartyLayout& layout);

/// Every sender applies the identity with probability one.
EncodingScheme identity_scheme(const PartyLayout& layout);

/// Product ensemble over all per-sender index combinations; member
/// probabilities multiply and each member is the conjugated state.
Ensemble encode(const DensityState& s, const EncodingScheme& scheme);

/// Holevo quantity of the encoded ensemble for a fixed scheme.
double ensemble_capacity(const DensityState& s, const EncodingScheme& scheme);

/// sum_senders log2(d), the information a classical protocol already achieves.
double classical_threshold(const PartyLayout& layout);

/// Dense coding capacity with all receivers read out jointly:
/// sum log2 d_sender + S(joint receiver marginal) - S(rho).
double capacity_single_receiver(const DensityState& s);

/// Same quantity for >= 2 receivers grouped together; an upper bound on what
/// separated receivers can achieve.
double chi_global(const DensityState& s);

/// Upper bound on the two-receiver LOCC capacity:
/// sum log2 d_sender + S(rho^B1) + S(rho^B2) - max_x S(rho^(x)),
/// where rho^(x) is the marginal on receiver x together with the senders
/// assigned to it. Reported as-is; the bound can exceed chi_global.
double b_locc(const DensityState& s, const Assignment& assignment);

/// Lower bound from receivers that do not communicate: the sum of the
/// single-receiver capacities of the two assigned marginals.
double chi_local(const DensityState& s, const Assignment& assignment);

enum class LoccStatus { proven, excluded, unknown };
const char* to_string(LoccStatus status);

struct CapacityReport {
  double classical_threshold = 0.0;
  double chi_single = 0.0;
  double chi_glob = 0.0;
  std::optional<double> b_locc;
  std::optional<double> chi_local;
  bool is_g_dc = false;
  std::optional<bool> is_lo_dc;
  std::optional<bool> is_locc_dc_excluded;
  LoccStatus locc_status = LoccStatus::unknown;
};

/// All capacities and bounds for one state. The two-receiver entries require
/// an assignment and exactly two receivers. LOCC dense-codeability is
/// three-valued: the bounds can prove it (via chi_local) or exclude it (via
/// b_locc) but often decide nothing.
CapacityReport capacity_report(const DensityState& s,
                               const std::optional<Assignment>& assignment = std::nullopt,
                               double eps = kDcEps);

}  // namespace qdc
