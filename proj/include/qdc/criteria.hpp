#pragma once

#include <optional>

#include "qdc/dense_coding.hpp"

namespace qdc {

/// Bipartition of the parties; `first` and `second` together must cover every
/// label exactly once.
struct Cut {
  std::vector<std::string> first;
  std::vector<std::string> second;
};

/// The senders : receivers bipartition.
Cut sender_receiver_cut(const PartyLayout& layout);  // throws invalid_cut when a side is empty

struct PptResult {
  bool ppt = false;
  double min_eigenvalue = 0.0;
};

/// Positive partial transpose test across the cut.
PptResult ppt_test(const DensityState& s, const Cut& cut);

struct ReductionResult {
  bool violated = false;
  double min_eig_first = 0.0;   // min eig of rho^A x I - rho
  double min_eig_second = 0.0;  // min eig of I x rho^B - rho
};

/// Reduction criterion rho^A x I >= rho and I x rho^B >= rho; violation
/// certifies distillability across the cut.
ReductionResult reduction_criterion(const DensityState& s, const Cut& cut);

struct EntropicDcResult {
  bool dense_codeable = false;
  double margin_bits = 0.0;  // S(second-side marginal) - S(rho)
};

/// S(rho^B) > S(rho) test: equivalent to the single-receiver capacity
/// exceeding the classical threshold across the senders : receivers cut.
EntropicDcResult entropic_dc_test(const DensityState& s, const Cut& cut, double eps = kDcEps);

enum class Shell {
  separable_or_pbe,
  pbe_candidate,
  npt_undetermined,
  distillable_non_dc,
  g_dc,
  locc_dc_excluded,
  lo_dc,
};
const char* to_string(Shell shell);

struct ShellVerdict {
  PptResult ppt;
  ReductionResult reduction;
  EntropicDcResult entropic;
  Shell shell = Shell::npt_undetermined;
  LoccStatus locc_status = LoccStatus::unknown;
  std::vector<std::string> notes;
};

/// Shell classification across the cut. Separability is never certified and
/// NPT bound entanglement is never claimed; PPT non-DC states stay
/// "SeparableOrPBE" unless a construction note certifies entanglement, and
/// NPT states that pass the reduction criterion stay "NPT-Undetermined".
/// With two receivers and an assignment, a DC verdict is refined to
/// "LO-DC" / "LOCC-DC-Excluded" when the bounds decide it.
ShellVerdict classify(const DensityState& s, const Cut& cut,
                      const std::optional<Assignment>& assignment = std::nullopt,
                      double eps = kDcEps,
                      const std::optional<std::string>& entangled_certificate = std::nullopt);

}  // namespace qdc
