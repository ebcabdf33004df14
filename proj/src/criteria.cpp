#include "qdc/criteria.hpp"

#include <algorithm>
#include <set>

namespace qdc {

namespace {

void check_cut(const PartyLayout& layout, const Cut& cut) {
  if (cut.first.empty() || cut.second.empty()) {
    throw Error(ErrorCode::invalid_cut, "both sides of the cut must be non-empty");
  }
  std::set<std::string> seen;
  for (const auto* side : {&cut.first, &cut.second}) {
    for (const std::string& label : *side) {
      layout.index_of(label);  // throws unknown_label
      if (!seen.insert(label).second) {
        throw Error(ErrorCode::invalid_cut, "label '" + label + "' appears twice in the cut");
      }
    }
  }
  if (static_cast<int>(seen.size()) != layout.party_count()) {
    throw Error(ErrorCode::invalid_cut, "cut does not cover every party");
  }
}

}  // namespace

Cut sender_receiver_cut(const PartyLayout& layout) {
  Cut cut{layout.sender_labels(), layout.receiver_labels()};
  if (cut.first.empty() || cut.second.empty()) {
    throw Error(ErrorCode::invalid_cut, "layout needs at least one sender and one receiver");
  }
  return cut;
}

PptResult ppt_test(const DensityState& s, const Cut& cut) {
  check_cut(s.layout(), cut);
  const PsdCheck check = is_psd(partial_transpose(s, cut.second), kPsdTol);
  return {check.psd, check.min_eigenvalue};
}

ReductionResult reduction_criterion(const DensityState& s, const Cut& cut) {
  check_cut(s.layout(), cut);
  std::vector<std::string> order = cut.first;
  order.insert(order.end(), cut.second.begin(), cut.second.end());
  const DensityState grouped = reorder_parties(s, order);

  const Matrix rho_a = partial_trace(grouped, cut.first).matrix();
  const Matrix rho_b = partial_trace(grouped, cut.second).matrix();
  const Matrix op_first = tensor(rho_a, identity(rho_b.rows())) - grouped.matrix();
  const Matrix op_second = tensor(identity(rho_a.rows()), rho_b) - grouped.matrix();

  ReductionResult result;
  result.min_eig_first = is_psd(op_first, kPsdTol).min_eigenvalue;
  result.min_eig_second = is_psd(op_second, kPsdTol).min_eigenvalue;
  result.violated = result.min_eig_first < -kPsdTol || result.min_eig_second < -kPsdTol;
  return result;
}

EntropicDcResult entropic_dc_test(const DensityState& s, const Cut& cut, double eps) {
  check_cut(s.layout(), cut);
  const double margin =
      von_neumann_entropy(partial_trace(s, cut.second)) - von_neumann_entropy(s);
  return {margin > eps, margin};
}

const char* to_string(Shell shell) {
  switch (shell) {
    case Shell::separable_or_pbe: return "SeparableOrPBE";
    case Shell::pbe_candidate: return "PBE-candidate";
    case Shell::npt_undetermined: return "NPT-Undetermined";
    case Shell::distillable_non_dc: return "Distillable-nonDC";
    case Shell::g_dc: return "G-DC";
    case Shell::locc_dc_excluded: return "LOCC-DC-Excluded";
    case Shell::lo_dc: return "LO-DC";
  }
  return "NPT-Undetermined";
}

ShellVerdict classify(const DensityState& s, const Cut& cut,
                      const std::optional<Assignment>& assignment, double eps,
                      const std::optional<std::string>& entangled_certificate) {
  ShellVerdict verdict;
  verdict.ppt = ppt_test(s, cut);
  verdict.reduction = reduction_criterion(s, cut);
  verdict.entropic = entropic_dc_test(s, cut, eps);

  if (verdict.entropic.dense_codeable) {
    if (verdict.ppt.ppt) {
      // Never observed for a genuine bipartite cut; surfaced, not asserted.
      verdict.shell = Shell::pbe_candidate;
      verdict.notes.push_back("PPT across the cut yet entropically dense-codeable");
    } else {
      verdict.shell = Shell::g_dc;
      if (assignment && s.layout().receiver_indices().size() == 2) {
        const CapacityReport report = capacity_report(s, assignment, eps);
        verdict.locc_status = report.locc_status;
        if (report.locc_status == LoccStatus::proven) {
          verdict.shell = Shell::lo_dc;
        } else if (report.locc_status == LoccStatus::excluded) {
          verdict.shell = Shell::locc_dc_excluded;
        }
      }
    }
  } else if (verdict.reduction.violated) {
    verdict.shell = Shell::distillable_non_dc;
  } else if (verdict.ppt.ppt) {
    verdict.shell = Shell::separable_or_pbe;
    if (entangled_certificate) {
      verdict.notes.push_back(*entangled_certificate + ", hence PBE");
    } else {
      verdict.notes.push_back("separability is not certified");
    }
  } else {
    verdict.shell = Shell::npt_undetermined;
    verdict.notes.push_back("NPT but not certified distillable across this cut");
  }
  return verdict;
}

}  // namespace qdc
