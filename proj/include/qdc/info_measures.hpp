#pragma once

#include <utility>
#include <vector>

#include "qdc/density_state.hpp"

namespace qdc {

inline constexpr double kProbabilityTol = 1e-10;
inline constexpr double kSupportCutoff = 1e-12;  // eigenvalues below this count as kernel
inline constexpr double kSupportLeakTol = 1e-10; // weight outside support that still passes

/// Probability-weighted states on one shared layout.
class Ensemble {
 public:
  explicit Ensemble(std::vector<std::pair<double, DensityState>> members);  // throws invalid_ensemble

  const std::vector<std::pair<double, DensityState>>& members() const { return members_; }
  size_t size() const { return members_.size(); }
  const PartyLayout& layout() const;

  DensityState average() const;

 private:
  std::vector<std::pair<double, DensityState>> members_;
};

/// -tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityState& s);

/// tr(a log2 a - a log2 b), in bits. Returns +infinity when a's support
/// leaks outside b's support by more than kSupportLeakTol.
double relative_entropy(const DensityState& a, const DensityState& b);

/// S(avg) - sum_i p_i S(rho_i), in bits.
double holevo(const Ensemble& e);

}  // namespace qdc
