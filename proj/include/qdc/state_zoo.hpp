#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qdc/dense_coding.hpp"

namespace qdc::zoo {

// Named example states. Senders are labeled A1..Ak and receivers B1..Bm in
// party order throughout.

/// p |psi-><psi-| + (1-p) I/4 on 2x2, sender A1, receiver B1.
DensityState werner(double p);  // throws bad_parameter for p outside [0,1]

/// Mixing parameter at which the Werner state stops being dense-codeable:
/// the root of S(werner(p)) = 1, by bisection on [0.5, 0.95] to 1e-6.
double werner_dc_threshold();

/// (|0...0> + |1...1>)/sqrt(2) on n >= 3 qubits. Default roles: first half
/// senders, second half receivers (n odd: all but the last are senders).
DensityState ghz(int n, const std::optional<std::vector<Role>>& roles = std::nullopt);

/// Equal superposition of single-excitation kets on n >= 3 qubits; same
/// default roles as ghz.
DensityState w(int n, const std::optional<std::vector<Role>>& roles = std::nullopt);

/// |psi-> on 2x2, sender A1, receiver B1.
DensityState singlet();

/// psi-(A1,B1) x psi-(A2,B2), party order A1 B1 A2 B2.
DensityState two_singlets();

/// The four-qubit pure state (|0000> + |0101> + |1000> + |1110>)/2 with
/// parties 1,2 senders and 3,4 receivers (A1->B1, A2->B2 by default).
DensityState frank4();

/// Normalized projector onto the orthocomplement of the five-state "tiles"
/// unextendible product basis in 3x3; PPT yet entangled by construction.
DensityState tiles33();

/// v * base + (1-v) * I/D on the base state's layout.
DensityState noisy(const DensityState& base, double visibility);

struct NamedStateSpec {
  std::string name;  // werner | ghz | w | singlet | two_singlets | frank4 | tiles33 | noisy
  std::optional<double> p;
  std::optional<int> n;
  std::optional<double> visibility;
  std::shared_ptr<NamedStateSpec> base;  // for noisy
  std::optional<std::vector<Role>> roles;
};

struct ZooEntry {
  DensityState state;
  std::optional<Assignment> default_assignment;  // present when exactly two receivers
  std::optional<std::string> entanglement_note;  // construction-level certificate, if any
};

ZooEntry make(const NamedStateSpec& spec);  // throws bad_parameter
std::vector<std::string> names();

}  // namespace qdc::zoo
