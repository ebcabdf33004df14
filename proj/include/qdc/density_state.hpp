#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdc/matrix_ops.hpp"
#include "qdc/party_layout.hpp"

namespace qdc {

struct ValidationReport {
  bool square = false;
  bool finite = false;
  bool hermitian = false;
  Complex trace{0.0, 0.0};
  double min_eigenvalue = 0.0;

  bool passed() const;
  std::string summary() const;
};

ValidationReport validate(const PartyLayout& layout, const Matrix& rho);

/// Density matrix bound to a party layout. Construction enforces the state
/// invariants (Hermitian, unit trace, positive semidefinite); instances are
/// immutable afterwards, so concurrent reads are safe.
class DensityState {
 public:
  DensityState(PartyLayout layout, Matrix rho);  // throws dimension_mismatch / validation_failed

  const PartyLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return rho_; }
  long dim() const { return rho_.rows(); }

 private:
  PartyLayout layout_;
  Matrix rho_;
};

ValidationReport validate(const DensityState& s);

/// Normalized projector onto the given amplitude vector.
DensityState from_pure(const Vector& amplitudes, PartyLayout layout);

/// Reduced state on the kept parties, in their original relative order.
DensityState partial_trace(const DensityState& s, const std::vector<std::string>& keep);

/// Transpose of the given parties' indices. Returns a raw matrix because the
/// result may be non-PSD.
Matrix partial_transpose(const DensityState& s, const std::vector<std::string>& transposed);
Matrix partial_transpose(const PartyLayout& layout, const Matrix& rho,
                         const std::vector<std::string>& transposed);

/// Conjugation by a product of local unitaries; parties absent from the map
/// get the identity.
DensityState apply_local_unitaries(const DensityState& s, const std::map<std::string, Matrix>& ops);

/// Same state with the parties permuted into the given label order.
DensityState reorder_parties(const DensityState& s, const std::vector<std::string>& order);

double purity(const DensityState& s);  // tr(rho^2)

}  // namespace qdc
