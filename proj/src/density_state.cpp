#include "qdc/density_state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace qdc {

namespace {

// stride[k] = prod_{l>k} d_l, so flat = sum_k digit_k * stride[k].
std::vector<long> strides_of(const PartyLayout& layout) {
  const int n = layout.party_count();
  std::vector<long> strides(static_cast<size_t>(n), 1);
  for (int k = n - 2; k >= 0; --k) {
    strides[static_cast<size_t>(k)] = strides[static_cast<size_t>(k + 1)] * layout.party(k + 1).dim;
  }
  return strides;
}

// Ascending party indices for a label set; rejects duplicates.
std::vector<int> indices_for(const PartyLayout& layout, const std::vector<std::string>& labels) {
  std::set<int> seen;
  for (const std::string& label : labels) {
    const int idx = layout.index_of(label);
    if (!seen.insert(idx).second) {
      throw Error(ErrorCode::bad_parameter, "label '" + label + "' given twice");
    }
  }
  return {seen.begin(), seen.end()};
}

// Flat offsets of all digit combinations of the given parties, the leftmost
// party varying slowest.
std::vector<long> offsets_for(const PartyLayout& layout, const std::vector<int>& parties,
                              const std::vector<long>& strides) {
  std::vector<long> offsets{0};
  for (int p : parties) {
    const int d = layout.party(p).dim;
    std::vector<long> next;
    next.reserve(offsets.size() * static_cast<size_t>(d));
    for (long base : offsets)
      for (int j = 0; j < d; ++j) next.push_back(base + j * strides[static_cast<size_t>(p)]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

bool ValidationReport::passed() const {
  return square && finite && hermitian && std::abs(trace - Complex(1.0, 0.0)) <= kTraceTol &&
         min_eigenvalue >= -kPsdTol;
}

std::string ValidationReport::summary() const {
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "square=%s finite=%s hermitian=%s trace=%.12f%+.12fi min_eigenvalue=%.3e",
                square ? "yes" : "no", finite ? "yes" : "no", hermitian ? "yes" : "no",
                trace.real(), trace.imag(), min_eigenvalue);
  return buf;
}

ValidationReport validate(const PartyLayout& layout, const Matrix& rho) {
  ValidationReport report;
  report.square = rho.rows() == rho.cols() && rho.rows() == layout.total_dim();
  report.finite = rho.allFinite();
  if (!report.square || !report.finite) return report;
  report.trace = rho.trace();
  report.hermitian = is_hermitian(rho, kHermitianTol);
  if (!report.hermitian) return report;
  report.min_eigenvalue = is_psd(rho, kPsdTol).min_eigenvalue;
  return report;
}

ValidationReport validate(const DensityState& s) { return validate(s.layout(), s.matrix()); }

DensityState::DensityState(PartyLayout layout, Matrix rho)
    : layout_(std::move(layout)), rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() != layout_.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "matrix is " + std::to_string(rho_.rows()) + "x" + std::to_string(rho_.cols()) +
                    " but the layout has total dimension " + std::to_string(layout_.total_dim()));
  }
  const ValidationReport report = validate(layout_, rho_);
  if (!report.passed()) {
    throw Error(ErrorCode::validation_failed, report.summary());
  }
}

DensityState from_pure(const Vector& amplitudes, PartyLayout layout) {
  if (amplitudes.size() != layout.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch,
                "amplitude vector has length " + std::to_string(amplitudes.size()) +
                    " but the layout has total dimension " + std::to_string(layout.total_dim()));
  }
  const double norm = amplitudes.norm();
  if (norm <= 1e-12) throw Error(ErrorCode::zero_vector, "amplitude vector has zero norm");
  const Vector v = amplitudes / norm;
  return DensityState(std::move(layout), v * v.adjoint());
}

DensityState partial_trace(const DensityState& s, const std::vector<std::string>& keep) {
  if (keep.empty()) throw Error(ErrorCode::empty_keep_set, "keep set must not be empty");
  const PartyLayout& layout = s.layout();
  const std::vector<int> kept = indices_for(layout, keep);
  std::vector<int> traced;
  for (int i = 0; i < layout.party_count(); ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }
  const std::vector<long> strides = strides_of(layout);
  const std::vector<long> kept_off = offsets_for(layout, kept, strides);
  const std::vector<long> traced_off = offsets_for(layout, traced, strides);

  const long dk = static_cast<long>(kept_off.size());
  const Matrix& rho = s.matrix();
  Matrix out = Matrix::Zero(dk, dk);
  for (long i = 0; i < dk; ++i) {
    for (long j = 0; j < dk; ++j) {
      Complex sum{0.0, 0.0};
      for (long t : traced_off) {
        sum += rho(kept_off[static_cast<size_t>(i)] + t, kept_off[static_cast<size_t>(j)] + t);
      }
      out(i, j) = sum;
    }
  }

  std::vector<Party> parties;
  for (int idx : kept) parties.push_back(layout.party(idx));
  return {PartyLayout(std::move(parties)), std::move(out)};
}

Matrix partial_transpose(const DensityState& s, const std::vector<std::string>& transposed) {
  return partial_transpose(s.layout(), s.matrix(), transposed);
}

Matrix partial_transpose(const PartyLayout& layout, const Matrix& rho,
                         const std::vector<std::string>& transposed) {
  if (rho.rows() != rho.cols() || rho.rows() != layout.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix does not match the layout dimension");
  }
  if (transposed.empty()) {
    throw Error(ErrorCode::invalid_subset, "transpose set must not be empty");
  }
  const std::vector<int> tset = indices_for(layout, transposed);
  if (static_cast<int>(tset.size()) == layout.party_count()) {
    throw Error(ErrorCode::invalid_subset, "transpose set must be a proper subset of the parties");
  }

  const long d = layout.total_dim();
  Matrix out(d, d);
  for (long r = 0; r < d; ++r) {
    const std::vector<int> rd = layout.digits_of(r);
    for (long c = 0; c < d; ++c) {
      std::vector<int> rd2 = rd;
      std::vector<int> cd2 = layout.digits_of(c);
      for (int p : tset) std::swap(rd2[static_cast<size_t>(p)], cd2[static_cast<size_t>(p)]);
      out(layout.flat_index(rd2), layout.flat_index(cd2)) = rho(r, c);
    }
  }
  return out;
}

DensityState apply_local_unitaries(const DensityState& s, const std::map<std::string, Matrix>& ops) {
  const PartyLayout& layout = s.layout();
  for (const auto& [label, u] : ops) {
    const int idx = layout.index_of(label);
    const int d = layout.party(idx).dim;
    if (u.rows() != d || u.cols() != d) {
      throw Error(ErrorCode::dimension_mismatch,
                  "operator for '" + label + "' is " + std::to_string(u.rows()) + "x" +
                      std::to_string(u.cols()) + " but the party has dimension " + std::to_string(d));
    }
    if (!is_unitary(u, kUnitaryTol)) {
      throw Error(ErrorCode::not_unitary, "operator for '" + label + "' is not unitary within tolerance");
    }
  }

  Matrix full = Matrix::Identity(1, 1);
  for (const Party& p : layout.parties()) {
    const auto it = ops.find(p.label);
    full = (it == ops.end()) ? tensor(full, identity(p.dim)) : tensor(full, it->second);
  }
  return {layout, full * s.matrix() * full.adjoint()};
}

DensityState reorder_parties(const DensityState& s, const std::vector<std::string>& order) {
  const PartyLayout& layout = s.layout();
  if (static_cast<int>(order.size()) != layout.party_count()) {
    throw Error(ErrorCode::invalid_subset, "order must list every party exactly once");
  }
  std::vector<int> src;  // src[k] = original index of new position k
  std::set<int> seen;
  for (const std::string& label : order) {
    const int idx = layout.index_of(label);
    if (!seen.insert(idx).second) {
      throw Error(ErrorCode::invalid_subset, "duplicate label '" + label + "' in order");
    }
    src.push_back(idx);
  }

  std::vector<Party> parties;
  for (int idx : src) parties.push_back(layout.party(idx));
  PartyLayout new_layout(std::move(parties));

  const long d = layout.total_dim();
  std::vector<long> perm(static_cast<size_t>(d));
  std::vector<int> nd(src.size());
  for (long r = 0; r < d; ++r) {
    const std::vector<int> rd = layout.digits_of(r);
    for (size_t k = 0; k < src.size(); ++k) nd[k] = rd[static_cast<size_t>(src[k])];
    perm[static_cast<size_t>(r)] = new_layout.flat_index(nd);
  }

  const Matrix& rho = s.matrix();
  Matrix out(d, d);
  for (long r = 0; r < d; ++r)
    for (long c = 0; c < d; ++c)
      out(perm[static_cast<size_t>(r)], perm[static_cast<size_t>(c)]) = rho(r, c);
  return {std::move(new_layout), std::move(out)};
}

double purity(const DensityState& s) { return (s.matrix() * s.matrix()).trace().real(); }

}  // namespace qdc
