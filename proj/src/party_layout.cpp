#include "qdc/party_layout.hpp"

#include <set>

namespace qdc {

PartyLayout::PartyLayout(std::vector<Party> parties) : parties_(std::move(parties)) {
  std::set<std::string> seen;
  for (const Party& p : parties_) {
    if (p.label.empty()) throw Error(ErrorCode::bad_parameter, "empty party label");
    if (!seen.insert(p.label).second) {
      throw Error(ErrorCode::bad_parameter, "duplicate party label '" + p.label + "'");
    }
    if (p.dim < 2) {
      throw Error(ErrorCode::invalid_dimension,
                  "party '" + p.label + "' has dimension " + std::to_string(p.dim) + " (< 2)");
    }
    total_dim_ *= p.dim;
  }
}

bool PartyLayout::has_label(std::string_view label) const {
  for (const Party& p : parties_)
    if (p.label == label) return true;
  return false;
}

int PartyLayout::index_of(std::string_view label) const {
  for (size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].label == label) return static_cast<int>(i);
  throw Error(ErrorCode::unknown_label, "no party labeled '" + std::string(label) + "'");
}

std::vector<int> PartyLayout::sender_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].role == Role::sender) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> PartyLayout::receiver_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < parties_.size(); ++i)
    if (parties_[i].role == Role::receiver) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<std::string> PartyLayout::sender_labels() const {
  std::vector<std::string> out;
  for (const Party& p : parties_)
    if (p.role == Role::sender) out.push_back(p.label);
  return out;
}

std::vector<std::string> PartyLayout::receiver_labels() const {
  std::vector<std::string> out;
  for (const Party& p : parties_)
    if (p.role == Role::receiver) out.push_back(p.label);
  return out;
}

std::vector<std::string> PartyLayout::labels() const {
  std::vector<std::string> out;
  for (const Party& p : parties_) out.push_back(p.label);
  return out;
}

long PartyLayout::flat_index(std::span<const int> digits) const {
  if (digits.size() != parties_.size()) {
    throw Error(ErrorCode::dimension_mismatch, "digit count does not match party count");
  }
  long flat = 0;
  for (size_t k = 0; k < parties_.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= parties_[k].dim) {
      throw Error(ErrorCode::dimension_mismatch, "digit out of range for party " + parties_[k].label);
    }
    flat = flat * parties_[k].dim + digits[k];
  }
  return flat;
}

std::vector<int> PartyLayout::digits_of(long flat) const {
  std::vector<int> digits(parties_.size(), 0);
  for (size_t k = parties_.size(); k-- > 0;) {
    digits[k] = static_cast<int>(flat % parties_[k].dim);
    flat /= parties_[k].dim;
  }
  return digits;
}

bool PartyLayout::operator==(const PartyLayout& other) const {
  if (parties_.size() != other.parties_.size()) return false;
  for (size_t i = 0; i < parties_.size(); ++i) {
    const Party& a = parties_[i];
    const Party& b = other.parties_[i];
    if (a.label != b.label || a.dim != b.dim || a.role != b.role) return false;
  }
  return true;
}

}  // namespace qdc
