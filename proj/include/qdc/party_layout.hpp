#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/error.hpp"

namespace qdc {

enum class Role { sender, receiver };

struct Party {
  std::string label;
  int dim = 0;
  Role role = Role::sender;
};

/// Ordered list of parties with local dimensions and sender/receiver roles.
/// The leftmost party is the most significant tensor factor: the basis ket
/// |j1 j2 ... jN> maps to the flat index sum_k j_k * prod_{l>k} d_l.
class PartyLayout {
 public:
  PartyLayout() = default;
  explicit PartyLayout(std::vector<Party> parties);

  int party_count() const { return static_cast<int>(parties_.size()); }
  long total_dim() const { return total_dim_; }
  const Party& party(int i) const { return parties_.at(static_cast<size_t>(i)); }
  const std::vector<Party>& parties() const { return parties_; }

  bool has_label(std::string_view label) const;
  int index_of(std::string_view label) const;  // throws unknown_label

  std::vector<int> sender_indices() const;
  std::vector<int> receiver_indices() const;
  std::vector<std::string> sender_labels() const;
  std::vector<std::string> receiver_labels() const;
  std::vector<std::string> labels() const;

  long flat_index(std::span<const int> digits) const;
  std::vector<int> digits_of(long flat) const;

  bool operator==(const PartyLayout& other) const;

 private:
  std::vector<Party> parties_;
  long total_dim_ = 1;
};

}  // namespace qdc
