#include "qdc/state_zoo.hpp"

#include <cmath>

namespace qdc::zoo {

namespace {

// Senders become A1..Ak and receivers B1..Bm, numbered in party order.
PartyLayout role_layout(const std::vector<int>& dims, const std::vector<Role>& roles) {
  if (dims.size() != roles.size()) {
    throw Error(ErrorCode::bad_parameter, "dims and roles differ in length");
  }
  std::vector<Party> parties;
  int senders = 0, receivers = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    const std::string label = (roles[i] == Role::sender) ? "A" + std::to_string(++senders)
                                                         : "B" + std::to_string(++receivers);
    parties.push_back({label, dims[i], roles[i]});
  }
  return PartyLayout(std::move(parties));
}

std::vector<Role> default_roles(int n) {
  // First half senders, rest receivers; odd n keeps a single receiver.
  std::vector<Role> roles(static_cast<size_t>(n), Role::receiver);
  const int senders = (n % 2 == 0) ? n / 2 : n - 1;
  for (int i = 0; i < senders; ++i) roles[static_cast<size_t>(i)] = Role::sender;
  return roles;
}

Vector singlet_amplitudes() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

Matrix singlet_projector() {
  const Vector v = singlet_amplitudes();
  return v * v.adjoint();
}

std::vector<Role> qubit_roles(int n, const std::optional<std::vector<Role>>& roles) {
  if (!roles) return default_roles(n);
  if (static_cast<int>(roles->size()) != n) {
    throw Error(ErrorCode::bad_parameter, "role list does not match the party count");
  }
  return *roles;
}

Assignment round_robin_assignment(const PartyLayout& layout) {
  const auto senders = layout.sender_labels();
  const auto receivers = layout.receiver_labels();
  Assignment assignment;
  for (size_t i = 0; i < senders.size(); ++i) {
    assignment[senders[i]] = receivers[i % receivers.size()];
  }
  return assignment;
}

}  // namespace

DensityState werner(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(ErrorCode::bad_parameter, "werner mixing parameter must lie in [0, 1]");
  }
  const Matrix rho = p * singlet_projector() + (1.0 - p) * identity(4) / 4.0;
  return {role_layout({2, 2}, {Role::sender, Role::receiver}), rho};
}

double werner_dc_threshold() {
  // S(werner(p)) is monotone decreasing on the bracket and crosses 1 inside it.
  double lo = 0.5, hi = 0.95;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (von_neumann_entropy(werner(mid)) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

DensityState ghz(int n, const std::optional<std::vector<Role>>& roles) {
  if (n < 3) throw Error(ErrorCode::bad_parameter, "ghz requires at least 3 parties");
  const long dim = 1L << n;
  Vector v = Vector::Zero(dim);
  v(0) = v(dim - 1) = 1.0 / std::sqrt(2.0);
  return from_pure(v, role_layout(std::vector<int>(static_cast<size_t>(n), 2), qubit_roles(n, roles)));
}

DensityState w(int n, const std::optional<std::vector<Role>>& roles) {
  if (n < 3) throw Error(ErrorCode::bad_parameter, "w requires at least 3 parties");
  const long dim = 1L << n;
  Vector v = Vector::Zero(dim);
  for (int k = 0; k < n; ++k) v(1L << k) = 1.0 / std::sqrt(static_cast<double>(n));
  return from_pure(v, role_layout(std::vector<int>(static_cast<size_t>(n), 2), qubit_roles(n, roles)));
}

DensityState singlet() {
  return from_pure(singlet_amplitudes(), role_layout({2, 2}, {Role::sender, Role::receiver}));
}

DensityState two_singlets() {
  const Matrix rho = tensor(singlet_projector(), singlet_projector());
  return {role_layout({2, 2, 2, 2}, {Role::sender, Role::receiver, Role::sender, Role::receiver}),
          rho};
}

DensityState frank4() {
  Vector v = Vector::Zero(16);
  v(0b0000) = v(0b0101) = v(0b1000) = v(0b1110) = 0.5;
  return from_pure(v, role_layout({2, 2, 2, 2},
                                  {Role::sender, Role::sender, Role::receiver, Role::receiver}));
}

DensityState tiles33() {
  auto basis = [](int j) {
    Vector e = Vector::Zero(3);
    e(j) = 1.0;
    return e;
  };
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  std::vector<Vector> tiles;
  tiles.push_back(tensor(basis(0), Vector((basis(0) - basis(1)) / r2)));
  tiles.push_back(tensor(basis(2), Vector((basis(1) - basis(2)) / r2)));
  tiles.push_back(tensor(Vector((basis(0) - basis(1)) / r2), basis(2)));
  tiles.push_back(tensor(Vector((basis(1) - basis(2)) / r2), basis(0)));
  tiles.push_back(tensor(Vector((basis(0) + basis(1) + basis(2)) / r3),
                         Vector((basis(0) + basis(1) + basis(2)) / r3)));
  Matrix projector = Matrix::Zero(9, 9);
  for (const Vector& t : tiles) projector += t * t.adjoint();
  const Matrix rho = (identity(9) - projector) / 4.0;
  return {role_layout({3, 3}, {Role::sender, Role::receiver}), rho};
}

DensityState noisy(const DensityState& base, double visibility) {
  if (visibility < 0.0 || visibility > 1.0) {
    throw Error(ErrorCode::bad_parameter, "visibility must lie in [0, 1]");
  }
  const long dim = base.dim();
  const Matrix rho = visibility * base.matrix() + (1.0 - visibility) * identity(dim) / dim;
  return {base.layout(), rho};
}

ZooEntry make(const NamedStateSpec& spec) {
  ZooEntry entry = [&]() -> ZooEntry {
    if (spec.name == "werner") {
      if (!spec.p) throw Error(ErrorCode::bad_parameter, "werner requires parameter p");
      return {werner(*spec.p), std::nullopt, std::nullopt};
    }
    if (spec.name == "ghz") return {ghz(spec.n.value_or(4), spec.roles), std::nullopt, std::nullopt};
    if (spec.name == "w") return {w(spec.n.value_or(4), spec.roles), std::nullopt, std::nullopt};
    if (spec.name == "singlet") return {singlet(), std::nullopt, std::nullopt};
    if (spec.name == "two_singlets") return {two_singlets(), std::nullopt, std::nullopt};
    if (spec.name == "frank4") return {frank4(), std::nullopt, std::nullopt};
    if (spec.name == "tiles33") {
      return {tiles33(), std::nullopt,
              "entangled by construction (unextendible product basis complement)"};
    }
    if (spec.name == "noisy") {
      if (!spec.base) throw Error(ErrorCode::bad_parameter, "noisy requires a base state");
      if (!spec.visibility) throw Error(ErrorCode::bad_parameter, "noisy requires a visibility");
      ZooEntry base = make(*spec.base);
      return {noisy(base.state, *spec.visibility), base.default_assignment,
              base.entanglement_note};
    }
    throw Error(ErrorCode::bad_parameter, "unknown zoo state '" + spec.name + "'");
  }();
  if (!entry.default_assignment && entry.state.layout().receiver_indices().size() == 2) {
    entry.default_assignment = round_robin_assignment(entry.state.layout());
  }
  return entry;
}

std::vector<std::string> names() {
  return {"werner", "ghz", "w", "singlet", "two_singlets", "frank4", "tiles33", "noisy"};
}

}  // namespace qdc::zoo
