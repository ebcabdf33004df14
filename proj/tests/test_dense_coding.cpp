#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdc/dense_coding.hpp"
#include "qdc/random_states.hpp"
#include "qdc/state_zoo.hpp"
#include "test_support.hpp"

using namespace qdc;
using qdc::test::near;

namespace {

Assignment natural_assignment() { return {{"A1", "B1"}, {"A2", "B2"}}; }

DensityState ghz_with_roles(const std::vector<Role>& roles) { return zoo::ghz(4, roles); }

DensityState product_four_qubits() {
  Vector v = Vector::Zero(16);
  v(0) = 1.0;
  return from_pure(v, PartyLayout({{"A1", 2, Role::sender},
                                   {"A2", 2, Role::sender},
                                   {"B1", 2, Role::receiver},
                                   {"B2", 2, Role::receiver}}));
}

}  // namespace

TEST_CASE("identity scheme reproduces the input state") {
  const DensityState bell = qdc::test::bell_phi_plus();
  const Ensemble e = encode(bell, identity_scheme(bell.layout()));
  REQUIRE(e.size() == 1);
  CHECK(near(e.members()[0].first, 1.0, 1e-15));
  CHECK(max_abs(e.members()[0].second.matrix() - bell.matrix()) < 1e-14);
}

TEST_CASE("Weyl encoding of the Bell state yields four orthogonal projectors") {
  const DensityState bell = qdc::test::bell_phi_plus();
  const Ensemble e = encode(bell, weyl_scheme(bell.layout()));
  REQUIRE(e.size() == 4);
  for (const auto& [p, state] : e.members()) {
    CHECK(near(p, 0.25, 1e-15));
    CHECK(near(purity(state), 1.0, 1e-10));
  }
  for (size_t a = 0; a < 4; ++a) {
    for (size_t b = a + 1; b < 4; ++b) {
      const Complex overlap =
          (e.members()[a].second.matrix() * e.members()[b].second.matrix()).trace();
      CHECK(std::abs(overlap) < 1e-12);
    }
  }
}

TEST_CASE("two senders with two-element ensembles give four members") {
  Rng rng(5);
  const DensityState s = random_state(PartyLayout({{"A1", 2, Role::sender},
                                                   {"A2", 2, Role::sender},
                                                   {"B1", 2, Role::receiver}}),
                                      rng);
  EncodingScheme scheme;
  scheme["A1"] = {{0.25, 0.75}, {identity(2), qdc::test::pauli_x()}};
  scheme["A2"] = {{0.4, 0.6}, {identity(2), qdc::test::pauli_z()}};
  const Ensemble e = encode(s, scheme);
  REQUIRE(e.size() == 4);
  double sum = 0.0;
  for (const auto& [p, state] : e.members()) sum += p;
  CHECK(near(sum, 1.0, 1e-12));
  CHECK(near(e.members()[0].first, 0.1, 1e-12));   // 0.25 * 0.4
  CHECK(near(e.members()[3].first, 0.45, 1e-12));  // 0.75 * 0.6
}

TEST_CASE("encode rejects schemes that do not match the senders") {
  const DensityState bell = qdc::test::bell_phi_plus();
  EncodingScheme wrong;
  wrong["A2"] = {{1.0}, {identity(2)}};
  try {
    encode(bell, wrong);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::label_mismatch);
  }
  EncodingScheme bad_probs;
  bad_probs["A1"] = {{0.5, 0.2}, {identity(2), qdc::test::pauli_x()}};
  CHECK_THROWS_AS(encode(bell, bad_probs), Error);
}

TEST_CASE("dense coding a Bell pair transmits two bits") {
  const DensityState bell = qdc::test::bell_phi_plus();
  CHECK(near(ensemble_capacity(bell, weyl_scheme(bell.layout())), 2.0, 1e-12));
  CHECK(near(capacity_single_receiver(bell), 2.0, 1e-12));
}

TEST_CASE("a product pure state gives no advantage over one qubit") {
  Rng rng(7);
  const Matrix rho = tensor(random_density_matrix(2, 1, rng), random_density_matrix(2, 1, rng));
  const DensityState s(qdc::test::bipartite(), rho);
  CHECK(ensemble_capacity(s, weyl_scheme(s.layout())) <= 1.0 + 1e-9);
  CHECK(capacity_single_receiver(s) <= 1.0 + 1e-9);
}

TEST_CASE("Werner(0.9) capacity matches the entropy formula") {
  const DensityState s = zoo::werner(0.9);
  const double expected = 1.496816268319416;  // 1 + S(I/2) - S(werner(0.9))
  CHECK(near(ensemble_capacity(s, weyl_scheme(s.layout())), expected, 1e-9));
  CHECK(near(capacity_single_receiver(s), expected, 1e-12));
}

TEST_CASE("the maximally mixed state conveys nothing through unitary encoding") {
  // every encoded copy of I/4 is again I/4, so the raw capacity value is
  // 1 + 1 - 2 = 0, one bit below the classical threshold
  const DensityState s(qdc::test::bipartite(), identity(4) / 4.0);
  CHECK(near(capacity_single_receiver(s), 0.0, 1e-12));
  CHECK(near(ensemble_capacity(s, weyl_scheme(s.layout())), 0.0, 1e-12));
  CHECK_FALSE(capacity_report(s).is_g_dc);
}

TEST_CASE("GHZ4 with three senders reaches four bits") {
  const DensityState s = ghz_with_roles({Role::sender, Role::sender, Role::sender, Role::receiver});
  CHECK(near(capacity_single_receiver(s), 4.0, 1e-10));
}

TEST_CASE("capacity preconditions") {
  Rng rng(9);
  const DensityState no_sender =
      random_state(PartyLayout({{"B1", 2, Role::receiver}, {"B2", 2, Role::receiver}}), rng);
  try {
    capacity_single_receiver(no_sender);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_sender);
  }
  const DensityState no_receiver =
      random_state(PartyLayout({{"A1", 2, Role::sender}, {"A2", 2, Role::sender}}), rng);
  try {
    capacity_single_receiver(no_receiver);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_receiver);
  }
  CHECK_THROWS_AS(chi_global(qdc::test::bell_phi_plus()), Error);
}

TEST_CASE("chi_global on the named four-qubit states") {
  CHECK(near(chi_global(zoo::ghz(4)), 3.0, 1e-10));
  CHECK(near(chi_global(zoo::two_singlets()), 4.0, 1e-10));
  CHECK(near(chi_global(product_four_qubits()), 2.0, 1e-10));
}

TEST_CASE("b_locc on the named four-qubit states") {
  CHECK(near(b_locc(zoo::ghz(4), natural_assignment()), 3.0, 1e-10));
  // Both assigned marginals of two singlets are pure, so the subtracted term
  // vanishes and the bound equals chi_global.
  CHECK(near(b_locc(zoo::two_singlets(), natural_assignment()), 4.0, 1e-10));
  CHECK(near(b_locc(product_four_qubits(), natural_assignment()), 2.0, 1e-10));
  CHECK(near(b_locc(zoo::frank4(), natural_assignment()), 2.398742304772065, 1e-10));
  CHECK(near(b_locc(zoo::w(4), natural_assignment()), 2.0 + 1.622556248918266 - 1.0, 1e-10));
}

TEST_CASE("b_locc validates the assignment") {
  const DensityState s = zoo::ghz(4);
  try {
    b_locc(s, {{"A1", "B1"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unassigned_sender);
  }
  try {
    b_locc(s, {{"A1", "B1"}, {"A2", "A1"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_label);
  }
  const DensityState three =
      ghz_with_roles({Role::sender, Role::sender, Role::sender, Role::receiver});
  try {
    b_locc(three, {{"A1", "B1"}, {"A2", "B1"}, {"A3", "B1"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_two_receivers);
  }
}

TEST_CASE("chi_local on the named four-qubit states") {
  CHECK(near(chi_local(zoo::two_singlets(), natural_assignment()), 4.0, 1e-10));
  CHECK(near(chi_local(zoo::ghz(4), natural_assignment()), 2.0, 1e-10));
  CHECK(near(chi_local(zoo::w(4), natural_assignment()), 1.622556248918266, 1e-10));
  CHECK(chi_local(zoo::w(4), natural_assignment()) <= 2.0 + 1e-9);
  CHECK(near(chi_local(zoo::frank4(), natural_assignment()), 1.174928360625864, 1e-10));
}

TEST_CASE("capacity_report flags for the named states") {
  const CapacityReport ghz_report = capacity_report(zoo::ghz(4), natural_assignment());
  CHECK(ghz_report.is_g_dc);
  CHECK(near(ghz_report.chi_glob, 3.0, 1e-10));
  REQUIRE(ghz_report.is_lo_dc.has_value());
  CHECK_FALSE(*ghz_report.is_lo_dc);
  // chi_local sits exactly at the threshold and b_locc above it: undecided
  CHECK(ghz_report.locc_status == LoccStatus::unknown);

  const CapacityReport singlets_report = capacity_report(zoo::two_singlets(), natural_assignment());
  CHECK(singlets_report.is_g_dc);
  CHECK(*singlets_report.is_lo_dc);
  CHECK(singlets_report.locc_status == LoccStatus::proven);

  const CapacityReport product_report = capacity_report(product_four_qubits(), natural_assignment());
  CHECK_FALSE(product_report.is_g_dc);
  CHECK_FALSE(*product_report.is_lo_dc);
  // a bound exactly at the threshold excludes any LOCC advantage
  CHECK(product_report.locc_status == LoccStatus::excluded);

  const CapacityReport bell_report = capacity_report(qdc::test::bell_phi_plus());
  CHECK(bell_report.is_g_dc);
  CHECK_FALSE(bell_report.b_locc.has_value());
  CHECK(near(bell_report.chi_single, bell_report.chi_glob, 1e-15));
}

TEST_CASE("Weyl averaging flattens the sender marginal") {
  Rng rng(11);
  for (const auto& [da, db] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
    const PartyLayout layout({{"A1", da, Role::sender}, {"B1", db, Role::receiver}});
    const DensityState s = random_state(layout, rng);
    const Ensemble e = encode(s, weyl_scheme(layout));
    const Matrix expected =
        tensor(identity(da) / static_cast<double>(da), partial_trace(s, {"B1"}).matrix());
    CHECK(max_abs(e.average().matrix() - expected) < 1e-10);
  }
}

TEST_CASE("any single encoding reaches the capacity as a relative entropy") {
  Rng rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const PartyLayout layout({{"A1", 3, Role::sender}, {"B1", 2, Role::receiver}});
    const DensityState s = random_state(layout, rng);
    const DensityState sigma = apply_local_unitaries(s, {{"A1", random_unitary(3, rng)}});
    const DensityState flattened(
        layout, tensor(identity(3) / 3.0, partial_trace(s, {"B1"}).matrix()));
    CHECK(near(relative_entropy(sigma, flattened), capacity_single_receiver(s), 1e-9));
  }
}

TEST_CASE("random schemes never beat the capacity formula") {
  Rng rng(17);
  const PartyLayout layout({{"A1", 2, Role::sender}, {"A2", 2, Role::sender},
                            {"B1", 2, Role::receiver}});
  for (int state_trial = 0; state_trial < 3; ++state_trial) {
    const DensityState s =
        random_state(layout, rng, state_trial == 1 ? 1 : layout.total_dim());
    const double formula = capacity_single_receiver(s);
    for (int trial = 0; trial < 10; ++trial) {
      EncodingScheme scheme;
      for (const std::string& label : {std::string("A1"), std::string("A2")}) {
        const int count = 1 + static_cast<int>(rng() % 3);
        SenderEnsemble ensemble;
        ensemble.probabilities = random_probabilities(count, rng);
        for (int i = 0; i < count; ++i) ensemble.unitaries.push_back(random_unitary(2, rng));
        scheme.emplace(label, std::move(ensemble));
      }
      CHECK(ensemble_capacity(s, scheme) <= formula + 1e-9);
    }
    CHECK(near(ensemble_capacity(s, weyl_scheme(layout)), formula, 1e-9));
  }
}

TEST_CASE("merging the senders does not change the capacity") {
  Rng rng(19);
  const PartyLayout split({{"A1", 2, Role::sender}, {"A2", 3, Role::sender},
                           {"A3", 2, Role::sender}, {"B1", 2, Role::receiver}});
  const PartyLayout merged({{"A", 12, Role::sender}, {"B1", 2, Role::receiver}});
  for (int trial = 0; trial < 5; ++trial) {
    const DensityState s = random_state(split, rng);
    const DensityState joined(merged, s.matrix());
    CHECK(near(capacity_single_receiver(s), capacity_single_receiver(joined), 1e-10));
  }
}

TEST_CASE("capacities and bounds are invariant under local unitaries") {
  Rng rng(23);
  const DensityState s = random_state(zoo::frank4().layout(), rng);
  const std::map<std::string, Matrix> rotation = {{"A1", random_unitary(2, rng)},
                                                  {"A2", random_unitary(2, rng)},
                                                  {"B1", random_unitary(2, rng)},
                                                  {"B2", random_unitary(2, rng)}};
  const DensityState rotated = apply_local_unitaries(s, rotation);
  const Assignment assignment = natural_assignment();
  CHECK(near(capacity_single_receiver(s), capacity_single_receiver(rotated), 1e-10));
  CHECK(near(chi_global(s), chi_global(rotated), 1e-10));
  CHECK(near(b_locc(s, assignment), b_locc(rotated, assignment), 1e-10));
  CHECK(near(chi_local(s, assignment), chi_local(rotated, assignment), 1e-10));
}

TEST_CASE("chi_local never exceeds chi_global") {
  Rng rng(29);
  const PartyLayout layout = zoo::frank4().layout();
  for (int trial = 0; trial < 10; ++trial) {
    const DensityState s =
        random_state(layout, rng, trial % 2 == 0 ? layout.total_dim() : 1);
    CHECK(chi_local(s, natural_assignment()) <= chi_global(s) + 1e-9);
  }
}
