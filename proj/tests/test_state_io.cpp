#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdc/dense_coding.hpp"
#include "qdc/state_io.hpp"
#include "qdc/state_zoo.hpp"
#include "test_support.hpp"

using namespace qdc;
using qdc::test::near;

TEST_CASE("parse a pure Bell state file") {
  const std::string text =
      "# a Bell pair\n"
      "dims: 2 2\n"
      "roles: S R\n"
      "kind: pure\n"
      "0.7071067811865476 0\n"
      "0 0\n"
      "0 0\n"
      "0.7071067811865476 0\n";
  const DensityState s = parse_state_file(text);
  CHECK(s.layout().party(0).label == "A1");
  CHECK(s.layout().party(1).label == "B1");
  CHECK(max_abs(s.matrix() - qdc::test::bell_phi_plus().matrix()) < 1e-12);
}

TEST_CASE("parse a mixed maximally-mixed file") {
  std::string text = "dims: 2 2\nroles: S R\nkind: mixed\n";
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) text += (r == c ? "0.25 0 " : "0 0 ");
    text += "\n";
  }
  const DensityState s = parse_state_file(text);
  CHECK(max_abs(s.matrix() - identity(4) / 4.0) < 1e-15);
}

TEST_CASE("numbers may be split across lines arbitrarily") {
  const std::string text =
      "dims: 2\nroles: S\nkind: mixed\n"
      "0.5 0 0 0\n0 0\n0.5 0\n";
  const DensityState s = parse_state_file(text);
  CHECK(max_abs(s.matrix() - identity(2) / 2.0) < 1e-15);
}

TEST_CASE("a state with the wrong trace fails validation") {
  std::string text = "dims: 2\nroles: S\nkind: mixed\n0.6 0 0 0 0 0 0.3 0\n";
  try {
    parse_state_file(text);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::validation_failed);
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line numbers") {
  try {
    parse_state_file("dims: 2 2\nroles: S R\nkind: pure\n0.5 0\nbogus 0\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  try {
    parse_state_file("dims: 2 1\nroles: S R\nkind: pure\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_state_file("dims: 2\nroles: S\nkind: classical\n"), Error);
  CHECK_THROWS_AS(parse_state_file("roles: S\ndims: 2\nkind: pure\n1 0 0 0\n"), Error);
}

TEST_CASE("body length must match the declared kind") {
  try {
    parse_state_file("dims: 2\nroles: S\nkind: pure\n1 0 0\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::syntax_error);
    CHECK(std::string(e.what()).find("expected 4") != std::string::npos);
  }
}

TEST_CASE("roles determine the generated labels") {
  std::string text = "dims: 2 2 2 2\nroles: S R S R\nkind: pure\n";
  text += "1 0";
  for (int i = 1; i < 16; ++i) text += " 0 0";
  text += "\n";
  const DensityState s = parse_state_file(text);
  const std::vector<std::string> expected{"A1", "B1", "A2", "B2"};
  CHECK(s.layout().labels() == expected);
  CHECK(s.layout().party(2).role == Role::sender);
}

TEST_CASE("zoo states round-trip through the file format") {
  const Assignment natural{{"A1", "B1"}, {"A2", "B2"}};
  for (const std::string& name :
       {std::string("ghz"), std::string("frank4"), std::string("tiles33")}) {
    const zoo::ZooEntry entry = zoo::make({.name = name, .p = 0.8});
    const DensityState reparsed = parse_state_file(format_state_file(entry.state));
    CHECK(reparsed.layout() == entry.state.layout());
    CHECK(near(capacity_single_receiver(reparsed), capacity_single_receiver(entry.state), 1e-9));
    if (entry.state.layout().receiver_labels().size() == 2) {
      CHECK(near(b_locc(reparsed, natural), b_locc(entry.state, natural), 1e-9));
      CHECK(near(chi_local(reparsed, natural), chi_local(entry.state, natural), 1e-9));
    }
  }
}

TEST_CASE("load_state_file reports missing files") {
  try {
    load_state_file("/nonexistent/state.qst");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::io_error);
  }
}
