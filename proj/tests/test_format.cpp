#include <doctest.h>

#include <cmath>
#include <limits>

#include "gateroots/format.hpp"
#include "gateroots/involution.hpp"
#include "support.hpp"

using namespace gateroots;
using namespace testing_support;

TEST_SUITE("format") {
  TEST_CASE("format names") {
    CHECK(format_from_string("json") == Format::Json);
    CHECK(format_from_string("text") == Format::Text);
    CHECK(format_from_string("latex") == Format::Latex);
    CHECK_FALSE(format_from_string("yaml").has_value());
  }

  TEST_CASE("json numbers") {
    CHECK(json_number(0.0) == "0");
    CHECK(json_number(-0.0) == "0");
    CHECK(json_number(1.0) == "1");
    CHECK(json_number(-0.5) == "-0.5");
    CHECK(json_number(0.1) == "0.1");
    CHECK(json_number(1 / std::sqrt(2.0)) == "0.7071067811865475");
    CHECK(json_number(std::sqrt(0.5)) == "0.7071067811865476");
  }

  TEST_CASE("matrix json") {
    CHECK(format_matrix(gate(GateName::Z).matrix(), Format::Json) == "{\"dim\":2,\"entries\":[[1,0],[0,0],[0,0],[-1,0]]}\n");
  }

  TEST_CASE("matrix latex") {
    const std::string s = format_matrix(gate(GateName::S).matrix(), Format::Latex);
    CHECK(s == "\\begin{pmatrix}\n1 & 0 \\\\\n0 & i\n\\end{pmatrix}\n");
    const std::string sx = format_matrix(sqrt_involution(gate(GateName::X)).root.matrix(), Format::Latex);
    CHECK(sx.find("0.5+0.5i & 0.5-0.5i") != std::string::npos);
  }

  TEST_CASE("matrix text") {
    const std::string t = format_matrix(sqrt_involution(gate(GateName::X)).root.matrix(), Format::Text);
    CHECK(t == "  0.500000+0.500000i  0.500000-0.500000i\n  0.500000-0.500000i  0.500000+0.500000i\n");
    const std::string y = format_matrix(gate(GateName::Y).matrix(), Format::Text);
    CHECK(y == "  0.000000+0.000000i  0.000000-1.000000i\n  0.000000+1.000000i  0.000000+0.000000i\n");
  }

  TEST_CASE("state formats") {
    const StateVector psi = apply(gate(GateName::H), StateVector::basis(BasisState::from_string("0")));
    CHECK(format_state(psi, Format::Json) == "{\"dim\":2,\"amplitudes\":[[0.7071067811865476,0],[0.7071067811865476,0]]}\n");
    CHECK(format_state(psi, Format::Text) == "|0>  0.707107+0.000000i\n|1>  0.707107+0.000000i\n");
    CHECK(format_state(psi, Format::Latex) == "\\begin{pmatrix}\n0.707107 \\\\\n0.707107\n\\end{pmatrix}\n");
  }

  TEST_CASE("matrix_from_json") {
    const SquareMatrix m = matrix_from_json(R"({"dim":2,"entries":[[0,0],[0,-1],[0,1],[0,0]]})");
    CHECK(m == gate(GateName::Y).matrix());
    CHECK_THROWS_AS(matrix_from_json("{\"dim\":2,"), ParseError);
    CHECK_THROWS_AS(matrix_from_json("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":2,"entries":[[0,0]]})"), DomainError);
    CHECK_THROWS_AS(matrix_from_json(R"({"dim":1,"entries":[[0,"a"]]})"), std::invalid_argument);
  }

  TEST_CASE("amplitudes json") {
    const StateVector psi = state_from_amplitudes_json("[[0.6,0],[0,0.8]]");
    CHECK(psi[1] == Complex{0, 0.8});
    const StateVector near = state_from_amplitudes_json("[[0.7071068,0],[0.7071068,0]]");
    CHECK(std::abs(std::norm(near[0]) + std::norm(near[1]) - 1.0) <= 1e-15);
    CHECK_THROWS_AS(state_from_amplitudes_json("[[1,0],[1,0]]"), std::invalid_argument);
    CHECK_THROWS_AS(state_from_amplitudes_json("[[1,0],[0,0],[0,0]]"), std::invalid_argument);
    CHECK_THROWS_AS(state_from_amplitudes_json("[[1,0]]"), std::invalid_argument);
    CHECK_THROWS_AS(state_from_amplitudes_json("[[1,0],"), ParseError);
    CHECK_THROWS_AS(state_from_amplitudes_json("{}"), std::invalid_argument);
  }

  TEST_CASE("report formats") {
    VerificationReport r;
    ClaimResult ok;
    ok.id = "A-1";
    ok.description = "d";
    ok.reference = "r";
    ok.residual = 0.0;
    ok.observed = ok.expected = ClaimStatus::Holds;
    ok.matches_expected = true;
    ClaimResult bad = ok;
    bad.id = "B_2";
    bad.residual = std::numeric_limits<double>::infinity();
    bad.observed = ClaimStatus::Fails;
    bad.matches_expected = false;
    bad.error = "boom";
    r.results = {ok, bad};
    r.holds = r.fails = r.mismatches = 1;
    r.overall_ok = false;

    const std::string json = format_report(r, Format::Json);
    CHECK(json.find("\"residual\": \"inf\"") != std::string::npos);
    CHECK(json.find("\"observed_status\": \"FAILS\"") != std::string::npos);
    const std::string text = format_report(r, Format::Text);
    CHECK(text.find("FAIL B_2") != std::string::npos);
    CHECK(text.find("[boom]") != std::string::npos);
    CHECK(text.find("MISMATCH") != std::string::npos);
    CHECK(format_report(r, Format::Latex).find("B\\_2") != std::string::npos);
  }
}

TEST_SUITE("format properties") {
  TEST_CASE("json matrix output re-parses to the same bits") {
    for (int trial = 0; trial < 200; ++trial) {
      const SquareMatrix m = random_matrix(1 + trial % 8);
      std::string json = format_matrix(m, Format::Json);
      CHECK(matrix_from_json(json) == m);
    }
    for (GateName g : kAllGates) CHECK(matrix_from_json(format_matrix(gate(g).matrix(), Format::Json)) == gate(g).matrix());
  }
}
