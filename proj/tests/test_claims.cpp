#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "gateroots/claims.hpp"
#include "gateroots/format.hpp"
#include "gateroots/gates.hpp"
#include "support.hpp"

using namespace gateroots;
using namespace testing_support;

namespace {

const Claim& find_claim(std::string_view id) {
  for (const Claim& c : builtin_claims())
    if (c.id == id) return c;
  FAIL("no claim " << id);
  throw std::logic_error("unreachable");
}

// Hand 2x2 oracle: sqrt(A) = ((1+i) I + (1-i) A)/2 built entrywise.
OMat oracle_sqrt(const SquareMatrix& a) {
  OMat out = to_omat(a);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out[i][j] = Complex{0.5, -0.5} * out[i][j] + (i == j ? Complex{0.5, 0.5} : 0.0);
  return out;
}

OMat oracle_anti(const OMat& a, const OMat& b) { return oadd(omul(a, b), omul(b, a)); }

// P^2 from the hand-written truth table, as an index map.
std::array<int, 8> peres_squared_map() {
  constexpr int table[8] = {0, 1, 2, 3, 6, 7, 5, 4};
  std::array<int, 8> out{};
  for (int x = 0; x < 8; ++x) out[x] = table[table[x]];
  return out;
}

const std::set<std::string> kExpectedFails{
    "EULER-QUARTER-AS-PRINTED", "SQRTS-FORMULA",      "COMM-H-SQRTY",
    "COMM-SQRTH-SQRTY",         "ANTI-SQRT-XY",       "ANTI-SQRT-YZ",
    "ANTI-SQRT-ZX",             "CNOT-SELFINV-AS-PRINTED", "SWAP-SELFINV-AS-PRINTED",
    "ROOTACTION-P",             "PERES-INVOLUTION"};

}  // namespace

TEST_SUITE("claims") {
  TEST_CASE("commutator examples") {
    CHECK(commutator(gate(GateName::X).matrix(), gate(GateName::Y).matrix()) ==
          Complex{0, 2} * gate(GateName::Z).matrix());
    const SquareMatrix a = random_matrix(3);
    CHECK(frobenius_norm(commutator(a, a)) == 0.0);
  }

  TEST_CASE("anticommutator examples") {
    CHECK(frobenius_norm(anticommutator(gate(GateName::X).matrix(), gate(GateName::Z).matrix())) == 0.0);
    const SquareMatrix a = random_matrix(2);
    CHECK(frob_dist(anticommutator(identity(2), a), Complex{2} * a) == 0.0);
  }

  TEST_CASE("anticommutator of square roots matches the hand oracle") {
    const SquareMatrix& x = gate(GateName::X).matrix();
    const SquareMatrix& y = gate(GateName::Y).matrix();
    const OMat anti = oracle_anti(oracle_sqrt(x), oracle_sqrt(y));
    // iI + X + Y entrywise.
    const OMat expected{{kI, Complex{1, -1}}, {Complex{1, 1}, kI}};
    CHECK(ofrob(oadd(anti, expected, -1.0)) <= 1e-15);
    // Distance to the claimed value Z: four entries of modulus sqrt2.
    const OMat z = to_omat(gate(GateName::Z).matrix());
    CHECK(std::abs(ofrob(oadd(anti, z, -1.0)) - 2 * std::numbers::sqrt2) <= 1e-15);
  }

  TEST_CASE("registry shape") {
    const auto& claims = builtin_claims();
    CHECK(claims.size() >= 40);
    std::set<std::string> ids;
    for (const Claim& c : claims) {
      CHECK(ids.insert(c.id).second);
      CHECK_FALSE(c.description.empty());
      CHECK_FALSE(c.reference.empty());
    }
    const Claim& pauli = find_claim("COMM-PAULI-XY");
    CHECK(pauli.rhs.scalar == Complex{0, 2});
    CHECK(pauli.rhs.evaluate() == Complex{0, 2} * gate(GateName::Z).matrix());
    CHECK(find_claim("PERES-INVOLUTION").expected == ClaimStatus::Fails);
    CHECK(find_claim("SQRTZ-IS-S").expected == ClaimStatus::Holds);
  }

  TEST_CASE("expected FAILS set") {
    for (const Claim& c : builtin_claims()) {
      INFO(c.id);
      CHECK((c.expected == ClaimStatus::Fails) == (kExpectedFails.count(c.id) == 1));
    }
  }

  TEST_CASE("evaluate_claim examples") {
    const ClaimResult comm = evaluate_claim(find_claim("COMM-SQRT-XY"));
    CHECK(comm.residual <= 1e-12);
    CHECK(comm.observed == ClaimStatus::Holds);

    const ClaimResult anti = evaluate_claim(find_claim("ANTI-SQRT-XY"));
    CHECK(std::abs(anti.residual - 2 * std::numbers::sqrt2) <= 1e-6);
    CHECK(anti.observed == ClaimStatus::Fails);
    CHECK(anti.matches_expected);

    const ClaimResult pi = evaluate_claim(find_claim("EULER-PI"));
    CHECK(pi.residual <= 1e-15);
    CHECK(pi.observed == ClaimStatus::Holds);
  }

  TEST_CASE("PERES-INVOLUTION residual against the truth-table oracle") {
    const auto map = peres_squared_map();
    int moved = 0;
    for (int x = 0; x < 8; ++x) moved += map[x] != x;
    CHECK(moved == 4);
    // Each moved column of P^2 - I has two entries of modulus 1.
    const double oracle = std::sqrt(2.0 * moved);
    CHECK(std::abs(evaluate_claim(find_claim("PERES-INVOLUTION")).residual - oracle) <= 1e-12);
  }

  TEST_CASE("evaluation failures become FAILS with infinite residual") {
    Claim bad{"BAD", "dimension mismatch", gate_side("X"), gate_side("CNOT"), "test", ClaimStatus::Fails};
    const ClaimResult r = evaluate_claim(bad);
    CHECK(std::isinf(r.residual));
    CHECK(r.observed == ClaimStatus::Fails);
    CHECK(r.matches_expected);
    CHECK_FALSE(r.error.empty());

    Claim broken{"BROKEN", "side throws",
                 computed_side("boom", []() -> SquareMatrix { throw std::runtime_error("boom"); }), gate_side("X"),
                 "test", ClaimStatus::Holds};
    const ClaimResult b = evaluate_claim(broken);
    CHECK_FALSE(b.matches_expected);
    CHECK(b.error == "boom");
    CHECK_THROWS(gate_side("sqrt("));
    CHECK_THROWS_AS(evaluate_claim(bad, 0.0), DomainError);
  }

  TEST_CASE("run_all") {
    const VerificationReport report = run_all(1e-10);
    CHECK(report.overall_ok);
    CHECK(report.mismatches == 0);
    CHECK(report.results.size() == builtin_claims().size());
    CHECK(report.holds + report.fails == report.results.size());
    for (std::size_t k = 0; k < report.results.size(); ++k) CHECK(report.results[k].id == builtin_claims()[k].id);

    const VerificationReport filtered = run_all(1e-10, "ANTI-");
    CHECK(filtered.results.size() == 6);
    CHECK(run_all(1e-10, "NO-SUCH-").results.empty());
  }

  TEST_CASE("tight tolerance keeps permutation claims HOLDS") {
    for (std::string_view id : {"CNOT-MATRIX", "SWAP-MATRIX", "TOFFOLI-MATRIX", "CNOT-SELFINV-CORRECTED",
                                "SWAP-SELFINV-CORRECTED"}) {
      INFO(id);
      CHECK(evaluate_claim(find_claim(id), 1e-14).observed == ClaimStatus::Holds);
    }
  }
}

TEST_SUITE("claims properties") {
  TEST_CASE("commutator antisymmetry and anticommutator symmetry, exactly") {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t d = 1 + trial % 8;
      const SquareMatrix a = random_matrix(d), b = random_matrix(d);
      CHECK(commutator(a, b) == -commutator(b, a));
      CHECK(anticommutator(a, b) == anticommutator(b, a));
    }
  }

  TEST_CASE("commutator + anticommutator = 2AB") {
    for (GateName x : kAllGates)
      for (GateName y : kAllGates) {
        const SquareMatrix& a = gate(x).matrix();
        const SquareMatrix& b = gate(y).matrix();
        if (a.dim() != b.dim()) continue;
        CHECK(frob_dist(commutator(a, b) + anticommutator(a, b), Complex{2} * mul(a, b)) <= 1e-15);
      }
  }

  TEST_CASE("Jacobi identity on random catalog triples") {
    std::map<std::size_t, std::vector<SquareMatrix>> by_dim;
    for (GateName g : kAllGates) by_dim[gate(g).dim()].push_back(gate(g).matrix());
    for (const UnitaryGate& p : pauli_tensor_basis()) by_dim[4].push_back(p.matrix());
    const std::vector<std::size_t> dims{2, 4, 8};
    for (int trial = 0; trial < 50; ++trial) {
      const auto& pool = by_dim[dims[trial % 3]];
      auto pick = [&] { return pool[static_cast<std::size_t>(uniform(0, static_cast<double>(pool.size())))]; };
      const SquareMatrix a = pick(), b = pick(), c = pick();
      const SquareMatrix sum =
          commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
      CHECK(frobenius_norm(sum) <= 1e-12);
    }
  }

  TEST_CASE("report is byte-identical across runs") {
    const std::string first = format_report(run_all(1e-10), Format::Json);
    for (int k = 0; k < 5; ++k) CHECK(format_report(run_all(1e-10), Format::Json) == first);
  }
}
