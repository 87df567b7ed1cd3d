#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gateroots/gates.hpp"
#include "support.hpp"

using namespace gateroots;
using namespace testing_support;

namespace {

const SquareMatrix& G(GateName n) { return gate(n).matrix(); }

const std::vector<GateName> kInvolutions{GateName::I,    GateName::X,     GateName::Y,    GateName::Z,   GateName::H,
                                         GateName::CNOT, GateName::SWAP, GateName::CCNOT, GateName::CSWAP};

std::vector<BasisState> all_basis(std::size_t qubits) {
  std::vector<BasisState> out;
  for (std::size_t k = 0; k < (std::size_t{1} << qubits); ++k) out.push_back(BasisState::from_index(k, qubits));
  return out;
}

// Truth tables written out by hand, indexed by abc as a 3-bit number.
constexpr int kToffoliTable[8] = {0, 1, 2, 3, 4, 5, 7, 6};
constexpr int kFredkinTable[8] = {0, 1, 2, 3, 4, 6, 5, 7};
constexpr int kPeresTable[8] = {0, 1, 2, 3, 6, 7, 5, 4};

int pack(const BitTriple& t) { return 4 * t[0] + 2 * t[1] + t[2]; }

}  // namespace

TEST_SUITE("gates") {
  TEST_CASE("catalog matrices") {
    CHECK(G(GateName::Y) == SquareMatrix{{0, -kI}, {kI, 0}});
    SquareMatrix toffoli = identity(8);
    toffoli(6, 6) = toffoli(7, 7) = 0;
    toffoli(6, 7) = toffoli(7, 6) = 1;
    CHECK(G(GateName::CCNOT) == toffoli);
    CHECK(G(GateName::T)(0, 0) == Complex{1});
    CHECK(std::abs(G(GateName::T)(1, 1) - std::polar(1.0, std::numbers::pi / 4)) <= 1e-16);
    CHECK(G(GateName::T)(0, 1) == Complex{});
    CHECK(G(GateName::S) == SquareMatrix{{1, 0}, {0, kI}});
  }

  TEST_CASE("names round-trip") {
    for (GateName g : kAllGates) {
      const auto back = gate_from_string(to_string(g));
      REQUIRE(back.has_value());
      CHECK(*back == g);
      CHECK(G(g).dim() == (std::size_t{1} << arity(g)));
    }
    CHECK_FALSE(gate_from_string("x").has_value());
    CHECK_FALSE(gate_from_string("TOFFOLI").has_value());
  }

  TEST_CASE("xor_add") {
    CHECK(xor_add(0, 1) == 1);
    CHECK(xor_add(1, 1) == 0);
    CHECK(xor_add(0, 0) == 0);
    CHECK(xor_add(1, 0) == 1);
  }

  TEST_CASE("three-bit actions") {
    CHECK(toffoli_action(1, 1, 0) == BitTriple{1, 1, 1});
    CHECK(toffoli_action(0, 1, 1) == BitTriple{0, 1, 1});
    CHECK(toffoli_action(1, 1, 1) == BitTriple{1, 1, 0});
    CHECK(fredkin_action(1, 0, 1) == BitTriple{1, 1, 0});
    CHECK(fredkin_action(1, 1, 0) == BitTriple{1, 0, 1});
    CHECK(peres_action(1, 0, 0) == BitTriple{1, 1, 0});
    CHECK(peres_action(1, 1, 0) == BitTriple{1, 0, 1});
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        CHECK(fredkin_action(0, b, c) == BitTriple{0, b, c});
        CHECK(peres_action(0, b, c) == BitTriple{0, b, c});
      }
  }

  TEST_CASE("actions match hand-written truth tables") {
    for (int x = 0; x < 8; ++x) {
      const int a = x >> 2 & 1, b = x >> 1 & 1, c = x & 1;
      CHECK(pack(toffoli_action(a, b, c)) == kToffoliTable[x]);
      CHECK(pack(fredkin_action(a, b, c)) == kFredkinTable[x]);
      CHECK(pack(peres_action(a, b, c)) == kPeresTable[x]);
    }
  }

  TEST_CASE("permutation_from_action") {
    CHECK(permutation_from_action(toffoli_action) == gate(GateName::CCNOT));
    CHECK(permutation_from_action(fredkin_action) == gate(GateName::CSWAP));
    CHECK(permutation_from_action(peres_action) == gate(GateName::PERES));
    CHECK(permutation_from_action([](const BasisState& x) { return x; }, 3).matrix() == identity(8));
    const SquareMatrix& p = G(GateName::PERES);
    CHECK(p(6, 4) == Complex{1});
    CHECK_THROWS_AS(permutation_from_action([](const BasisState&) { return BasisState::from_string("000"); }, 3),
                    DomainError);
  }

  TEST_CASE("permutation_action matches catalog for permutation gates") {
    for (GateName g : {GateName::I, GateName::X, GateName::CNOT, GateName::SWAP, GateName::CCNOT, GateName::CSWAP,
                       GateName::PERES})
      CHECK(permutation_from_action(permutation_action(g), arity(g)) == gate(g));
    CHECK_THROWS_AS(permutation_action(GateName::H), DomainError);
  }

  TEST_CASE("pauli tensor basis") {
    const auto& basis = pauli_tensor_basis();
    REQUIRE(basis.size() == 16);
    CHECK(basis[0].matrix() == identity(4));
    CHECK(basis[5].matrix() == kron(G(GateName::X), G(GateName::X)));
    for (const auto& p : basis) CHECK(is_involution(p.matrix(), 1e-15));
  }

  TEST_CASE("basis states") {
    const BasisState s = BasisState::from_string("110");
    CHECK(s.index() == 6);
    CHECK(s.to_string() == "110");
    CHECK(BasisState::from_index(6, 3) == s);
    CHECK_THROWS_AS(BasisState::from_string("102"), DomainError);
    CHECK_THROWS_AS(BasisState::from_string(""), DomainError);
    CHECK_THROWS_AS(BasisState::from_index(8, 3), DomainError);
  }

  TEST_CASE("state vectors") {
    CHECK_THROWS_AS(StateVector({1, 0, 0}), DomainError);
    CHECK_THROWS_AS(StateVector({1, 1}), DomainError);
    CHECK_THROWS_AS(StateVector({1}), DomainError);
    const StateVector psi = StateVector::basis(BasisState::from_string("01"));
    CHECK(psi.dim() == 4);
    CHECK(psi[1] == Complex{1});
    CHECK_THROWS_AS(apply(gate(GateName::X), psi), DomainError);
  }

  TEST_CASE("apply examples") {
    const auto zero = StateVector::basis(BasisState::from_string("0"));
    const auto one = StateVector::basis(BasisState::from_string("1"));
    CHECK(distance(apply(gate(GateName::X), zero), one) == 0.0);
    for (int a = 0; a < 2; ++a) {
      const auto out = apply(gate(GateName::Y), a ? one : zero);
      const Complex phase = kI * (a ? -1.0 : 1.0);
      CHECK(std::abs(out[1 - a] - phase) <= 1e-15);
      CHECK(std::abs(out[a]) == 0.0);
    }
    const auto plus = apply(gate(GateName::H), zero);
    CHECK(std::abs(plus[0] - Complex{std::numbers::sqrt2 / 2}) <= 1e-15);
    CHECK(std::abs(plus[1] - Complex{std::numbers::sqrt2 / 2}) <= 1e-15);
  }
}

TEST_SUITE("gates properties") {
  TEST_CASE("catalog gates are unitary") {
    for (GateName g : kAllGates) CHECK(is_unitary(G(g), 1e-12));
  }

  TEST_CASE("involution subset") {
    for (GateName g : kInvolutions) CHECK(is_involution(G(g), 1e-12));
    for (GateName g : {GateName::S, GateName::T, GateName::PERES}) CHECK_FALSE(is_involution(G(g), 1e-12));
  }

  TEST_CASE("H = (X + Z)/sqrt2") {
    const SquareMatrix xz = Complex{1 / std::numbers::sqrt2} * (G(GateName::X) + G(GateName::Z));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(G(GateName::H)(i, j) - xz(i, j)) <= 1e-15);
  }

  TEST_CASE("matrix application reproduces action formulas") {
    for (GateName g : kAllGates) {
      for (const BasisState& x : all_basis(arity(g))) {
        const StateVector by_matrix = apply(gate(g), StateVector::basis(x));
        CHECK(distance(by_matrix, basis_action(g, x)) <= 1e-12);
      }
    }
  }

  TEST_CASE("one-qubit action formulas, independently") {
    const double r = 1 / std::numbers::sqrt2;
    for (int a = 0; a < 2; ++a) {
      const BasisState x = BasisState::from_index(a, 1);
      const double sign = a ? -1.0 : 1.0;
      auto amp = [&](GateName g, int k) { return apply(gate(g), StateVector::basis(x))[k]; };
      CHECK(std::abs(amp(GateName::Z, a) - Complex{sign}) <= 1e-15);
      CHECK(std::abs(amp(GateName::X, 1 - a) - Complex{1}) <= 1e-15);
      CHECK(std::abs(amp(GateName::H, 0) - Complex{r}) <= 1e-15);
      CHECK(std::abs(amp(GateName::H, 1) - Complex{sign * r}) <= 1e-15);
      CHECK(std::abs(amp(GateName::S, a) - (a ? kI : Complex{1})) <= 1e-15);
      CHECK(std::abs(amp(GateName::T, a) - std::polar(1.0, a * std::numbers::pi / 4)) <= 1e-15);
    }
  }

  TEST_CASE("apply preserves the norm") {
    for (GateName g : kAllGates) {
      for (int trial = 0; trial < 100; ++trial) {
        const StateVector psi(random_unit_vector(G(g).dim()));
        const StateVector out = apply(gate(g), psi);
        double sum = 0;
        for (const Complex& z : out.amplitudes()) sum += std::norm(z);
        CHECK(std::abs(std::sqrt(sum) - 1.0) <= 1e-12);
      }
    }
  }
}
