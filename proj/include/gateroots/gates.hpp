#pragma once

// Gate catalog, truth-table actions on computational basis states, the
// two-qubit Pauli tensor basis, and state application.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gateroots/linalg.hpp"

namespace gateroots {

enum class GateName { I, X, Y, Z, H, S, T, CNOT, SWAP, CCNOT, CSWAP, PERES };

inline constexpr std::array kAllGates{GateName::I,    GateName::X,     GateName::Y,     GateName::Z,
                                      GateName::H,    GateName::S,     GateName::T,     GateName::CNOT,
                                      GateName::SWAP, GateName::CCNOT, GateName::CSWAP, GateName::PERES};

std::string_view to_string(GateName name);
std::optional<GateName> gate_from_string(std::string_view text);
/// Number of qubits the gate acts on (1, 2 or 3).
std::size_t arity(GateName name);

/// The catalog matrix. Bit ordering is MSB-first: the leftmost ket label is
/// the most significant bit of the row/column index.
const UnitaryGate& gate(GateName name);

/// The 16 products P1 (x) P2 for P1, P2 in (I, X, Y, Z), row-major.
const std::vector<UnitaryGate>& pauli_tensor_basis();

// ---- classical actions --------------------------------------------------

using BitTriple = std::array<int, 3>;

int xor_add(int a, int b);
BitTriple toffoli_action(int a, int b, int c);
BitTriple fredkin_action(int a, int b, int c);
BitTriple peres_action(int a, int b, int c);

/// Computational basis label |b_0 b_1 ... b_{n-1}>, b_0 most significant.
class BasisState {
 public:
  explicit BasisState(std::vector<std::uint8_t> bits);
  /// Parses a string of '0'/'1' characters; throws DomainError otherwise.
  static BasisState from_string(std::string_view bits);
  static BasisState from_index(std::size_t index, std::size_t qubits);

  std::size_t qubits() const noexcept { return bits_.size(); }
  std::size_t index() const noexcept;
  int operator[](std::size_t k) const { return bits_[k]; }
  std::string to_string() const;

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Unit-norm amplitude vector over 2^n basis states.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);
  static StateVector basis(const BasisState& state);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t k) const { return amplitudes_[k]; }

 private:
  std::vector<Complex> amplitudes_;
};

double distance(const StateVector& a, const StateVector& b);

StateVector apply(const UnitaryGate& u, const StateVector& psi);

/// Reversible classical map on n-bit strings.
using BasisAction = std::function<BasisState(const BasisState&)>;

/// 0/1 matrix M with M[index(action(x)), index(x)] = 1. Throws DomainError
/// when the action is not a bijection on {0,1}^arity.
UnitaryGate permutation_from_action(const BasisAction& action, std::size_t arity);
UnitaryGate permutation_from_action(const std::function<BitTriple(int, int, int)>& action);

/// g|x> built from the gate's action formula (bit flip, phase flip, truth
/// table, ...) rather than from its matrix.
StateVector basis_action(GateName name, const BasisState& x);

/// The permutation-gate truth table as a basis map; DomainError for gates
/// that are not permutations (Y, Z, H, S, T).
BasisAction permutation_action(GateName name);

}  // namespace gateroots
