#include "gateroots/gates.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace gateroots {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

UnitaryGate permutation_gate(GateName name) { return permutation_from_action(permutation_action(name), arity(name)); }

UnitaryGate build_gate(GateName name) {
  using std::numbers::pi;
  switch (name) {
    case GateName::I:
      return UnitaryGate(identity(2));
    case GateName::X:
      return UnitaryGate(SquareMatrix{{0, 1}, {1, 0}});
    case GateName::Y:
      return UnitaryGate(SquareMatrix{{0, -kI}, {kI, 0}});
    case GateName::Z:
      return UnitaryGate(SquareMatrix{{1, 0}, {0, -1}});
    case GateName::H:
      return UnitaryGate(SquareMatrix{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}});
    case GateName::S:
      return UnitaryGate(SquareMatrix{{1, 0}, {0, kI}});
    case GateName::T:
      return UnitaryGate(SquareMatrix{{1, 0}, {0, std::polar(1.0, pi / 4)}});
    case GateName::CNOT:
    case GateName::SWAP:
    case GateName::CCNOT:
    case GateName::CSWAP:
    case GateName::PERES:
      return permutation_gate(name);
  }
  throw DomainError("unknown gate");
}

BasisState bits3(const BitTriple& t) {
  return BasisState({static_cast<std::uint8_t>(t[0]), static_cast<std::uint8_t>(t[1]), static_cast<std::uint8_t>(t[2])});
}

BasisAction triple_action(std::function<BitTriple(int, int, int)> f) {
  return [f = std::move(f)](const BasisState& x) {
    if (x.qubits() != 3) throw DomainError("three-qubit action applied to a " + std::to_string(x.qubits()) + "-bit state");
    return bits3(f(x[0], x[1], x[2]));
  };
}

void require_arity(GateName name, const BasisState& x) {
  if (x.qubits() != arity(name)) {
    throw DomainError(std::string(to_string(name)) + " acts on " + std::to_string(arity(name)) +
                      " qubit(s), basis state has " + std::to_string(x.qubits()));
  }
}

}  // namespace

std::string_view to_string(GateName name) {
  switch (name) {
    case GateName::I: return "I";
    case GateName::X: return "X";
    case GateName::Y: return "Y";
    case GateName::Z: return "Z";
    case GateName::H: return "H";
    case GateName::S: return "S";
    case GateName::T: return "T";
    case GateName::CNOT: return "CNOT";
    case GateName::SWAP: return "SWAP";
    case GateName::CCNOT: return "CCNOT";
    case GateName::CSWAP: return "CSWAP";
    case GateName::PERES: return "PERES";
  }
  return "?";
}

std::optional<GateName> gate_from_string(std::string_view text) {
  for (GateName g : kAllGates)
    if (to_string(g) == text) return g;
  return std::nullopt;
}

std::size_t arity(GateName name) {
  switch (name) {
    case GateName::CNOT:
    case GateName::SWAP:
      return 2;
    case GateName::CCNOT:
    case GateName::CSWAP:
    case GateName::PERES:
      return 3;
    default:
      return 1;
  }
}

const UnitaryGate& gate(GateName name) {
  static const std::vector<UnitaryGate> catalog = [] {
    std::vector<UnitaryGate> out;
    for (GateName g : kAllGates) out.push_back(build_gate(g));
    return out;
  }();
  return catalog[static_cast<std::size_t>(name)];
}

const std::vector<UnitaryGate>& pauli_tensor_basis() {
  static const std::vector<UnitaryGate> basis = [] {
    constexpr std::array paulis{GateName::I, GateName::X, GateName::Y, GateName::Z};
    std::vector<UnitaryGate> out;
    for (GateName left : paulis)
      for (GateName right : paulis) out.emplace_back(kron(gate(left).matrix(), gate(right).matrix()));
    return out;
  }();
  return basis;
}

int xor_add(int a, int b) { return a + b - 2 * a * b; }

BitTriple toffoli_action(int a, int b, int c) { return {a, b, xor_add(c, a * b)}; }

BitTriple fredkin_action(int a, int b, int c) {
  // b' = b(1 + a) + ca, c' = c(1 + a) + ba with ordinary + and *, (+) as xor.
  const int not_a = xor_add(1, a);
  const int b_out = b * not_a + c * a;
  const int c_out = c * not_a + b * a;
  assert(b_out == 0 || b_out == 1);
  assert(c_out == 0 || c_out == 1);
  return {a, b_out, c_out};
}

BitTriple peres_action(int a, int b, int c) { return {a, xor_add(b, a), xor_add(c, a * b)}; }

BasisState::BasisState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DomainError("basis state needs at least one qubit");
  for (std::uint8_t b : bits_)
    if (b > 1) throw DomainError("basis state bits must be 0 or 1");
}

BasisState BasisState::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw DomainError("basis string may only contain '0' and '1': \"" + std::string(text) + "\"");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BasisState(std::move(bits));
}

BasisState BasisState::from_index(std::size_t index, std::size_t qubits) {
  if (qubits == 0 || qubits >= 8 * sizeof(std::size_t) || index >> qubits != 0) {
    throw DomainError("basis index out of range");
  }
  std::vector<std::uint8_t> bits(qubits);
  for (std::size_t k = 0; k < qubits; ++k) bits[k] = static_cast<std::uint8_t>((index >> (qubits - 1 - k)) & 1U);
  return BasisState(std::move(bits));
}

std::size_t BasisState::index() const noexcept {
  std::size_t out = 0;
  for (std::uint8_t b : bits_) out = (out << 1) | b;
  return out;
}

std::string BasisState::to_string() const {
  std::string out;
  for (std::uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  const std::size_t n = amplitudes_.size();
  if (n < 2 || (n & (n - 1)) != 0) throw DomainError("state dimension must be a power of two, got " + std::to_string(n));
  double sum = 0.0;
  for (const Complex& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("state amplitude is not finite");
    sum += std::norm(z);
  }
  if (std::abs(std::sqrt(sum) - 1.0) > 1e-10) throw DomainError("state vector is not normalized");
}

StateVector StateVector::basis(const BasisState& state) {
  std::vector<Complex> amps(std::size_t{1} << state.qubits());
  amps[state.index()] = 1.0;
  return StateVector(std::move(amps));
}

double distance(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DomainError("state distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) sum += std::norm(a[k] - b[k]);
  return std::sqrt(sum);
}

StateVector apply(const UnitaryGate& u, const StateVector& psi) {
  if (u.dim() != psi.dim()) {
    throw DomainError("apply: gate dimension " + std::to_string(u.dim()) + " does not match state dimension " +
                      std::to_string(psi.dim()));
  }
  const SquareMatrix& m = u.matrix();
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < psi.dim(); ++j) acc += m(i, j) * psi[j];
    out[i] = acc;
  }
  return StateVector(std::move(out));
}

UnitaryGate permutation_from_action(const BasisAction& action, std::size_t arity) {
  if (arity == 0 || arity > 8) throw DomainError("permutation_from_action: unsupported arity");
  const std::size_t dim = std::size_t{1} << arity;
  SquareMatrix m(dim);
  std::vector<bool> hit(dim, false);
  for (std::size_t col = 0; col < dim; ++col) {
    const BasisState image = action(BasisState::from_index(col, arity));
    if (image.qubits() != arity) throw DomainError("permutation_from_action: action changed the qubit count");
    const std::size_t row = image.index();
    if (hit[row]) throw DomainError("permutation_from_action: action is not a bijection");
    hit[row] = true;
    m(row, col) = 1.0;
  }
  return UnitaryGate(std::move(m));
}

UnitaryGate permutation_from_action(const std::function<BitTriple(int, int, int)>& action) {
  return permutation_from_action(triple_action(action), 3);
}

BasisAction permutation_action(GateName name) {
  switch (name) {
    case GateName::I:
      return [](const BasisState& x) { return x; };
    case GateName::X:
      return [](const BasisState& x) { return BasisState({static_cast<std::uint8_t>(xor_add(1, x[0]))}); };
    case GateName::CNOT:
      return [](const BasisState& x) {
        return BasisState({static_cast<std::uint8_t>(x[0]), static_cast<std::uint8_t>(xor_add(x[1], x[0]))});
      };
    case GateName::SWAP:
      return [](const BasisState& x) {
        return BasisState({static_cast<std::uint8_t>(x[1]), static_cast<std::uint8_t>(x[0])});
      };
    case GateName::CCNOT:
      return triple_action(toffoli_action);
    case GateName::CSWAP:
      return triple_action(fredkin_action);
    case GateName::PERES:
      return triple_action(peres_action);
    default:
      throw DomainError(std::string(to_string(name)) + " is not a permutation gate");
  }
}

StateVector basis_action(GateName name, const BasisState& x) {
  using std::numbers::pi;
  require_arity(name, x);
  const std::size_t dim = std::size_t{1} << x.qubits();
  std::vector<Complex> amps(dim);
  if (arity(name) == 1) {
    const int a = x[0];
    const std::size_t same = static_cast<std::size_t>(a);
    const std::size_t flipped = static_cast<std::size_t>(xor_add(1, a));
    const double sign = a == 0 ? 1.0 : -1.0;  // (-1)^a
    switch (name) {
      case GateName::I: amps[same] = 1.0; break;
      case GateName::X: amps[flipped] = 1.0; break;
      case GateName::Y: amps[flipped] = kI * sign; break;
      case GateName::Z: amps[same] = sign; break;
      case GateName::H:
        amps[flipped] += kInvSqrt2;
        amps[same] += sign * kInvSqrt2;
        break;
      case GateName::S: amps[same] = a == 0 ? Complex{1.0} : kI; break;  // i^a
      case GateName::T: amps[same] = std::polar(1.0, pi / 4 * a); break;
      default: break;
    }
    return StateVector(std::move(amps));
  }
  amps[permutation_action(name)(x).index()] = 1.0;
  return StateVector(std::move(amps));
}

}  // namespace gateroots
