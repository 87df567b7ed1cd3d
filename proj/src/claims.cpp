#include "gateroots/claims.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>
#include <tuple>

#include "gateroots/expr.hpp"
#include "gateroots/involution.hpp"

namespace gateroots {

SquareMatrix commutator(const SquareMatrix& a, const SquareMatrix& b) { return mul(a, b) - mul(b, a); }

SquareMatrix anticommutator(const SquareMatrix& a, const SquareMatrix& b) { return mul(a, b) + mul(b, a); }

std::string_view to_string(ClaimStatus status) { return status == ClaimStatus::Holds ? "HOLDS" : "FAILS"; }

SquareMatrix ClaimSide::evaluate() const { return scalar * value(); }

namespace {

std::string scaled(const std::string& scalar_text, const std::string& body) {
  return scalar_text.empty() ? body : scalar_text + " " + body;
}

}  // namespace

ClaimSide gate_side(std::string_view expr, Complex scalar, std::string scalar_text) {
  GateExprPtr parsed = parse_expr(expr);
  return {scaled(scalar_text, to_string(*parsed)), [parsed] { return evaluate(*parsed).matrix(); }, scalar};
}

ClaimSide commutator_side(std::string_view a, std::string_view b, Complex scalar, std::string scalar_text) {
  GateExprPtr pa = parse_expr(a);
  GateExprPtr pb = parse_expr(b);
  return {scaled(scalar_text, "[" + to_string(*pa) + ", " + to_string(*pb) + "]"),
          [pa, pb] { return commutator(evaluate(*pa).matrix(), evaluate(*pb).matrix()); }, scalar};
}

ClaimSide anticommutator_side(std::string_view a, std::string_view b, Complex scalar, std::string scalar_text) {
  GateExprPtr pa = parse_expr(a);
  GateExprPtr pb = parse_expr(b);
  return {scaled(scalar_text, "{" + to_string(*pa) + ", " + to_string(*pb) + "}"),
          [pa, pb] { return anticommutator(evaluate(*pa).matrix(), evaluate(*pb).matrix()); }, scalar};
}

ClaimSide matrix_side(std::string text, SquareMatrix m, Complex scalar) {
  return {std::move(text), [m = std::move(m)] { return m; }, scalar};
}

ClaimSide computed_side(std::string text, std::function<SquareMatrix()> value) {
  return {std::move(text), std::move(value), 1.0};
}

namespace {

using std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

Complex e_i(double angle) { return std::polar(1.0, angle); }

const UnitaryGate& g(GateName name) { return gate(name); }

// Matrix whose column x is column(x) for every basis state x of `qubits`.
SquareMatrix from_columns(std::size_t qubits, const std::function<std::vector<Complex>(const BasisState&)>& column) {
  const std::size_t dim = std::size_t{1} << qubits;
  SquareMatrix m(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::vector<Complex> amps = column(BasisState::from_index(col, qubits));
    for (std::size_t row = 0; row < dim; ++row) m(row, col) = amps[row];
  }
  return m;
}

std::vector<Complex> amplitudes(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

SquareMatrix action_matrix(GateName name) {
  return from_columns(arity(name), [name](const BasisState& x) { return amplitudes(basis_action(name, x)); });
}

SquareMatrix root_action_matrix(GateName name) {
  return from_columns(arity(name), [name](const BasisState& x) { return amplitudes(root_action_state(name, x)); });
}

// |x> with amplitude c on basis index k, 2-dimensional.
std::vector<Complex> ket(std::size_t k, Complex c) {
  std::vector<Complex> out(2);
  out[k] = c;
  return out;
}

// The 8x8 Toffoli exponent block: zeros except [[1, -1], [-1, 1]] on the
// last two coordinates.
SquareMatrix toffoli_exponent() {
  SquareMatrix m(8);
  m(6, 6) = 1;
  m(6, 7) = -1;
  m(7, 6) = -1;
  m(7, 7) = 1;
  return m;
}

SquareMatrix toffoli_explicit() {
  SquareMatrix m = identity(8);
  m(6, 6) = 0;
  m(7, 7) = 0;
  m(6, 7) = 1;
  m(7, 6) = 1;
  return m;
}

SquareMatrix xx_exponent() {
  return SquareMatrix{{1, 0, 0, -1}, {0, 1, -1, 0}, {0, -1, 1, 0}, {-1, 0, 0, 1}};
}

SquareMatrix xx_root_explicit() {
  const Complex p = e_i(pi / 4);
  const Complex m = e_i(-pi / 4);
  return kInvSqrt2 * SquareMatrix{{p, 0, 0, m}, {0, p, m, 0}, {0, m, p, 0}, {m, 0, 0, p}};
}

SquareMatrix sqrt_h_explicit() {
  const double c2 = std::pow(std::cos(pi / 8), 2);
  const double s2 = std::pow(std::sin(pi / 8), 2);
  const Complex off = Complex{1.0, -1.0} / (2.0 * std::numbers::sqrt2);
  return SquareMatrix{{Complex{c2, s2}, off}, {off, Complex{s2, c2}}};
}

SquareMatrix h_half_exponent() {
  const double c2 = std::pow(std::cos(pi / 8), 2);
  const double s2 = std::pow(std::sin(pi / 8), 2);
  const double off = -1.0 / (2.0 * std::numbers::sqrt2);
  return SquareMatrix{{s2, off}, {off, c2}};
}

std::vector<Claim> build_registry() {
  const Complex w = e_i(pi / 4);
  const Complex w_bar = e_i(-pi / 4);
  const SquareMatrix i2 = identity(2);
  const SquareMatrix& hm = g(GateName::H).matrix();

  std::vector<Claim> out;
  auto add = [&](std::string id, std::string description, ClaimSide lhs, ClaimSide rhs, std::string ref,
                 ClaimStatus expected) {
    out.push_back({std::move(id), std::move(description), std::move(lhs), std::move(rhs), std::move(ref), expected});
  };
  constexpr auto kHolds = ClaimStatus::Holds;
  constexpr auto kFails = ClaimStatus::Fails;

  // ---- Euler relation ------------------------------------------------------
  const auto euler_h = [](double alpha, const char* alpha_text) {
    return computed_side(std::string("exp(i ") + alpha_text + " H)", [alpha] { return euler(g(GateName::H), alpha); });
  };
  add("EULER-PI", "e^{i pi A} = -I for an involution (A = H)", euler_h(pi, "pi"), matrix_side("-I", -identity(2)),
      "Euler relation, alpha = pi", kHolds);
  add("EULER-HALFPI", "e^{i pi/2 A} = iA for an involution (A = H)", euler_h(pi / 2, "pi/2"), gate_side("H", kI, "i"),
      "Euler relation, alpha = pi/2", kHolds);
  add("EULER-QUARTER-AS-PRINTED",
      "e^{i pi/4 A} = (I + A)/sqrt2 as claimed (exponent without i); not unitary for an involution, so it cannot "
      "equal the unitary e^{i pi/4 A}",
      euler_h(pi / 4, "pi/4"), matrix_side("(I + H)/sqrt2", kInvSqrt2 * (i2 + hm)), "Euler relation, alpha = pi/4", kFails);
  add("EULER-QUARTER-CORRECTED", "e^{i pi/4 A} = (I + iA)/sqrt2 (A = H)", euler_h(pi / 4, "pi/4"),
      matrix_side("(I + iH)/sqrt2", kInvSqrt2 * (i2 + kI * hm)), "Euler relation, alpha = pi/4", kHolds);

  // ---- one-qubit catalog -------------------------------------------------
  add("PAULI-SQ", "X^2 = Y^2 = Z^2 = I, checked as (X.X) x (Y.Y) x (Z.Z) = I x I x I",
      gate_side("(X . X) x (Y . Y) x (Z . Z)"), gate_side("I x I x I"), "Pauli matrices are self-inverse", kHolds);
  add("HADAMARD-DEF", "H = (X + Z)/sqrt2", gate_side("H"),
      computed_side("(X + Z)/sqrt2",
                    [] { return (1.0 / std::numbers::sqrt2) * (g(GateName::X).matrix() + g(GateName::Z).matrix()); }),
      "Hadamard gate definition", kHolds);

  struct ActionText {
    GateName name;
    const char* id;
    const char* formula;
  };
  for (const ActionText& a : {ActionText{GateName::I, "ACTION-I", "I|a> = |a>"},
                              ActionText{GateName::X, "ACTION-X", "X|a> = |1+a>"},
                              ActionText{GateName::Y, "ACTION-Y", "Y|a> = i(-1)^a |1+a>"},
                              ActionText{GateName::Z, "ACTION-Z", "Z|a> = (-1)^a |a>"},
                              ActionText{GateName::H, "ACTION-H", "H|a> = (|1+a> + (-1)^a |a>)/sqrt2"},
                              ActionText{GateName::S, "ACTION-S", "S|a> = i^a |a>"},
                              ActionText{GateName::T, "ACTION-T", "T|a> = e^{i pi a/4} |a>"}}) {
    const GateName name = a.name;
    add(a.id, std::string("matrix agrees with the basis action ") + a.formula + " (+ is xor)",
        gate_side(to_string(name)), computed_side(a.formula, [name] { return action_matrix(name); }),
        "action on basis states |a>", kHolds);
  }

  // ---- square roots ------------------------------------------------------
  add("SQRT-X", "sqrt(X) = 1/2 [[1+i, 1-i], [1-i, 1+i]]", gate_side("sqrt(X)"),
      matrix_side("1/2 [[1+i, 1-i], [1-i, 1+i]]", SquareMatrix{{{1, 1}, {1, -1}}, {{1, -1}, {1, 1}}}, 0.5),
      "square root of X", kHolds);
  add("SQRT-Y", "sqrt(Y) = 1/2 [[1+i, -1-i], [1+i, 1+i]]", gate_side("sqrt(Y)"),
      matrix_side("1/2 [[1+i, -1-i], [1+i, 1+i]]", SquareMatrix{{{1, 1}, {-1, -1}}, {{1, 1}, {1, 1}}}, 0.5),
      "square root of Y", kHolds);
  add("SQRT-Z", "sqrt(Z) = [[1, 0], [0, i]]", gate_side("sqrt(Z)"),
      matrix_side("[[1, 0], [0, i]]", SquareMatrix{{1, 0}, {0, kI}}), "square root of Z", kHolds);
  add("SQRT-H", "sqrt(H) = [[cos^2(pi/8) + i sin^2(pi/8), (1-i)/(2 sqrt2)], [(1-i)/(2 sqrt2), sin^2(pi/8) + i cos^2(pi/8)]]",
      gate_side("sqrt(H)"), matrix_side("explicit sqrt(H) matrix", sqrt_h_explicit()), "square root of H", kHolds);
  for (GateName name : {GateName::X, GateName::Y, GateName::Z, GateName::H}) {
    const std::string n(to_string(name));
    add("SQRT-EQUIV-" + n, "(e^{i pi/4} I + e^{-i pi/4} A)/sqrt2 = (iI + A)/sqrt(2i) for A = " + n,
        computed_side("(e^{i pi/4} I + e^{-i pi/4} " + n + ")/sqrt2",
                      [name] {
                        const SquareMatrix& a = g(name).matrix();
                        return (e_i(pi / 4) * identity(2) + e_i(-pi / 4) * a) * kInvSqrt2;
                      }),
        computed_side("(iI + " + n + ")/sqrt(2i)",
                      [name] { return (kI * identity(2) + g(name).matrix()) * (1.0 / std::sqrt(Complex{0.0, 2.0})); }),
        "two forms of the involution square root", kHolds);
  }
  add("SQRTZ-IS-S", "sqrt(Z) = S", gate_side("sqrt(Z)"), gate_side("S"), "square root of Z", kHolds);
  add("SQRTS-FORMULA",
      "(e^{i pi/4} I + e^{-i pi/4} S)/sqrt2 = T; the involution formula does not apply to S (S^2 = Z), and the "
      "expression gives diag(1, sqrt2 e^{i pi/4})",
      computed_side("(e^{i pi/4} I + e^{-i pi/4} S)/sqrt2",
                    [] { return (e_i(pi / 4) * identity(2) + e_i(-pi / 4) * g(GateName::S).matrix()) * kInvSqrt2; }),
      gate_side("T"), "square root of S", kFails);
  add("SQRTS-IS-T", "principal square root of S is T", computed_side("principal_root(S, 2)", [] {
        return principal_root(g(GateName::S), 2).root.matrix();
      }),
      gate_side("T"), "square root of S", kHolds);

  // ---- exponential forms -------------------------------------------------
  const auto expi_side = [](std::string text, double factor, SquareMatrix exponent) {
    return computed_side("exp(i " + text + ")", [factor, m = std::move(exponent)] { return expi(factor * m).matrix(); });
  };
  add("EXPFORM-X", "X = exp(i pi/2 [[1, -1], [-1, 1]])", expi_side("pi/2 [[1, -1], [-1, 1]]", pi / 2, {{1, -1}, {-1, 1}}),
      gate_side("X"), "exponential form of X", kHolds);
  add("EXPFORM-Y", "Y = exp(i pi/2 [[1, i], [-i, 1]])", expi_side("pi/2 [[1, i], [-i, 1]]", pi / 2, {{1, kI}, {-kI, 1}}),
      gate_side("Y"), "exponential form of Y", kHolds);
  add("EXPFORM-Z", "Z = exp(i pi/2 [[0, 0], [0, 2]])", expi_side("pi/2 [[0, 0], [0, 2]]", pi / 2, {{0, 0}, {0, 2}}),
      gate_side("Z"), "exponential form of Z", kHolds);
  add("EXPFORM-H", "H = exp(i pi/2 [[1 - 1/sqrt2, -1/sqrt2], [-1/sqrt2, 1 + 1/sqrt2]])",
      expi_side("pi/2 [[1 - 1/sqrt2, -1/sqrt2], [-1/sqrt2, 1 + 1/sqrt2]]", pi / 2,
                {{1 - kInvSqrt2, -kInvSqrt2}, {-kInvSqrt2, 1 + kInvSqrt2}}),
      gate_side("H"), "exponential form of H", kHolds);
  add("EXPFORM-H-ALT", "H = exp(i pi [[sin^2(pi/8), -1/(2 sqrt2)], [-1/(2 sqrt2), cos^2(pi/8)]])",
      expi_side("pi [[sin^2(pi/8), -1/(2 sqrt2)], [-1/(2 sqrt2), cos^2(pi/8)]]", pi, h_half_exponent()), gate_side("H"),
      "exponential form of H", kHolds);
  add("SQRTEXP-X", "exp(i pi/4 [[1, -1], [-1, 1]]) = 1/sqrt2 [[e^{i pi/4}, e^{-i pi/4}], [e^{-i pi/4}, e^{i pi/4}]]",
      expi_side("pi/4 [[1, -1], [-1, 1]]", pi / 4, {{1, -1}, {-1, 1}}),
      matrix_side("1/sqrt2 [[w, w*], [w*, w]]", SquareMatrix{{w, w_bar}, {w_bar, w}}, kInvSqrt2),
      "square root of X from its exponential form", kHolds);
  add("SQRTEXP-Y", "exp(i pi/4 [[1, i], [-i, 1]]) = 1/sqrt2 [[e^{i pi/4}, -e^{i pi/4}], [e^{i pi/4}, e^{i pi/4}]]",
      expi_side("pi/4 [[1, i], [-i, 1]]", pi / 4, {{1, kI}, {-kI, 1}}),
      matrix_side("1/sqrt2 [[w, -w], [w, w]]", SquareMatrix{{w, -w}, {w, w}}, kInvSqrt2),
      "square root of Y from its exponential form", kHolds);
  add("SQRTEXP-Z", "exp(i pi/4 [[0, 0], [0, 2]]) = [[1, 0], [0, i]]", expi_side("pi/4 [[0, 0], [0, 2]]", pi / 4, {{0, 0}, {0, 2}}),
      matrix_side("[[1, 0], [0, i]]", SquareMatrix{{1, 0}, {0, kI}}), "square root of Z from its exponential form",
      kHolds);
  add("SQRTEXP-H", "exp(i pi/2 [[sin^2(pi/8), -1/(2 sqrt2)], [-1/(2 sqrt2), cos^2(pi/8)]]) = explicit sqrt(H) matrix",
      expi_side("pi/2 [[sin^2(pi/8), -1/(2 sqrt2)], [-1/(2 sqrt2), cos^2(pi/8)]]", pi / 2, h_half_exponent()),
      matrix_side("explicit sqrt(H) matrix", sqrt_h_explicit()), "square root of H from its exponential form", kHolds);
  add("H-EIGVECS",
      "H (cos pi/8, sin pi/8) = +(cos pi/8, sin pi/8) and H (-sin pi/8, cos pi/8) = -(-sin pi/8, cos pi/8), with "
      "cos pi/8 = sqrt(2 + sqrt2)/2 and sin pi/8 = sqrt(2 - sqrt2)/2",
      computed_side("H V",
                    [] {
                      const double c = 0.5 * std::sqrt(2.0 + std::numbers::sqrt2);
                      const double s = 0.5 * std::sqrt(2.0 - std::numbers::sqrt2);
                      return mul(g(GateName::H).matrix(), SquareMatrix{{c, -s}, {s, c}});
                    }),
      computed_side("V diag(1, -1)",
                    [] { return SquareMatrix{{std::cos(pi / 8), std::sin(pi / 8)}, {std::sin(pi / 8), -std::cos(pi / 8)}}; }),
      "eigenvectors of the Hadamard matrix", kHolds);

  // ---- commutators and anticommutators ------------------------------------
  add("COMM-PAULI-XY", "[X, Y] = 2iZ", commutator_side("X", "Y"), gate_side("Z", Complex{0, 2}, "2i"),
      "commutators of Pauli matrices", kHolds);
  add("COMM-PAULI-YZ", "[Y, Z] = 2iX", commutator_side("Y", "Z"), gate_side("X", Complex{0, 2}, "2i"),
      "commutators of Pauli matrices", kHolds);
  add("COMM-PAULI-ZX", "[Z, X] = 2iY", commutator_side("Z", "X"), gate_side("Y", Complex{0, 2}, "2i"),
      "commutators of Pauli matrices", kHolds);
  add("COMM-SQRT-XY", "[sqrt(X), sqrt(Y)] = Z", commutator_side("sqrt(X)", "sqrt(Y)"), gate_side("Z"),
      "commutators of square roots of Pauli matrices", kHolds);
  add("COMM-SQRT-YZ", "[sqrt(Y), sqrt(Z)] = X", commutator_side("sqrt(Y)", "sqrt(Z)"), gate_side("X"),
      "commutators of square roots of Pauli matrices", kHolds);
  add("COMM-SQRT-ZX", "[sqrt(Z), sqrt(X)] = Y", commutator_side("sqrt(Z)", "sqrt(X)"), gate_side("Y"),
      "commutators of square roots of Pauli matrices", kHolds);
  add("COMM-H-SQRTX", "[H, sqrt(X)] = i e^{-i pi/4} Y", commutator_side("H", "sqrt(X)"),
      gate_side("Y", kI * w_bar, "i e^{-i pi/4}"), "commutators with the Hadamard gate", kHolds);
  add("COMM-H-SQRTY",
      "[H, sqrt(Y)] = -e^{i pi/4} H as claimed; direct evaluation gives e^{i pi/4} (Z - X)",
      commutator_side("H", "sqrt(Y)"), gate_side("H", -w, "-e^{i pi/4}"), "commutators with the Hadamard gate", kFails);
  add("COMM-H-SQRTZ", "[H, sqrt(Z)] = -i e^{-i pi/4} Y", commutator_side("H", "sqrt(Z)"),
      gate_side("Y", -kI * w_bar, "-i e^{-i pi/4}"), "commutators with the Hadamard gate", kHolds);
  add("COMM-SQRTH-SQRTX", "[sqrt(H), sqrt(X)] = Y/sqrt2", commutator_side("sqrt(H)", "sqrt(X)"),
      gate_side("Y", kInvSqrt2, "1/sqrt2"), "commutators with the square root of Hadamard", kHolds);
  add("COMM-SQRTH-SQRTY", "[sqrt(H), sqrt(Y)] = -H as claimed; direct evaluation gives (Z - X)/sqrt2",
      commutator_side("sqrt(H)", "sqrt(Y)"), gate_side("H", -1.0, "-1"),
      "commutators with the square root of Hadamard", kFails);
  add("COMM-SQRTH-SQRTZ", "[sqrt(H), sqrt(Z)] = -Y/sqrt2", commutator_side("sqrt(H)", "sqrt(Z)"),
      gate_side("Y", -kInvSqrt2, "-1/sqrt2"), "commutators with the square root of Hadamard", kHolds);
  add("COMM-H-SQRTY-COMPUTED", "[H, sqrt(Y)] = e^{i pi/4} (Z - X)", commutator_side("H", "sqrt(Y)"),
      computed_side("e^{i pi/4} (Z - X)", [w] { return w * (g(GateName::Z).matrix() - g(GateName::X).matrix()); }),
      "commutators with the Hadamard gate", kHolds);
  add("COMM-SQRTH-SQRTY-COMPUTED", "[sqrt(H), sqrt(Y)] = (Z - X)/sqrt2", commutator_side("sqrt(H)", "sqrt(Y)"),
      computed_side("(Z - X)/sqrt2",
                    [] { return Complex{kInvSqrt2} * (g(GateName::Z).matrix() - g(GateName::X).matrix()); }),
      "commutators with the square root of Hadamard", kHolds);
  add("ANTI-SQRT-XY", "{sqrt(X), sqrt(Y)} = Z as claimed; direct evaluation gives iI + X + Y",
      anticommutator_side("sqrt(X)", "sqrt(Y)"), gate_side("Z"), "anticommutators of square roots of Pauli matrices",
      kFails);
  add("ANTI-SQRT-YZ", "{sqrt(Y), sqrt(Z)} = X as claimed; direct evaluation gives iI + Y + Z",
      anticommutator_side("sqrt(Y)", "sqrt(Z)"), gate_side("X"), "anticommutators of square roots of Pauli matrices",
      kFails);
  add("ANTI-SQRT-ZX", "{sqrt(Z), sqrt(X)} = Y as claimed; direct evaluation gives iI + Z + X",
      anticommutator_side("sqrt(Z)", "sqrt(X)"), gate_side("Y"), "anticommutators of square roots of Pauli matrices",
      kFails);

  for (const auto& [id, a, b] : {std::tuple{"ANTI-SQRT-XY-COMPUTED", GateName::X, GateName::Y},
                                 std::tuple{"ANTI-SQRT-YZ-COMPUTED", GateName::Y, GateName::Z},
                                 std::tuple{"ANTI-SQRT-ZX-COMPUTED", GateName::Z, GateName::X}}) {
    const std::string sa(to_string(a));
    const std::string sb(to_string(b));
    add(id, "{sqrt(" + sa + "), sqrt(" + sb + ")} = iI + " + sa + " + " + sb,
        anticommutator_side("sqrt(" + sa + ")", "sqrt(" + sb + ")"),
        computed_side("iI + " + sa + " + " + sb,
                      [a, b] { return kI * identity(2) + g(a).matrix() + g(b).matrix(); }),
        "anticommutators of square roots of Pauli matrices", kHolds);
  }

  // ---- two-qubit gates ---------------------------------------------------
  add("CNOT-MATRIX", "CNOT built from |a,b> -> |a, b+a> is identity with rows 3, 4 swapped", gate_side("CNOT"),
      matrix_side("explicit CNOT matrix", SquareMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
      "CNOT matrix", kHolds);
  add("SWAP-MATRIX", "SWAP built from |a,b> -> |b,a> is identity with rows 2, 3 swapped", gate_side("SWAP"),
      matrix_side("explicit SWAP matrix", SquareMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}),
      "SWAP matrix", kHolds);
  add("CNOT-EXPFORM", "CNOT = exp(i pi/2 (I - CNOT))",
      expi_side("pi/2 [[0,0,0,0],[0,0,0,0],[0,0,1,-1],[0,0,-1,1]]", pi / 2,
                {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, -1}, {0, 0, -1, 1}}),
      gate_side("CNOT"), "exponential form of CNOT", kHolds);
  add("SWAP-EXPFORM", "SWAP = exp(i pi/2 (I - SWAP))",
      expi_side("pi/2 [[0,0,0,0],[0,1,-1,0],[0,-1,1,0],[0,0,0,0]]", pi / 2,
                {{0, 0, 0, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}}),
      gate_side("SWAP"), "exponential form of SWAP", kHolds);
  add("CNOT-SELFINV-AS-PRINTED", "CNOT^2 = CNOT as claimed; CNOT^2 = I", gate_side("CNOT . CNOT"), gate_side("CNOT"),
      "self-inverse two-qubit gates", kFails);
  add("CNOT-SELFINV-CORRECTED", "CNOT^2 = I", gate_side("CNOT . CNOT"), gate_side("I x I"),
      "self-inverse two-qubit gates", kHolds);
  add("SWAP-SELFINV-AS-PRINTED", "SWAP^2 = SWAP as claimed; SWAP^2 = I", gate_side("SWAP . SWAP"), gate_side("SWAP"),
      "self-inverse two-qubit gates", kFails);
  add("SWAP-SELFINV-CORRECTED", "SWAP^2 = I", gate_side("SWAP . SWAP"), gate_side("I x I"),
      "self-inverse two-qubit gates", kHolds);
  add("XX-EXPFORM", "X x X = exp(i pi/2 [[1,0,0,-1],[0,1,-1,0],[0,-1,1,0],[-1,0,0,1]])",
      expi_side("pi/2 [[1,0,0,-1],[0,1,-1,0],[0,-1,1,0],[-1,0,0,1]]", pi / 2, xx_exponent()), gate_side("X x X"),
      "exponential form of X x X", kHolds);
  add("XX-ROOT", "sqrt(X x X) = 1/sqrt2 (e^{i pi/4} on the diagonal, e^{-i pi/4} on the anti-diagonal)",
      gate_side("sqrt(X x X)"), matrix_side("explicit sqrt(X x X) matrix", xx_root_explicit()), "root of X x X", kHolds);
  add("XX-ROOT-EXPFORM", "exp(i pi/4 [[1,0,0,-1],[0,1,-1,0],[0,-1,1,0],[-1,0,0,1]]) = explicit sqrt(X x X)",
      expi_side("pi/4 [[1,0,0,-1],[0,1,-1,0],[0,-1,1,0],[-1,0,0,1]]", pi / 4, xx_exponent()),
      matrix_side("explicit sqrt(X x X) matrix", xx_root_explicit()), "root of X x X", kHolds);

  // ---- root actions on basis states ---------------------------------------
  add("ROOTACTION-X", "sqrt(X)|a> = (e^{i pi/4}|a> + e^{-i pi/4}|1+a>)/sqrt2",
      computed_side("sqrt(X)|a> formula",
                    [w, w_bar] {
                      return from_columns(1, [&](const BasisState& x) {
                        std::vector<Complex> v = ket(static_cast<std::size_t>(x[0]), w * kInvSqrt2);
                        v[static_cast<std::size_t>(xor_add(1, x[0]))] += w_bar * kInvSqrt2;
                        return v;
                      });
                    }),
      gate_side("sqrt(X)"), "action of sqrt(X) on |a>", kHolds);
  add("ROOTACTION-Y", "sqrt(Y)|a> = e^{i pi/4} (|a> + (-1)^a |1+a>)/sqrt2",
      computed_side("sqrt(Y)|a> formula",
                    [w] {
                      return from_columns(1, [&](const BasisState& x) {
                        const double sign = x[0] == 0 ? 1.0 : -1.0;
                        std::vector<Complex> v = ket(static_cast<std::size_t>(x[0]), w * kInvSqrt2);
                        v[static_cast<std::size_t>(xor_add(1, x[0]))] += w * kInvSqrt2 * sign;
                        return v;
                      });
                    }),
      gate_side("sqrt(Y)"), "action of sqrt(Y) on |a>", kHolds);
  add("ROOTACTION-Z", "sqrt(Z)|a> = (e^{i pi/4} + e^{-i pi/4} (-1)^a)/sqrt2 |a>",
      computed_side("sqrt(Z)|a> formula",
                    [w, w_bar] {
                      return from_columns(1, [&](const BasisState& x) {
                        const double sign = x[0] == 0 ? 1.0 : -1.0;
                        return ket(static_cast<std::size_t>(x[0]), (w + w_bar * sign) * kInvSqrt2);
                      });
                    }),
      gate_side("sqrt(Z)"), "action of sqrt(Z) on |a>", kHolds);
  add("ROOTACTION-H", "sqrt(H)|a> = (e^{i pi/4}/sqrt2 + e^{-i pi/4} (-1)^a/2)|a> + e^{-i pi/4}/2 |1+a>",
      computed_side("sqrt(H)|a> formula",
                    [w, w_bar] {
                      return from_columns(1, [&](const BasisState& x) {
                        const double sign = x[0] == 0 ? 1.0 : -1.0;
                        std::vector<Complex> v = ket(static_cast<std::size_t>(x[0]), w * kInvSqrt2 + 0.5 * w_bar * sign);
                        v[static_cast<std::size_t>(xor_add(1, x[0]))] += 0.5 * w_bar;
                        return v;
                      });
                    }),
      gate_side("sqrt(H)"), "action of sqrt(H) on |a>", kHolds);
  add("ROOTACTION-CCNOT", "sqrt(CCNOT)|a,b,c> = (e^{i pi/4}|a,b,c> + e^{-i pi/4}|a,b,c+ab>)/sqrt2",
      computed_side("sqrt(CCNOT)|a,b,c> formula", [] { return root_action_matrix(GateName::CCNOT); }),
      gate_side("sqrt(CCNOT)"), "action of the Toffoli root", kHolds);
  add("ROOTACTION-F", "sqrt(F)|a,b,c> = (e^{i pi/4}|a,b,c> + e^{-i pi/4}|a,b',c'>)/sqrt2",
      computed_side("sqrt(CSWAP)|a,b,c> formula", [] { return root_action_matrix(GateName::CSWAP); }),
      gate_side("sqrt(CSWAP)"), "action of the Fredkin root", kHolds);
  add("ROOTACTION-P",
      "the map |a,b,c> -> (e^{i pi/4}|a,b,c> + e^{-i pi/4}|a,b+a,c+ab>)/sqrt2 squares to P; it does not, since "
      "PERES is not an involution (its square is (iI + 2P - iP^2)/2)",
      computed_side("(sqrt(P)|a,b,c> formula)^2",
                    [] {
                      const SquareMatrix m = root_action_matrix(GateName::PERES);
                      return mul(m, m);
                    }),
      gate_side("PERES"), "action of the Peres root", kFails);

  // ---- three-qubit gates -------------------------------------------------
  add("TOFFOLI-MATRIX", "CCNOT built from |a,b,c> -> |a,b,c+ab> is identity with rows 7, 8 swapped",
      computed_side("permutation_from_action(toffoli)", [] { return permutation_from_action(toffoli_action).matrix(); }),
      matrix_side("explicit CCNOT matrix", toffoli_explicit()), "Toffoli gate matrix", kHolds);
  add("TOFFOLI-GEN", "generator of CCNOT is pi/2 times the explicit 8x8 exponent",
      computed_side("generator(CCNOT)", [] { return generator(g(GateName::CCNOT)).matrix; }),
      matrix_side("pi/2 [explicit 8x8 exponent]", toffoli_exponent(), pi / 2), "Toffoli gate and its generator", kHolds);
  add("TOFFOLI-EXPFORM", "CCNOT = exp(i pi/2 [explicit 8x8 exponent])",
      expi_side("pi/2 [explicit 8x8 exponent]", pi / 2, toffoli_exponent()), matrix_side("explicit CCNOT matrix", toffoli_explicit()),
      "Toffoli gate and its generator", kHolds);
  add("PERES-INVOLUTION", "P^2 = I is assumed when the involution root is applied to PERES; P^2 swaps |100>,|110> "
      "and |101>,|111> onto each other",
      gate_side("PERES . PERES"), gate_side("I x I x I"), "Peres gate", kFails);

  return out;
}

}  // namespace

const std::vector<Claim>& builtin_claims() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

ClaimResult evaluate_claim(const Claim& claim, double tol) {
  if (!(tol > 0.0)) throw DomainError("claim tolerance must be positive");
  ClaimResult result;
  result.id = claim.id;
  result.description = claim.description;
  result.reference = claim.reference;
  result.tolerance = tol;
  result.expected = claim.expected;
  try {
    result.residual = frob_dist(claim.lhs.evaluate(), claim.rhs.evaluate());
  } catch (const std::exception& e) {
    result.residual = std::numeric_limits<double>::infinity();
    result.error = e.what();
  }
  result.observed = result.residual <= tol ? ClaimStatus::Holds : ClaimStatus::Fails;
  result.matches_expected = result.observed == result.expected;
  return result;
}

VerificationReport run_all(double tol, std::string_view id_prefix) {
  if (!(tol > 0.0)) throw DomainError("claim tolerance must be positive");
  std::vector<const Claim*> selected;
  for (const Claim& claim : builtin_claims())
    if (claim.id.starts_with(id_prefix)) selected.push_back(&claim);

  // Workers write into fixed slots, so the output order is the registry order
  // regardless of scheduling.
  std::vector<ClaimResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers = std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), selected.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < selected.size(); k = next++) results[k] = evaluate_claim(*selected[k], tol);
      });
    }
  }

  VerificationReport report;
  for (ClaimResult& r : results) {
    (r.observed == ClaimStatus::Holds ? report.holds : report.fails) += 1;
    if (!r.matches_expected) {
      ++report.mismatches;
      report.overall_ok = false;
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace gateroots
