#include "gateroots/involution.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gateroots {

namespace {

using std::numbers::pi;

// e^{i pi/4}/sqrt(2) and e^{-i pi/4}/sqrt(2), exact in binary.
constexpr Complex kPlusHalf{0.5, 0.5};
constexpr Complex kMinusHalf{0.5, -0.5};

// Spectral roots snap eigenvalues this close to -1 onto the +pi branch.
constexpr double kMinusOneSnap = 1e-10;
// Eigenvalues of (U + U^dag)/2 closer than this share a cluster that is
// split by (U - U^dag)/2i.
constexpr double kClusterTol = 1e-9;

void require_involution(const UnitaryGate& a, const char* op) {
  const double residual = involution_residual(a.matrix());
  if (residual > kPredicateTol) {
    throw DomainError(std::string(op) + ": gate is not an involution (||A^2 - I||_F = " + std::to_string(residual) + ")");
  }
}

void require_order(unsigned n, const char* op) {
  if (n == 0) throw DomainError(std::string(op) + ": root order must be at least 1");
}

// e^{i pi/n}, exact for n = 1, 2.
Complex half_turn_root(unsigned n) {
  if (n == 1) return -1.0;
  if (n == 2) return kI;
  return std::polar(1.0, pi / n);
}

// W^dag op W, where W is columns [first, first + count) of v.
SquareMatrix compress(const SquareMatrix& op, const SquareMatrix& v, std::size_t first, std::size_t count) {
  SquareMatrix out(count);
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) acc += std::conj(v(r, first + i)) * op(r, c) * v(c, first + j);
      out(i, j) = acc;
    }
  return out;
}

// Orthonormal eigenbasis of a unitary: diagonalise its Hermitian part, then
// split each degenerate cluster with the anti-Hermitian part (eigenvalues
// e^{+i theta} and e^{-i theta} share a real part but not an imaginary one).
SquareMatrix unitary_eigenbasis(const SquareMatrix& u) {
  const std::size_t n = u.dim();
  const SquareMatrix u_dag = dagger(u);
  const SquareMatrix re_part = 0.5 * (u + u_dag);
  const SquareMatrix im_part = Complex{0.0, -0.5} * (u - u_dag);

  const EigenDecomposition outer = hermitian_eig(re_part);
  SquareMatrix v = outer.eigenvectors;

  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && outer.eigenvalues[end] - outer.eigenvalues[begin] <= kClusterTol) ++end;
    const std::size_t count = end - begin;
    if (count > 1) {
      const EigenDecomposition inner = hermitian_eig(compress(im_part, v, begin, count));
      SquareMatrix block(n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < count; ++j) {
          Complex acc = 0.0;
          for (std::size_t k = 0; k < count; ++k) acc += v(r, begin + k) * inner.eigenvectors(k, j);
          block(r, j) = acc;
        }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < count; ++j) v(r, begin + j) = block(r, j);
    }
    begin = end;
  }
  return v;
}

}  // namespace

SquareMatrix euler(const UnitaryGate& a, double alpha) {
  require_involution(a, "euler");
  return std::cos(alpha) * identity(a.dim()) + Complex{0.0, std::sin(alpha)} * a.matrix();
}

HermitianGenerator generator(const UnitaryGate& a) {
  require_involution(a, "generator");
  if (!is_hermitian(a.matrix())) throw DomainError("generator: involution is not Hermitian");
  return {(pi / 2) * (identity(a.dim()) - a.matrix()), a.dim()};
}

RootResult nth_root_involution(const UnitaryGate& a, unsigned n) {
  require_order(n, "nth_root_involution");
  require_involution(a, "nth_root_involution");
  if (n == 1) return {a, 1, RootMethod::ClosedForm};
  // I + (w - 1)(I - A)/2 written as P+ + w P- with P+- = (I +- A)/2.
  const SquareMatrix id = identity(a.dim());
  const SquareMatrix plus = 0.5 * (id + a.matrix());
  const SquareMatrix minus = 0.5 * (id - a.matrix());
  return {UnitaryGate(plus + half_turn_root(n) * minus), n, RootMethod::ClosedForm};
}

SquareMatrix sqrt_formula_unchecked(const SquareMatrix& a) {
  return kPlusHalf * identity(a.dim()) + kMinusHalf * a;
}

RootResult sqrt_involution(const UnitaryGate& a) {
  require_involution(a, "sqrt_involution");
  return {UnitaryGate(sqrt_formula_unchecked(a.matrix())), 2, RootMethod::ClosedForm};
}

RootResult principal_root(const UnitaryGate& u, unsigned n) {
  require_order(n, "principal_root");
  if (n == 1) return {u, 1, RootMethod::Spectral};

  const SquareMatrix v = unitary_eigenbasis(u.matrix());
  const SquareMatrix d = mul(mul(dagger(v), u.matrix()), v);
  std::vector<Complex> root_phases(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const Complex lambda = d(k, k);
    const double theta = std::abs(lambda + 1.0) <= kMinusOneSnap ? pi : std::arg(lambda);
    root_phases[k] = std::polar(1.0, theta / n);
  }
  UnitaryGate root(mul(mul(v, diagonal(root_phases)), dagger(v)));
  const double residual = frob_dist(power(root.matrix(), n), u.matrix());
  if (residual > kPredicateTol) {
    throw DomainError("principal_root: spectral root is inaccurate (residual " + std::to_string(residual) + ")");
  }
  return {std::move(root), n, RootMethod::Spectral};
}

StateVector root_action_state(GateName g, const BasisState& x) {
  switch (g) {
    case GateName::X:
    case GateName::Y:
    case GateName::Z:
    case GateName::H:
    case GateName::CCNOT:
    case GateName::CSWAP:
    case GateName::PERES:
      break;
    default:
      throw DomainError("root_action_state: no action formula for " + std::string(to_string(g)));
  }
  const StateVector image = basis_action(g, x);  // checks arity
  std::vector<Complex> amps(image.dim());
  amps[x.index()] += kPlusHalf;
  for (std::size_t k = 0; k < image.dim(); ++k) amps[k] += kMinusHalf * image[k];
  return StateVector(std::move(amps));
}

}  // namespace gateroots
