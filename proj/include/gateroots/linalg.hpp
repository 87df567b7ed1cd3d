#pragma once

// Dense complex linear algebra for the small (dim <= 8) matrices used by the
// gate calculus. Everything here is a pure function over immutable values.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gateroots/errors.hpp"

namespace gateroots {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Default tolerance for the is_* predicates.
inline constexpr double kPredicateTol = 1e-10;
/// Tolerance applied by construction checks (UnitaryGate, EigenDecomposition).
inline constexpr double kConstructionTol = 1e-12;

/// Dense row-major square matrix with finite complex entries.
class SquareMatrix {
 public:
  /// dim x dim zero matrix.
  explicit SquareMatrix(std::size_t dim);
  SquareMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-by-row literal, e.g. {{0, 1}, {1, 0}}.
  SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  SquareMatrix& operator+=(const SquareMatrix& rhs);
  SquareMatrix& operator-=(const SquareMatrix& rhs);
  SquareMatrix& operator*=(Complex scale);

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs);
SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs);
SquareMatrix operator-(SquareMatrix m);
SquareMatrix operator*(Complex scale, SquareMatrix m);
SquareMatrix operator*(SquareMatrix m, Complex scale);

SquareMatrix identity(std::size_t dim);
SquareMatrix diagonal(std::span<const Complex> values);
SquareMatrix mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix dagger(const SquareMatrix& a);
SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b);
/// a^n by repeated multiplication; n = 0 gives the identity.
SquareMatrix power(const SquareMatrix& a, unsigned n);

double frobenius_norm(const SquareMatrix& a);
double frob_dist(const SquareMatrix& a, const SquareMatrix& b);

double unitarity_residual(const SquareMatrix& a);   // ||A A^dag - I||_F
double hermiticity_residual(const SquareMatrix& a); // ||A - A^dag||_F
double involution_residual(const SquareMatrix& a);  // ||A^2 - I||_F

bool is_unitary(const SquareMatrix& a, double tol = kPredicateTol);
bool is_hermitian(const SquareMatrix& a, double tol = kPredicateTol);
bool is_involution(const SquareMatrix& a, double tol = kPredicateTol);

/// A matrix that passed the unitarity check (residual <= 1e-12) when built.
class UnitaryGate {
 public:
  explicit UnitaryGate(SquareMatrix matrix);

  const SquareMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }
  double unitarity_residual() const noexcept { return residual_; }

  friend bool operator==(const UnitaryGate& a, const UnitaryGate& b) { return a.matrix_ == b.matrix_; }

 private:
  SquareMatrix matrix_;
  double residual_;
};

/// Spectral data of a Hermitian matrix: G = V diag(eigenvalues) V^dag.
/// Eigenvalues ascend; column k of `eigenvectors` belongs to eigenvalue k and
/// has its first non-negligible component real and positive.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  SquareMatrix eigenvectors;
};

/// Cyclic complex Jacobi. Throws DomainError when G is not Hermitian within
/// 1e-10 max(1, ||G||_F).
EigenDecomposition hermitian_eig(const SquareMatrix& g);

/// exp(iG) for Hermitian G, as V diag(e^{i lambda}) V^dag.
UnitaryGate expi(const SquareMatrix& g);

}  // namespace gateroots
