#include "gateroots/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gateroots {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("matrix entry is not finite");
    }
  }
}

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DomainError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                      std::to_string(b.dim()) + ")");
  }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DomainError("matrix dimension must be at least 1");
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DomainError("matrix dimension must be at least 1");
  if (entries_.size() != dim * dim) {
    throw DomainError("expected " + std::to_string(dim * dim) + " entries, got " +
                      std::to_string(entries_.size()));
  }
  require_finite(entries_);
}

SquareMatrix::SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
  if (dim_ == 0) throw DomainError("matrix dimension must be at least 1");
  entries_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DomainError("matrix literal is not square");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_);
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& rhs) {
  require_same_dim(*this, rhs, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& rhs) {
  require_same_dim(*this, rhs, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  require_finite(entries_);
  return *this;
}

SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
SquareMatrix operator-(SquareMatrix m) { return m *= -1.0; }
SquareMatrix operator*(Complex scale, SquareMatrix m) { return m *= scale; }
SquareMatrix operator*(SquareMatrix m, Complex scale) { return m *= scale; }

SquareMatrix identity(std::size_t dim) {
  SquareMatrix out(dim);
  for (std::size_t k = 0; k < dim; ++k) out(k, k) = 1.0;
  return out;
}

SquareMatrix diagonal(std::span<const Complex> values) {
  SquareMatrix out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out(k, k) = values[k];
  return out;
}

SquareMatrix mul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "mul");
  const std::size_t n = a.dim();
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

SquareMatrix dagger(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

SquareMatrix kron(const SquareMatrix& a, const SquareMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  SquareMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

SquareMatrix power(const SquareMatrix& a, unsigned n) {
  SquareMatrix out = identity(a.dim());
  for (unsigned k = 0; k < n; ++k) out = mul(out, a);
  return out;
}

double frobenius_norm(const SquareMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

double frob_dist(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "frob_dist");
  double sum = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) sum += std::norm(a.entries()[k] - b.entries()[k]);
  return std::sqrt(sum);
}

double unitarity_residual(const SquareMatrix& a) { return frob_dist(mul(a, dagger(a)), identity(a.dim())); }
double hermiticity_residual(const SquareMatrix& a) { return frob_dist(a, dagger(a)); }
double involution_residual(const SquareMatrix& a) { return frob_dist(mul(a, a), identity(a.dim())); }

bool is_unitary(const SquareMatrix& a, double tol) { return unitarity_residual(a) <= tol; }
bool is_hermitian(const SquareMatrix& a, double tol) { return hermiticity_residual(a) <= tol; }
bool is_involution(const SquareMatrix& a, double tol) { return involution_residual(a) <= tol; }

UnitaryGate::UnitaryGate(SquareMatrix matrix)
    : matrix_(std::move(matrix)), residual_(gateroots::unitarity_residual(matrix_)) {
  if (residual_ > kConstructionTol) {
    throw DomainError("matrix is not unitary (||UU^dag - I||_F = " + std::to_string(residual_) + ")");
  }
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-14;
// Components below this modulus do not count as "first nonzero" when fixing
// eigenvector phases.
constexpr double kPhaseAnchorTol = 1e-10;

double off_diagonal_norm(const SquareMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Zeroes a(p,q) with the unitary U = [[c, s e^{i phi}], [-s e^{-i phi}, c]]
// acting on coordinates p, q: a <- U^dag a U, v <- v U.
void jacobi_rotate(SquareMatrix& a, SquareMatrix& v, std::size_t p, std::size_t q) {
  const Complex b = a(p, q);
  const double r = std::abs(b);
  const Complex phase = b / r;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s * phase;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c;

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex x = a(k, p);
    const Complex y = a(k, q);
    a(k, p) = x * u_pp + y * u_qp;
    a(k, q) = x * u_pq + y * u_qq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex x = a(p, k);
    const Complex y = a(q, k);
    a(p, k) = std::conj(u_pp) * x + std::conj(u_qp) * y;
    a(q, k) = std::conj(u_pq) * x + std::conj(u_qq) * y;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex x = v(k, p);
    const Complex y = v(k, q);
    v(k, p) = x * u_pp + y * u_qp;
    v(k, q) = x * u_pq + y * u_qq;
  }
}

// Index of the first component above kPhaseAnchorTol, or dim if none.
std::size_t phase_anchor(const SquareMatrix& v, std::size_t col) {
  for (std::size_t row = 0; row < v.dim(); ++row)
    if (std::abs(v(row, col)) > kPhaseAnchorTol) return row;
  return v.dim();
}

}  // namespace

EigenDecomposition hermitian_eig(const SquareMatrix& g) {
  const std::size_t n = g.dim();
  const double scale = std::max(1.0, frobenius_norm(g));
  const double asym = hermiticity_residual(g);
  if (asym > 1e-10 * scale) {
    throw DomainError("hermitian_eig: matrix is not Hermitian (||G - G^dag||_F = " + std::to_string(asym) + ")");
  }

  SquareMatrix a = 0.5 * (g + dagger(g));
  SquareMatrix v = identity(n);
  const double threshold = kSweepTol * scale;

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != Complex{0.0, 0.0}) jacobi_rotate(a, v, p, q);
  }
  if (sweep == kMaxSweeps && off_diagonal_norm(a) > threshold) {
    throw DomainError("hermitian_eig: Jacobi iteration did not converge");
  }

  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t anchor = phase_anchor(v, col);
    if (anchor == n) continue;
    const Complex z = v(anchor, col);
    const Complex fix = std::conj(z) / std::abs(z);
    for (std::size_t row = 0; row < n; ++row) v(row, col) *= fix;
    v(anchor, col) = std::abs(z);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  // Within a cluster of equal eigenvalues, order columns by their phase anchor.
  const double tie_tol = 1e-12 * scale;
  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin + 1;
    while (end < n && a(order[end], order[end]).real() - a(order[begin], order[begin]).real() <= tie_tol) ++end;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin), order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t x, std::size_t y) { return phase_anchor(v, x) < phase_anchor(v, y); });
    begin = end;
  }

  EigenDecomposition out{std::vector<double>(n), SquareMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < n; ++row) out.eigenvectors(row, k) = v(row, order[k]);
  }
  return out;
}

UnitaryGate expi(const SquareMatrix& g) {
  const EigenDecomposition eig = hermitian_eig(g);
  std::vector<Complex> phases(eig.eigenvalues.size());
  std::transform(eig.eigenvalues.begin(), eig.eigenvalues.end(), phases.begin(),
                 [](double lambda) { return std::polar(1.0, lambda); });
  return UnitaryGate(mul(mul(eig.eigenvectors, diagonal(phases)), dagger(eig.eigenvectors)));
}

}  // namespace gateroots
