#pragma once

// Shared test helpers: a seeded RNG, random matrix generators and a tiny
// independent matrix oracle that does not go through the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "gateroots/linalg.hpp"

namespace testing_support {

using gateroots::Complex;
using gateroots::SquareMatrix;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234abcdULL);
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex random_complex() { return {uniform(-1, 1), uniform(-1, 1)}; }

inline SquareMatrix random_matrix(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = random_complex();
  return m;
}

inline SquareMatrix random_hermitian(std::size_t dim) {
  const SquareMatrix m = random_matrix(dim);
  return Complex{0.5} * (m + gateroots::dagger(m));
}

inline std::vector<Complex> random_unit_vector(std::size_t dim) {
  std::vector<Complex> v(dim);
  double sum = 0;
  for (Complex& z : v) {
    z = random_complex();
    sum += std::norm(z);
  }
  for (Complex& z : v) z /= std::sqrt(sum);
  return v;
}

// ---- independent oracle ----------------------------------------------------
// Plain nested-vector matrices with schoolbook loops. Used to cross-check
// values the library computes through its own code paths.

using OMat = std::vector<std::vector<Complex>>;

inline OMat omul(const OMat& a, const OMat& b) {
  const std::size_t n = a.size();
  OMat c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline OMat oadd(const OMat& a, const OMat& b, Complex sb = 1.0) {
  OMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += sb * b[i][j];
  return c;
}

inline double ofrob(const OMat& a) {
  double s = 0;
  for (const auto& row : a)
    for (const Complex& z : row) s += std::norm(z);
  return std::sqrt(s);
}

inline OMat to_omat(const SquareMatrix& m) {
  OMat out(m.dim(), std::vector<Complex>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  return out;
}

inline double odist(const SquareMatrix& a, const OMat& b) { return ofrob(oadd(to_omat(a), b, -1.0)); }

}  // namespace testing_support
