#pragma once

#include <vector>

#include "coxrig/numeric.hpp"

namespace coxrig {

/// Dense integer matrix, row major.
struct MatZ {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  MatZ() = default;
  MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

/// Dense rational matrix, row major.
struct MatQ {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  MatQ() = default;
  MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const;
  MatQ operator*(const MatQ& o) const;
  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;
  MatQ scaled(const Rat& c) const;
  bool operator==(const MatQ& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// Clear row denominators (row scaling preserves rank).
MatZ clear_denominators_rows(const MatQ& m);

/// Scale the whole matrix by the lcm of all entry denominators.
/// Returns the integer matrix and the scalar used.
MatZ clear_denominators_global(const MatQ& m, Int& scale_out);

/// Exact rank over Q via fraction-free (Bareiss) elimination with full
/// pivoting.  The intermediate entries are minors of the input, so every
/// division is exact; no floating point, no modular shortcuts.
int rank_bareiss(MatZ m);

inline int rank_exact(const MatQ& m) { return rank_bareiss(clear_denominators_rows(m)); }

/// Exact characteristic polynomial of an integer matrix: coefficients
/// c[0..n] of det(lambda*I - M), c[n] = 1.
///
/// Computed modulo enough word-size primes (Hessenberg reduction per prime)
/// and reconstructed by CRT against the a-priori coefficient bound
/// (B+1)^n with B the maximal row 1-norm.  All arithmetic is exact integer
/// arithmetic; the bound makes the reconstruction a proof.
std::vector<Int> charpoly_int(const MatZ& m);

/// True iff the characteristic polynomial is lambda^n.  Early-exits on the
/// first prime witnessing a nonzero low coefficient.
bool is_nilpotent_int(const MatZ& m);

/// Coefficients of lambda^0..lambda^upto of det(lambda*I - M) for a
/// rational matrix, exact.  upto must be <= dimension.
std::vector<Rat> charpoly_low_coeffs_mat(const MatQ& m, int upto);

/// Exact polynomial interpolation through (nodes[i], values[i]); returns
/// monomial coefficients, low degree first.
std::vector<Rat> poly_interpolate(const std::vector<long>& nodes, const std::vector<Rat>& values);

namespace detail {
/// First n_primes 62-bit primes used by the CRT layer (deterministic list).
std::vector<unsigned long> crt_primes(size_t n_primes);
}  // namespace detail

}  // namespace coxrig
