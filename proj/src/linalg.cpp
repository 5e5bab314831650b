#include "coxrig/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace coxrig {

std::string rat_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

bool MatQ::is_zero() const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

MatQ MatQ::operator*(const MatQ& o) const {
  MatQ r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
  MatQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
  MatQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
  return r;
}

MatQ MatQ::scaled(const Rat& c) const {
  MatQ r(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] * c;
  return r;
}

MatZ clear_denominators_rows(const MatQ& m) {
  MatZ z(m.rows, m.cols);
  Int l;
  for (int i = 0; i < m.rows; ++i) {
    l = 1;
    for (int j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols; ++j) {
      const Rat& q = m.at(i, j);
      z.at(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return z;
}

MatZ clear_denominators_global(const MatQ& m, Int& scale_out) {
  Int l = 1;
  for (const Rat& q : m.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  MatZ z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = m.a[i].get_num() * (l / m.a[i].get_den());
  scale_out = l;
  return z;
}

int rank_bareiss(MatZ m) {
  const int n = m.rows, c = m.cols;
  int rank = 0;
  Int prev = 1;
  Int t;
  while (rank < n && rank < c) {
    // pivot: smallest nonzero entry (by limb count) of the remaining block
    int pi = -1, pj = -1;
    size_t best = ~size_t{0};
    for (int i = rank; i < n; ++i)
      for (int j = rank; j < c; ++j) {
        const Int& v = m.at(i, j);
        if (v == 0) continue;
        size_t sz = mpz_size(v.get_mpz_t());
        if (sz < best) {
          best = sz;
          pi = i;
          pj = j;
          if (sz == 1 && mpz_cmpabs_ui(v.get_mpz_t(), 1) == 0) goto found;
        }
      }
    if (pi < 0) break;
  found:
    if (pi != rank)
      for (int j = 0; j < c; ++j) mpz_swap(m.at(rank, j).get_mpz_t(), m.at(pi, j).get_mpz_t());
    if (pj != rank)
      for (int i = 0; i < n; ++i) mpz_swap(m.at(i, rank).get_mpz_t(), m.at(i, pj).get_mpz_t());
    const Int& piv = m.at(rank, rank);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = rank + 1; j < c; ++j) {
        // m[i][j] <- (piv*m[i][j] - m[i][rank]*m[rank][j]) / prev, exact
        mpz_mul(t.get_mpz_t(), piv.get_mpz_t(), m.at(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), m.at(i, rank).get_mpz_t(), m.at(rank, j).get_mpz_t());
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, rank) = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Word-size modular layer (62-bit primes, __int128 products).

namespace {

using u64 = unsigned long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin witness set for n < 2^64
  for (u64 a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64>& prime_pool() {
  static std::vector<u64> pool;
  return pool;
}

std::mutex& prime_mutex() {
  static std::mutex m;
  return m;
}

void ensure_primes(size_t n) {
  std::lock_guard<std::mutex> lock(prime_mutex());
  std::vector<u64>& pool = prime_pool();
  u64 cand = pool.empty() ? ((1ul << 62) - 1) : pool.back() - 2;
  while (pool.size() < n) {
    while (!is_prime_u64(cand)) cand -= 2;
    pool.push_back(cand);
    cand -= 2;
  }
}

u64 modinv(u64 a, u64 p) { return powmod(a, p - 2, p); }

// charpoly of a Hessenberg matrix mod p: d_k = (x - h[k-1][k-1]) d_{k-1}
//   - sum_i h[i-1][k-1] * (prod_{j=i..k-2} h[j+1][j]) * d_{i-1}
std::vector<u64> charpoly_hessenberg_mod(const std::vector<u64>& h, int n, u64 p) {
  auto H = [&](int i, int j) { return h[static_cast<size_t>(i) * n + j]; };
  std::vector<std::vector<u64>> d(n + 1);
  d[0] = {1 % p};
  for (int k = 1; k <= n; ++k) {
    std::vector<u64>& dk = d[k];
    dk.assign(k + 1, 0);
    const std::vector<u64>& dk1 = d[k - 1];
    u64 diag = H(k - 1, k - 1);
    for (int t = 0; t < k; ++t) {
      dk[t + 1] = (dk[t + 1] + dk1[t]) % p;
      dk[t] = (dk[t] + p - mulmod(diag, dk1[t], p)) % p;
    }
    u64 subprod = 1 % p;
    for (int i = k - 1; i >= 1; --i) {
      subprod = mulmod(subprod, H(i, i - 1), p);
      if (subprod == 0) break;
      u64 f = mulmod(H(i - 1, k - 1), subprod, p);
      if (f == 0) continue;
      const std::vector<u64>& di = d[i - 1];
      for (int t = 0; t < i; ++t) dk[t] = (dk[t] + p - mulmod(f, di[t], p)) % p;
    }
  }
  return d[n];
}

std::vector<u64> charpoly_mod(std::vector<u64> a, int n, u64 p) {
  auto A = [&](int i, int j) -> u64& { return a[static_cast<size_t>(i) * n + j]; };
  // Hessenberg reduction by similarity transformations
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (A(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k + 1, j));
      for (int i = 0; i < n; ++i) std::swap(A(i, piv), A(i, k + 1));
    }
    u64 inv = modinv(A(k + 1, k), p);
    for (int i = k + 2; i < n; ++i) {
      if (A(i, k) == 0) continue;
      u64 f = mulmod(A(i, k), inv, p);
      // row_i -= f * row_{k+1};  col_{k+1} += f * col_i
      for (int j = k; j < n; ++j) A(i, j) = (A(i, j) + p - mulmod(f, A(k + 1, j), p)) % p;
      for (int j = 0; j < n; ++j) A(j, k + 1) = (A(j, k + 1) + mulmod(f, A(j, i), p)) % p;
    }
  }
  return charpoly_hessenberg_mod(a, n, p);
}

Int coeff_bound(const MatZ& m) {
  // |c_k| <= sum_j C(n,j) B^j = (B+1)^n with B the max row 1-norm
  Int b = 0, rowsum, t;
  for (int i = 0; i < m.rows; ++i) {
    rowsum = 0;
    for (int j = 0; j < m.cols; ++j) {
      mpz_abs(t.get_mpz_t(), m.at(i, j).get_mpz_t());
      rowsum += t;
    }
    if (rowsum > b) b = rowsum;
  }
  b += 1;
  Int bound;
  mpz_pow_ui(bound.get_mpz_t(), b.get_mpz_t(), m.rows);
  return bound;
}

std::vector<u64> reduce_mod(const MatZ& m, u64 p) {
  std::vector<u64> r(m.a.size());
  for (size_t i = 0; i < m.a.size(); ++i) r[i] = mpz_fdiv_ui(m.a[i].get_mpz_t(), p);
  return r;
}

}  // namespace

namespace detail {
std::vector<unsigned long> crt_primes(size_t n_primes) {
  ensure_primes(n_primes);
  std::lock_guard<std::mutex> lock(prime_mutex());
  return {prime_pool().begin(), prime_pool().begin() + n_primes};
}
}  // namespace detail

std::vector<Int> charpoly_int(const MatZ& m) {
  const int n = m.rows;
  if (n == 0) return {Int(1)};
  Int bound = 2 * coeff_bound(m);

  std::vector<Int> coeffs(n + 1, Int(0));
  coeffs[n] = 1;
  Int modulus = 1;
  size_t used = 0;
  while (modulus <= bound) {
    ensure_primes(used + 1);
    u64 p;
    {
      std::lock_guard<std::mutex> lock(prime_mutex());
      p = prime_pool()[used];
    }
    ++used;
    std::vector<u64> cp = charpoly_mod(reduce_mod(m, p), n, p);
    // Garner step: x += modulus * ((r - x) * modulus^{-1} mod p)
    u64 minv = modinv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (int k = 0; k < n; ++k) {
      u64 xk = mpz_fdiv_ui(coeffs[k].get_mpz_t(), p);
      u64 t = mulmod((cp[k] + p - xk) % p, minv, p);
      if (t) coeffs[k] += modulus * Int(static_cast<unsigned long>(t));
    }
    modulus *= Int(static_cast<unsigned long>(p));
  }
  Int half = modulus / 2;
  for (int k = 0; k < n; ++k)
    if (coeffs[k] > half) coeffs[k] -= modulus;
  return coeffs;
}

bool is_nilpotent_int(const MatZ& m) {
  const int n = m.rows;
  if (n == 0) return true;
  Int bound = 2 * coeff_bound(m);
  Int modulus = 1;
  size_t used = 0;
  while (modulus <= bound) {
    ensure_primes(used + 1);
    u64 p;
    {
      std::lock_guard<std::mutex> lock(prime_mutex());
      p = prime_pool()[used];
    }
    ++used;
    std::vector<u64> cp = charpoly_mod(reduce_mod(m, p), n, p);
    for (int k = 0; k < n; ++k)
      if (cp[k] != 0) return false;
    modulus *= Int(static_cast<unsigned long>(p));
  }
  return true;
}

std::vector<Rat> charpoly_low_coeffs_mat(const MatQ& m, int upto) {
  const int n = m.rows;
  if (upto > n) throw std::invalid_argument("charpoly_low_coeffs: upto exceeds dimension");
  if (n == 0) return {Rat(1)};
  Int den;
  MatZ z = clear_denominators_global(m, den);
  std::vector<Int> cz = charpoly_int(z);
  // eigenvalues of den*M are den times those of M: c_k(M) = c_k(den*M) / den^(n-k)
  std::vector<Rat> out(upto + 1);
  Int pw;
  for (int k = 0; k <= upto; ++k) {
    mpz_pow_ui(pw.get_mpz_t(), den.get_mpz_t(), n - k);
    Rat q(cz[k], pw);
    q.canonicalize();
    out[k] = q;
  }
  return out;
}

std::vector<Rat> poly_interpolate(const std::vector<long>& nodes, const std::vector<Rat>& values) {
  const size_t n = nodes.size();
  std::vector<Rat> dd = values;  // divided differences, Newton form
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rat(nodes[i] - nodes[i - j]);
      if (i == j) break;
    }
  // expand sum_k dd[k] * prod_{i<k} (x - nodes[i])
  std::vector<Rat> poly(n, Rat(0));
  std::vector<Rat> basis(n, Rat(0));  // running product
  basis[0] = 1;
  size_t deg = 0;
  for (size_t k = 0; k < n; ++k) {
    if (dd[k] != 0)
      for (size_t t = 0; t <= deg; ++t) poly[t] += dd[k] * basis[t];
    if (k + 1 < n) {
      // basis *= (x - nodes[k])
      for (size_t t = deg + 1; t > 0; --t) basis[t] = basis[t - 1] - Rat(nodes[k]) * basis[t];
      basis[0] = -Rat(nodes[k]) * basis[0];
      ++deg;
    }
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

}  // namespace coxrig
