#include "coxrig/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxrig {

bool GElement::is_zero() const {
  for (const Rat& c : cartan)
    if (c != 0) return false;
  for (const auto& [idx, c] : root_part)
    if (c != 0) return false;
  return true;
}

GElement& GElement::operator+=(const GElement& o) {
  for (size_t i = 0; i < cartan.size(); ++i) cartan[i] += o.cartan[i];
  for (const auto& [idx, c] : o.root_part) root_part[idx] += c;
  prune();
  return *this;
}

GElement& GElement::operator-=(const GElement& o) {
  for (size_t i = 0; i < cartan.size(); ++i) cartan[i] -= o.cartan[i];
  for (const auto& [idx, c] : o.root_part) root_part[idx] -= c;
  prune();
  return *this;
}

GElement GElement::scaled(const Rat& c) const {
  GElement r = *this;
  for (Rat& x : r.cartan) x *= c;
  for (auto& [idx, v] : r.root_part) v *= c;
  r.prune();
  return r;
}

void GElement::prune() {
  for (auto it = root_part.begin(); it != root_part.end();)
    it = it->second == 0 ? root_part.erase(it) : std::next(it);
}

GElement zero_element(const RootSystem& rs) {
  GElement x;
  x.cartan.assign(rs.rank, Rat(0));
  return x;
}

GElement root_vector(const RootSystem& rs, int root_index, Rat coeff) {
  GElement x = zero_element(rs);
  if (coeff != 0) x.root_part[root_index] = std::move(coeff);
  return x;
}

GElement coroot_vector(const RootSystem& rs, int simple_index, Rat coeff) {
  GElement x = zero_element(rs);
  x.cartan[simple_index] = std::move(coeff);
  return x;
}

int StructureConstants::string_down(int alpha, int beta) const {
  const RootSystem& rs = *rs_;
  std::vector<int> v = rs.roots[beta].coeffs;
  const std::vector<int>& a = rs.roots[alpha].coeffs;
  int p = 0;
  while (true) {
    for (size_t i = 0; i < v.size(); ++i) v[i] -= a[i];
    if (rs.find(v) < 0) break;
    ++p;
  }
  return p;
}

StructureConstants::StructureConstants(RootSystem rs) : rs_(std::make_shared<RootSystem>(std::move(rs))) {
  const RootSystem& R = *rs_;
  const int nr = static_cast<int>(R.n_roots());

  // positive roots ordered by (height, lex); lex is the root-system order
  std::vector<int> pos;
  for (int i = 0; i < nr; ++i)
    if (R.roots[i].height > 0) pos.push_back(i);
  std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
    if (R.roots[a].height != R.roots[b].height) return R.roots[a].height < R.roots[b].height;
    return R.roots[a].coeffs < R.roots[b].coeffs;
  });
  std::vector<int> order(nr, -1);
  for (size_t i = 0; i < pos.size(); ++i) order[pos[i]] = static_cast<int>(i);

  auto sum_of = [&](int a, int b) {
    std::vector<int> v = R.roots[a].coeffs;
    for (int j = 0; j < R.rank; ++j) v[j] += R.roots[b].coeffs[j];
    return R.find(v);
  };

  for (int gi : pos) {
    if (R.roots[gi].height < 2) continue;
    // extraspecial pair: minimal alpha with gamma - alpha a positive root
    int a_star = -1, b_star = -1;
    for (int alpha : pos) {
      std::vector<int> diff = R.roots[gi].coeffs;
      for (int j = 0; j < R.rank; ++j) diff[j] -= R.roots[alpha].coeffs[j];
      int beta = R.find(diff);
      if (beta >= 0 && R.roots[beta].height > 0) {
        a_star = alpha;
        b_star = beta;
        break;
      }
    }
    if (a_star < 0) throw std::logic_error("no special pair for a non-simple root");
    put(a_star, b_star, string_down(a_star, b_star) + 1);
    put(b_star, a_star, -(string_down(a_star, b_star) + 1));

    // remaining special pairs (xi, eta) with xi + eta = gamma, from the
    // Jacobi identity on (X_{-a*}, X_xi, X_eta):
    //   N(xi,eta) N(-a*,gamma) + N(eta,-a*) N(xi,eta-a*) + N(-a*,xi) N(eta,xi-a*) = 0
    for (int xi : pos) {
      if (order[xi] <= order[a_star]) continue;
      std::vector<int> diff = R.roots[gi].coeffs;
      for (int j = 0; j < R.rank; ++j) diff[j] -= R.roots[xi].coeffs[j];
      int eta = R.find(diff);
      if (eta < 0 || R.roots[eta].height <= 0 || order[xi] >= order[eta]) continue;

      const int neg_a = R.negative_of[a_star];
      long num = 0;
      int em = sum_of(eta, neg_a);
      if (em >= 0) num += static_cast<long>(derive(eta, neg_a)) * derive(xi, em);
      int xm = sum_of(xi, neg_a);
      if (xm >= 0) num += static_cast<long>(derive(neg_a, xi)) * derive(eta, xm);
      const int den = derive(neg_a, gi);
      if (den == 0 || num % den != 0) throw std::logic_error("structure constant derivation failed");
      int val = static_cast<int>(-num / den);
      if (std::abs(val) != string_down(xi, eta) + 1)
        throw std::logic_error("structure constant magnitude violates the root-string rule");
      put(xi, eta, val);
      put(eta, xi, -val);
    }
  }

  // fill the table for all remaining (mixed and negative) pairs
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      if (n_.count(key(i, j))) continue;
      int s = sum_of(i, j);
      if (s < 0) continue;
      put(i, j, derive(i, j));
    }
}

int StructureConstants::get_checked(int i, int j) const {
  auto it = n_.find(key(i, j));
  if (it == n_.end()) throw std::logic_error("structure constant not yet derived");
  return it->second;
}

// Reduce an arbitrary defined pair to stored positive pairs using
//   N(x,y) = -N(y,x),  N(x,y) = -N(-x,-y),
// and, for x + y + z = 0,  N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y).
int StructureConstants::derive(int i, int j) const {
  const RootSystem& R = *rs_;
  {
    auto it = n_.find(key(i, j));
    if (it != n_.end()) return it->second;
  }
  const bool pi = R.roots[i].height > 0, pj = R.roots[j].height > 0;
  if (pi && pj) return get_checked(i, j);
  if (!pi && !pj) return -derive(R.negative_of[i], R.negative_of[j]);
  if (!pi) return -derive(j, i);
  // x positive, y negative, z' = x + y a root
  std::vector<int> v = R.roots[i].coeffs;
  for (int t = 0; t < R.rank; ++t) v[t] += R.roots[j].coeffs[t];
  int z = R.find(v);
  if (z < 0) return 0;
  if (R.roots[z].height > 0) {
    // N(x,y) = -(|z|^2/|x|^2) N(-y, z), with (-y, z) positive summing to x
    long num = -static_cast<long>(R.norm2_half[z]) * derive(R.negative_of[j], z);
    long den = R.norm2_half[i];
    if (num % den != 0) throw std::logic_error("norm reduction not integral");
    return static_cast<int>(num / den);
  }
  // N(x,y) = (|z|^2/|y|^2) N(-z, x), with (-z, x) positive summing to -y
  long num = static_cast<long>(R.norm2_half[z]) * derive(R.negative_of[z], i);
  long den = R.norm2_half[j];
  if (num % den != 0) throw std::logic_error("norm reduction not integral");
  return static_cast<int>(num / den);
}

int StructureConstants::constant(int i, int j) const {
  auto it = n_.find(key(i, j));
  return it == n_.end() ? 0 : it->second;
}

GElement bracket(const StructureConstants& sc, const GElement& x, const GElement& y) {
  const RootSystem& R = sc.roots();
  GElement out = zero_element(R);

  auto cartan_action = [&](const std::vector<Rat>& h, int beta) {
    Rat v(0);
    for (int j = 0; j < R.rank; ++j)
      if (h[j] != 0) v += h[j] * R.pairing[beta][j];
    return v;
  };

  for (const auto& [beta, c] : y.root_part) {
    Rat v = cartan_action(x.cartan, beta);
    if (v != 0) out.root_part[beta] += v * c;
  }
  for (const auto& [alpha, c] : x.root_part) {
    Rat v = cartan_action(y.cartan, alpha);
    if (v != 0) out.root_part[alpha] -= v * c;
  }
  std::vector<int> v(R.rank);
  for (const auto& [alpha, a] : x.root_part) {
    for (const auto& [beta, b] : y.root_part) {
      if (beta == R.negative_of[alpha]) {
        Rat ab = a * b;
        for (int j = 0; j < R.rank; ++j)
          if (R.coroot[alpha][j] != 0) out.cartan[j] += ab * R.coroot[alpha][j];
        continue;
      }
      int n = sc.constant(alpha, beta);
      if (n == 0) continue;
      for (int j = 0; j < R.rank; ++j) v[j] = R.roots[alpha].coeffs[j] + R.roots[beta].coeffs[j];
      out.root_part[R.find(v)] += a * b * n;
    }
  }
  out.prune();
  return out;
}

MatQ adjoint_matrix(const StructureConstants& sc, const GElement& x) {
  const RootSystem& R = sc.roots();
  const int l = R.rank;
  const int n = R.dim();
  MatQ m(n, n);
  GElement basis = zero_element(R);
  for (int j = 0; j < n; ++j) {
    GElement col;
    if (j < l) {
      basis.cartan[j] = 1;
      col = bracket(sc, x, basis);
      basis.cartan[j] = 0;
    } else {
      basis.root_part[j - l] = 1;
      col = bracket(sc, x, basis);
      basis.root_part.clear();
    }
    for (int i = 0; i < l; ++i)
      if (col.cartan[i] != 0) m.at(i, j) = col.cartan[i];
    for (const auto& [idx, c] : col.root_part) m.at(l + idx, j) = c;
  }
  return m;
}

int kernel_dim(const MatQ& m) { return m.cols - rank_exact(m); }

std::vector<Rat> charpoly_low_coeffs(const MatQ& m, int upto) { return charpoly_low_coeffs_mat(m, upto); }

GElement coweight_sum(const RootSystem& rs) {
  // solve sum_j cartan[i][j] b_j = 1 for all i by Cramer (exact)
  const int l = rs.rank;
  MatQ a(l, l + 1);
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) a.at(i, j) = rs.cartan[i][j];
    a.at(i, l) = 1;
  }
  // Gaussian elimination over Q
  for (int k = 0; k < l; ++k) {
    int piv = -1;
    for (int i = k; i < l; ++i)
      if (a.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    if (piv != k)
      for (int j = 0; j <= l; ++j) std::swap(a.at(k, j), a.at(piv, j));
    for (int i = 0; i < l; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / a.at(k, k);
      for (int j = k; j <= l; ++j) a.at(i, j) -= f * a.at(k, j);
    }
  }
  GElement rho = zero_element(rs);
  for (int j = 0; j < l; ++j) rho.cartan[j] = a.at(j, l) / a.at(j, j);
  return rho;
}

}  // namespace coxrig
