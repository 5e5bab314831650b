#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "coxrig/matrix.hpp"
#include "coxrig/rootsys.hpp"

namespace coxrig {

/// Element of the Lie algebra in the fixed Chevalley basis: a rational
/// vector over the simple coroots plus finitely many root-vector terms.
struct GElement {
  std::vector<Rat> cartan;      // length l, coordinates over alpha_i^vee
  std::map<int, Rat> root_part;  // root index -> coefficient

  bool is_zero() const;
  GElement& operator+=(const GElement& o);
  GElement& operator-=(const GElement& o);
  GElement scaled(const Rat& c) const;
  void prune();  // drop zero root coefficients
};

GElement zero_element(const RootSystem& rs);
GElement root_vector(const RootSystem& rs, int root_index, Rat coeff = Rat(1));
GElement coroot_vector(const RootSystem& rs, int simple_index, Rat coeff = Rat(1));

/// Signed structure constants N(alpha,beta) for all pairs of roots whose
/// sum is a root, determined by the extraspecial-pair convention: the
/// constant of the extraspecial pair of each positive non-simple root is
/// +(p+1), everything else follows from antisymmetry, the Jacobi identity
/// and the norm relations.  Magnitudes satisfy |N(alpha,beta)| = p+1 with
/// p the largest k such that beta - k*alpha is a root.
class StructureConstants {
 public:
  explicit StructureConstants(RootSystem rs);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return rs_; }

  /// N(alpha_i, alpha_j); 0 when alpha_i + alpha_j is not a root.
  int constant(int i, int j) const;

  /// Largest p >= 0 with beta - p*alpha a root (the root-string length below beta).
  int string_down(int alpha, int beta) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::unordered_map<long long, int> n_;

  long long key(int i, int j) const { return static_cast<long long>(i) * static_cast<long long>(rs_->n_roots()) + j; }
  void put(int i, int j, int v) { n_[key(i, j)] = v; }
  int get_checked(int i, int j) const;
  int derive(int i, int j) const;  // reduction to stored positive pairs
};

inline StructureConstants structure_constants(RootSystem rs) { return StructureConstants(std::move(rs)); }

GElement bracket(const StructureConstants& sc, const GElement& x, const GElement& y);

/// Matrix of ad(x) on the Chevalley basis (coroots first, then roots in
/// root-system order); dimension (h+1)l.
MatQ adjoint_matrix(const StructureConstants& sc, const GElement& x);

/// dim ker over Q, exact.
int kernel_dim(const MatQ& m);

/// Coefficients of lambda^0..lambda^upto of det(lambda I - M), exact.
std::vector<Rat> charpoly_low_coeffs(const MatQ& m, int upto);

/// Sum of the fundamental coweights (acts on the root vector e_beta with
/// eigenvalue ht(beta) under ad).
GElement coweight_sum(const RootSystem& rs);

}  // namespace coxrig
