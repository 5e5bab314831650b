#pragma once

#include <map>

#include "coxrig/chevalley.hpp"

namespace coxrig {

/// Parameters (r, m) of a Coxeter connection; legal when 1 <= r < h,
/// gcd(r,h) = 1 and m >= 0.
struct CoxeterParams {
  SimpleType type;
  int r = 1;
  int m = 0;
};

/// Throws BadSlopeNumerator / IllegalRank on illegal parameters.
void validate_params(const CoxeterParams& p);

/// Laurent-polynomial-valued Lie algebra element: finitely many terms
/// X_d t^d.
struct LoopElement {
  std::map<int, GElement> terms;  // degree -> component

  bool is_zero() const;
  void prune();
  int min_degree() const;  // requires nonzero
  int max_degree() const;
};

LoopElement loop_term(const GElement& x, int degree);
LoopElement loop_add(const LoopElement& a, const LoopElement& b);
LoopElement loop_bracket(const StructureConstants& sc, const LoopElement& a, const LoopElement& b);

/// Sum of the root vectors of height -r, unit coefficients.  Throws
/// BadSlopeNumerator unless 1 <= r < h and gcd(r,h) = 1.
GElement cyclic_lowering(const RootSystem& rs, int r);

/// Sum of the root vectors of height h-r, unit coefficients.
GElement cyclic_raising(const RootSystem& rs, int r);

/// Regular semisimple generator of the degree -r/h piece of the Coxeter
/// Cartan: cyclic_lowering + cyclic_raising.
GElement cyclic_element(const RootSystem& rs, int r);

/// Matrix (w.r.t. dt/t) of the Coxeter connection with parameters (r,m):
/// t^-m * (lowering + t^-1 raising).
LoopElement connection_matrix(const RootSystem& rs, int r, int m);

/// The standard cyclic element as a loop element: lowering(1) + t^-1 raising(1).
LoopElement principal_loop_element(const RootSystem& rs);

/// True iff 0 has multiplicity exactly l as a root of charpoly(ad x),
/// i.e. the lambda^l coefficient is nonzero and all lower ones vanish.
bool is_regular_semisimple(const StructureConstants& sc, const GElement& x);

/// Dimension of the centralizer slice of the standard cyclic loop element
/// inside the height-graded piece of index -i mod h, as an exact kernel
/// dimension.  Equals the multiplicity of i mod h among the exponents;
/// in particular 1 whenever gcd(i,h) = 1.
int coxeter_cartan_graded_dim(const StructureConstants& sc, int i);

/// Dimension of the degree-i/h graded piece of the loop algebra at the
/// barycenter of the fundamental alcove: the Cartan contributes l when
/// h | i, and each root line with ht(alpha) = i mod h contributes once.
int kmp_graded_dim(const RootSystem& rs, int i);

}  // namespace coxrig
