#pragma once

#include <utility>
#include <vector>

#include "coxrig/coxeter.hpp"

namespace coxrig {

/// Rational point of the standard apartment, stored as the values
/// alpha_j(x) on the simple roots; alpha(x) extends linearly.
struct ApartmentPoint {
  std::vector<Rat> values;
};

ApartmentPoint origin_point(const RootSystem& rs);
/// Barycenter of the fundamental alcove: alpha_j(x) = 1/h, so
/// alpha(x) = ht(alpha)/h.
ApartmentPoint barycenter(const RootSystem& rs);

Rat root_pairing(const RootSystem& rs, const ApartmentPoint& x, int root_index);

/// Moy-Prasad degree of a single basis line at x: alpha(x) + d for a root
/// line e_alpha t^d, and d for a Cartan line t^d.
Rat mp_degree_root(const RootSystem& rs, const ApartmentPoint& x, int root_index, int t_power);
Rat mp_degree_cartan(int t_power);

struct Stratum {
  ApartmentPoint point;
  Rat depth;            // max(0, -min MP degree over the support)
  LoopElement leading;  // terms of minimal degree; empty when all degrees > 0
  bool fundamental = false;
  bool regular_singular = false;  // all degrees positive: depth clamped to 0
};

/// Leading stratum of the connection with matrix A (w.r.t. dt/t) at x.
Stratum leading_stratum(const StructureConstants& sc, const LoopElement& a, const ApartmentPoint& x);

/// True iff ad(Z(t)) is nilpotent over the Laurent polynomials.  Decided
/// by exact specialization at D+1 distinct nonzero integer points, D =
/// dim(g) * (degree spread of Z) bounding the t-degree of every
/// coefficient of the characteristic polynomial, so the verdict is proved,
/// not sampled.
bool is_loop_nilpotent(const StructureConstants& sc, const LoopElement& z);

/// Eigenvalue slopes of ad(A(t)) with multiplicities, from the Newton
/// polygon of det(lambda I - ad A(t)) over the t-adic valuation.  Slopes
/// are clamped at 0 (regular directions), sorted descending.
struct NewtonPolygon {
  std::vector<std::pair<Rat, int>> slopes;  // (slope, multiplicity)

  int total_multiplicity() const;
};

NewtonPolygon newton_polygon(const StructureConstants& sc, const LoopElement& a);

/// Sum of the positive slopes with multiplicity (adjoint irregularity at 0).
Rat newton_irregularity(const StructureConstants& sc, const LoopElement& a);

}  // namespace coxrig
