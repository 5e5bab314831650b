#pragma once

#include <string>
#include <vector>

#include "coxrig/coxeter.hpp"
#include "coxrig/orbits.hpp"

namespace coxrig {

enum class Oracle { bruteforce, partition, both };

std::string oracle_name(Oracle o);

/// The four terms of the numerical rigidity index
///   n = Irr_0(ad) - dim g^{I_0} - dim g^{I_inf} + 2 dim g^{I}
/// together with the verdict n == 0.
struct RigidityVerdict {
  CoxeterParams params;
  long irr0 = 0;        // (r + m h) l
  long dim_g_I0 = 0;    // 0 for every Coxeter connection
  long dim_g_Iinf = 0;  // dim C_g(N_r) when m = 0; dim g when m >= 1
  long dim_g_I = 0;     // 0 (contained in the I_0 fixed space)
  long n_value = 0;
  bool rigid = false;
  std::string method;  // centralizer oracle recorded for the verdict
};

/// Evaluate the numerical criterion.  The centralizer oracle defaults to
/// the partition formulas for classical families and the exact adjoint
/// kernel for exceptional ones; Oracle::both forces agreement checking
/// (throws MismatchFound on disagreement).
RigidityVerdict numerical_index(const CoxeterParams& p, Oracle oracle = Oracle::partition);

/// As above, reusing an already-built structure-constant table.
RigidityVerdict numerical_index(const StructureConstants& sc, int r, int m, Oracle oracle);

/// The classification-theorem conditions: true iff (m,r) = (1,1), or
/// (m,r) = (0,1), or m = 0 and the family divisibility condition holds
/// (A_{n-1}: r | n-1 or r | n+1; B_n: r | n+1 or r | 2n+1; C_n: r | 2n-1
/// or r | 2n+1; D_n: r | 2n or r | 2n-1; E_7: r = 7; otherwise none).
bool predicted_rigid(const CoxeterParams& p);

/// Every legal (family, rank, r, m) verdict in range, in deterministic
/// order (family letter, rank, r, m); evaluation may run in parallel.
std::vector<RigidityVerdict> classify_range(const std::vector<Family>& families, int rank_max, int m_max,
                                            Oracle oracle = Oracle::partition);

struct CrossCheckReport {
  long checked = 0;
  std::vector<RigidityVerdict> mismatches;  // verdicts whose rigid bit differs from the prediction

  bool clean() const { return mismatches.empty(); }
};

/// Assert numerical_index(...).rigid == predicted_rigid(...) over the
/// whole range; mismatches are collected, never silently dropped.
CrossCheckReport cross_check(const std::vector<Family>& families, int rank_max, int m_max,
                             Oracle oracle = Oracle::partition);

/// Legal ranks for a family, capped at rank_max (E gives {6,7,8}, etc.).
std::vector<int> ranks_in_range(Family f, int rank_max);

/// Legal slope numerators: r in [1,h) with gcd(r,h) = 1.
std::vector<int> legal_numerators(const SimpleType& t);

}  // namespace coxrig
