#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxrig/chevalley.hpp"

namespace coxrig {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int total() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// Transpose of the Young diagram (column lengths); an involution.
Partition dual_partition(const Partition& p);

/// Only even parts, each with even multiplicity (the type-D ambiguous case).
bool is_very_even(const Partition& p);

/// Jordan type of the height (-r) nilpotent in the classical families:
/// writing the ambient size as kr + n' (A: l+1, B: 2l+1, C: 2l,
/// D: 2l = kr + n' + 1 plus one extra part 1), the partition has n' parts
/// k+1 and r-n' parts k.  Throws NotClassical for E/F/G.  The gcd(r,h)
/// condition is not required here; r must lie in [1, ambient size].
Partition jordan_type(Family family, int rank, int r);

/// Centralizer dimension from the per-family closed forms in terms of
/// (k, n').  Throws NotClassical for E/F/G.
long centralizer_dim_partition(Family family, int rank, int r);

/// Centralizer dimension as the exact kernel dimension of ad of the
/// height (-r) element; any simple type.
long centralizer_dim_bruteforce(const StructureConstants& sc, int r);

/// dim g - centralizer dimension.
long orbit_dim_partition(Family family, int rank, int r);
long orbit_dim_bruteforce(const StructureConstants& sc, int r);

/// Centralizer dimension of a nilpotent with the given Jordan type inside
/// sl_N / so_N / sp_N (transpose-square formulas); used as an independent
/// cross-check of the closed forms.
long centralizer_dim_gl(const Partition& p);   // sum (dual_i)^2, for gl_N
long centralizer_dim_sl(const Partition& p);   // gl value - 1
long centralizer_dim_so(const Partition& p);   // (gl value - #odd parts) / 2
long centralizer_dim_sp(const Partition& p);   // (gl value + #odd parts) / 2

struct NilpotentData {
  Family family;
  int rank = 0;
  int r = 1;
  std::optional<Partition> jordan;  // classical families only
  std::optional<Partition> dual;
  long dim_centralizer = 0;
  long dim_orbit = 0;
  bool very_even = false;
  std::string label;   // optional orbit label, when known
  std::string dynkin;  // optional Dynkin representative, when known
};

/// Assemble NilpotentData; use_bruteforce selects the kernel oracle (always
/// used for exceptional families).
NilpotentData nilpotent_data(SimpleType type, int r, bool use_bruteforce);

}  // namespace coxrig
