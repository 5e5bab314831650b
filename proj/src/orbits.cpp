#include "coxrig/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "coxrig/coxeter.hpp"

namespace coxrig {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition dual_partition(const Partition& p) {
  Partition d;
  if (p.parts.empty()) return d;
  for (int col = 1; col <= p.parts.front(); ++col) {
    int cnt = 0;
    for (int part : p.parts)
      if (part >= col) ++cnt;
    d.parts.push_back(cnt);
  }
  return d;
}

bool is_very_even(const Partition& p) {
  std::map<int, int> mult;
  for (int part : p.parts) {
    if (part % 2 != 0) return false;
    ++mult[part];
  }
  for (const auto& [part, m] : mult)
    if (m % 2 != 0) return false;
  return !p.parts.empty();
}

namespace {

struct KN {
  int size;  // ambient partition total
  int k;
  int nprime;
  bool extra_one;  // type D carries one extra part of size 1
};

KN decompose(Family family, int rank, int r) {
  int size = 0;
  bool extra = false;
  switch (family) {
    case Family::A: size = rank + 1; break;
    case Family::B: size = 2 * rank + 1; break;
    case Family::C: size = 2 * rank; break;
    case Family::D:
      size = 2 * rank;
      extra = true;
      break;
    default: throw NotClassical("no partition recipe for family " + std::string(1, family_letter(family)));
  }
  const int body = extra ? size - 1 : size;
  if (r < 1 || r > body) throw BadSlopeNumerator("r outside [1," + std::to_string(body) + "]");
  return KN{size, body / r, body % r, extra};
}

}  // namespace

Partition jordan_type(Family family, int rank, int r) {
  KN kn = decompose(family, rank, r);
  Partition p;
  for (int i = 0; i < kn.nprime; ++i) p.parts.push_back(kn.k + 1);
  if (kn.k > 0)
    for (int i = 0; i < r - kn.nprime; ++i) p.parts.push_back(kn.k);
  if (kn.extra_one) p.parts.push_back(1);
  std::sort(p.parts.rbegin(), p.parts.rend());
  return p;
}

long centralizer_dim_partition(Family family, int rank, int r) {
  KN kn = decompose(family, rank, r);
  const long k = kn.k, np = kn.nprime, R = r;
  switch (family) {
    case Family::A: return k * R * R + np * np - 1;
    case Family::B: return (k * R * R + np * np - (k % 2 == 0 ? np : R - np)) / 2;
    case Family::C: return (k * R * R + np * np + (k % 2 == 0 ? np : R - np)) / 2;
    case Family::D:
      return ((R + 1) * (R + 1) + (k - 1) * R * R + np * np - (k % 2 == 0 ? np + 1 : R - np + 1)) / 2;
    default: throw NotClassical("unreachable");
  }
}

long centralizer_dim_bruteforce(const StructureConstants& sc, int r) {
  return kernel_dim(adjoint_matrix(sc, cyclic_lowering(sc.roots(), r)));
}

long orbit_dim_partition(Family family, int rank, int r) {
  const long dim_g = static_cast<long>(coxeter_number_table({family, rank}) + 1) * rank;
  return dim_g - centralizer_dim_partition(family, rank, r);
}

long orbit_dim_bruteforce(const StructureConstants& sc, int r) {
  return sc.roots().dim() - centralizer_dim_bruteforce(sc, r);
}

long centralizer_dim_gl(const Partition& p) {
  long s = 0;
  for (int d : dual_partition(p).parts) s += static_cast<long>(d) * d;
  return s;
}

long centralizer_dim_sl(const Partition& p) { return centralizer_dim_gl(p) - 1; }

namespace {
long odd_parts(const Partition& p) {
  return std::count_if(p.parts.begin(), p.parts.end(), [](int x) { return x % 2 != 0; });
}
}  // namespace

long centralizer_dim_so(const Partition& p) { return (centralizer_dim_gl(p) - odd_parts(p)) / 2; }
long centralizer_dim_sp(const Partition& p) { return (centralizer_dim_gl(p) + odd_parts(p)) / 2; }

namespace {

struct KnownOrbit {
  Family family;
  int rank;
  int r;
  const char* label;
  const char* dynkin;
};

// labels recorded where published tables give them for these elements
constexpr KnownOrbit known_orbits[] = {
    {Family::E, 6, 5, "2A1+A2", ""},
    {Family::E, 7, 5, "A3+A2+A1", "[0,0,0,0,2,0,0]"},
    {Family::E, 7, 7, "A2+3A1", "[2,0,0,0,0,0,0]"},
};

}  // namespace

NilpotentData nilpotent_data(SimpleType type, int r, bool use_bruteforce) {
  validate_type(type);
  NilpotentData d;
  d.family = type.family;
  d.rank = type.rank;
  d.r = r;
  if (type.is_classical()) {
    d.jordan = jordan_type(type.family, type.rank, r);
    d.dual = dual_partition(*d.jordan);
    d.very_even = type.family == Family::D && is_very_even(*d.jordan);
    d.dim_centralizer = centralizer_dim_partition(type.family, type.rank, r);
    if (use_bruteforce) {
      StructureConstants sc = structure_constants(build_root_system(type));
      long brute = centralizer_dim_bruteforce(sc, r);
      if (brute != d.dim_centralizer)
        throw MismatchFound("centralizer oracles disagree for " + type.name() + ", r=" + std::to_string(r) + ": " +
                            std::to_string(d.dim_centralizer) + " vs " + std::to_string(brute));
    }
  } else {
    StructureConstants sc = structure_constants(build_root_system(type));
    d.dim_centralizer = centralizer_dim_bruteforce(sc, r);
  }
  const long dim_g = static_cast<long>(coxeter_number_table(type) + 1) * type.rank;
  d.dim_orbit = dim_g - d.dim_centralizer;
  for (const KnownOrbit& k : known_orbits)
    if (k.family == type.family && k.rank == type.rank && k.r == r) {
      d.label = k.label;
      d.dynkin = k.dynkin;
    }
  return d;
}

}  // namespace coxrig
