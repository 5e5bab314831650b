#include "coxrig/rigidity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxrig/parallel.hpp"

namespace coxrig {

std::string oracle_name(Oracle o) {
  switch (o) {
    case Oracle::bruteforce: return "bruteforce";
    case Oracle::partition: return "partition";
    case Oracle::both: return "both";
  }
  return "";
}

namespace {

// exceptional families have no partition oracle: everything degrades to
// the exact adjoint kernel there
Oracle resolve_oracle(const SimpleType& type, Oracle oracle) {
  return type.is_classical() ? oracle : Oracle::bruteforce;
}

long centralizer_dim(const StructureConstants* sc, const SimpleType& type, int r, Oracle effective) {
  auto brute = [&]() -> long {
    if (sc) return centralizer_dim_bruteforce(*sc, r);
    StructureConstants local = structure_constants(build_root_system(type));
    return centralizer_dim_bruteforce(local, r);
  };
  switch (effective) {
    case Oracle::partition: return centralizer_dim_partition(type.family, type.rank, r);
    case Oracle::bruteforce: return brute();
    case Oracle::both: {
      long a = centralizer_dim_partition(type.family, type.rank, r);
      long b = brute();
      if (a != b)
        throw MismatchFound("centralizer oracles disagree for " + type.name() + ", r=" + std::to_string(r) + ": " +
                            std::to_string(a) + " (partition) vs " + std::to_string(b) + " (bruteforce)");
      return a;
    }
  }
  return 0;
}

RigidityVerdict make_verdict(const StructureConstants* sc, const CoxeterParams& p, Oracle oracle) {
  validate_params(p);
  const long l = p.type.rank;
  const long h = coxeter_number_table(p.type);
  const Oracle effective = resolve_oracle(p.type, oracle);
  RigidityVerdict v;
  v.params = p;
  v.method = oracle_name(effective);
  v.irr0 = (p.r + static_cast<long>(p.m) * h) * l;
  v.dim_g_I0 = 0;
  v.dim_g_I = 0;
  if (p.m >= 1) {
    // regular at infinity: the full algebra is fixed
    v.dim_g_Iinf = (h + 1) * l;
  } else {
    v.dim_g_Iinf = centralizer_dim(sc, p.type, p.r, effective);
  }
  v.n_value = v.irr0 - v.dim_g_I0 - v.dim_g_Iinf + 2 * v.dim_g_I;
  v.rigid = (v.n_value == 0);
  return v;
}

}  // namespace

RigidityVerdict numerical_index(const CoxeterParams& p, Oracle oracle) { return make_verdict(nullptr, p, oracle); }

RigidityVerdict numerical_index(const StructureConstants& sc, int r, int m, Oracle oracle) {
  CoxeterParams p{sc.roots().type, r, m};
  return make_verdict(&sc, p, oracle);
}

bool predicted_rigid(const CoxeterParams& p) {
  validate_type(p.type);
  const int r = p.r, m = p.m;
  if (m == 1 && r == 1) return true;
  if (m != 0) return false;
  if (r == 1) return true;
  const int n = p.type.rank;
  switch (p.type.family) {
    case Family::A: return (n + 1 - 1) % r == 0 || (n + 1 + 1) % r == 0;  // sl_{n+1}: r | n, r | n+2
    case Family::B: return (n + 1) % r == 0 || (2 * n + 1) % r == 0;
    case Family::C: return (2 * n - 1) % r == 0 || (2 * n + 1) % r == 0;
    case Family::D: return (2 * n) % r == 0 || (2 * n - 1) % r == 0;
    case Family::E: return n == 7 && r == 7;
    case Family::F:
    case Family::G: return false;
  }
  return false;
}

std::vector<int> ranks_in_range(Family f, int rank_max) {
  int lo = 1, hi = rank_max;
  switch (f) {
    case Family::A: lo = 1; break;
    case Family::B:
    case Family::C: lo = 2; break;
    case Family::D: lo = 3; break;
    case Family::E: lo = 6; hi = std::min(rank_max, 8); break;
    case Family::F: lo = 4; hi = std::min(rank_max, 4); break;
    case Family::G: lo = 2; hi = std::min(rank_max, 2); break;
  }
  std::vector<int> out;
  for (int l = lo; l <= hi; ++l) out.push_back(l);
  return out;
}

std::vector<int> legal_numerators(const SimpleType& t) {
  const int h = coxeter_number_table(t);
  std::vector<int> out;
  for (int r = 1; r < h; ++r)
    if (std::gcd(r, h) == 1) out.push_back(r);
  return out;
}

std::vector<RigidityVerdict> classify_range(const std::vector<Family>& families, int rank_max, int m_max,
                                            Oracle oracle) {
  std::vector<Family> fams = families;
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());

  struct Task {
    SimpleType type;
    int r;
  };
  std::vector<Task> tasks;
  for (Family f : fams)
    for (int rank : ranks_in_range(f, rank_max))
      for (int r : legal_numerators({f, rank})) tasks.push_back({{f, rank}, r});

  // centralizer dimension once per (type, r); reused across the m sweep
  std::vector<RigidityVerdict> base(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    base[i] = numerical_index(CoxeterParams{tasks[i].type, tasks[i].r, 0}, oracle);
  });

  std::vector<RigidityVerdict> out;
  out.reserve(base.size() * (m_max + 1));
  for (size_t i = 0; i < tasks.size(); ++i) {
    const long l = tasks[i].type.rank;
    const long h = coxeter_number_table(tasks[i].type);
    for (int m = 0; m <= m_max; ++m) {
      RigidityVerdict v = base[i];
      v.params.m = m;
      if (m >= 1) {
        v.irr0 = (tasks[i].r + static_cast<long>(m) * h) * l;
        v.dim_g_Iinf = (h + 1) * l;
        v.n_value = v.irr0 - v.dim_g_I0 - v.dim_g_Iinf + 2 * v.dim_g_I;
        v.rigid = (v.n_value == 0);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

CrossCheckReport cross_check(const std::vector<Family>& families, int rank_max, int m_max, Oracle oracle) {
  CrossCheckReport rep;
  for (RigidityVerdict& v : classify_range(families, rank_max, m_max, oracle)) {
    ++rep.checked;
    if (v.rigid != predicted_rigid(v.params)) rep.mismatches.push_back(std::move(v));
  }
  return rep;
}

}  // namespace coxrig
