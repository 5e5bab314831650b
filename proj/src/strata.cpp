#include "coxrig/strata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace coxrig {

ApartmentPoint origin_point(const RootSystem& rs) {
  return ApartmentPoint{std::vector<Rat>(rs.rank, Rat(0))};
}

ApartmentPoint barycenter(const RootSystem& rs) {
  return ApartmentPoint{std::vector<Rat>(rs.rank, make_rat(1, rs.coxeter_number))};
}

Rat root_pairing(const RootSystem& rs, const ApartmentPoint& x, int root_index) {
  Rat v(0);
  const std::vector<int>& c = rs.roots[root_index].coeffs;
  for (int j = 0; j < rs.rank; ++j)
    if (c[j] != 0) v += Rat(c[j]) * x.values[j];
  return v;
}

Rat mp_degree_root(const RootSystem& rs, const ApartmentPoint& x, int root_index, int t_power) {
  return root_pairing(rs, x, root_index) + Rat(t_power);
}

Rat mp_degree_cartan(int t_power) { return Rat(t_power); }

Stratum leading_stratum(const StructureConstants& sc, const LoopElement& a, const ApartmentPoint& x) {
  const RootSystem& rs = sc.roots();
  Stratum s;
  s.point = x;

  bool have = false;
  Rat min_deg(0);
  auto consider = [&](const Rat& d) {
    if (!have || d < min_deg) {
      min_deg = d;
      have = true;
    }
  };
  for (const auto& [d, g] : a.terms) {
    bool cartan = false;
    for (const Rat& c : g.cartan)
      if (c != 0) cartan = true;
    if (cartan) consider(mp_degree_cartan(d));
    for (const auto& [idx, c] : g.root_part)
      if (c != 0) consider(mp_degree_root(rs, x, idx, d));
  }
  if (!have || min_deg > 0) {
    // inside the positive part of the filtration: regular singular, depth 0
    s.depth = 0;
    s.regular_singular = true;
    s.fundamental = false;
    return s;
  }
  s.depth = -min_deg;

  for (const auto& [d, g] : a.terms) {
    GElement part = zero_element(rs);
    bool cartan = false;
    for (const Rat& c : g.cartan)
      if (c != 0) cartan = true;
    if (cartan && mp_degree_cartan(d) == min_deg) part.cartan = g.cartan;
    for (const auto& [idx, c] : g.root_part)
      if (c != 0 && mp_degree_root(rs, x, idx, d) == min_deg) part.root_part[idx] = c;
    if (!part.is_zero()) s.leading.terms[d] = std::move(part);
  }
  s.fundamental = !is_loop_nilpotent(sc, s.leading);
  return s;
}

namespace {

/// ad of a loop element as integer matrix polynomial: coeffs[d] is the
/// matrix of the t^(dmin+d) component of scale * ad(Z).
struct AdPoly {
  std::vector<MatZ> coeffs;
  int dmin = 0;
  int n = 0;

  int spread() const { return static_cast<int>(coeffs.size()) - 1; }

  MatZ eval(long t) const {
    MatZ r = coeffs.back();
    Int tt(t);
    for (int d = static_cast<int>(coeffs.size()) - 2; d >= 0; --d)
      for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] * tt + coeffs[d].a[i];
    return r;
  }
};

AdPoly ad_poly(const StructureConstants& sc, const LoopElement& z) {
  AdPoly p;
  p.n = sc.roots().dim();
  if (z.terms.empty()) return p;
  p.dmin = z.min_degree();
  const int spread = z.max_degree() - p.dmin;
  // single global denominator so specializations stay integral
  Int den = 1;
  std::vector<MatQ> mats(spread + 1);
  for (const auto& [d, g] : z.terms) {
    mats[d - p.dmin] = adjoint_matrix(sc, g);
    for (const Rat& q : mats[d - p.dmin].a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  p.coeffs.assign(spread + 1, MatZ(p.n, p.n));
  for (int d = 0; d <= spread; ++d) {
    if (mats[d].rows == 0) continue;
    for (size_t i = 0; i < mats[d].a.size(); ++i) {
      const Rat& q = mats[d].a[i];
      p.coeffs[d].a[i] = q.get_num() * (den / q.get_den());
    }
  }
  return p;
}

}  // namespace

bool is_loop_nilpotent(const StructureConstants& sc, const LoopElement& z) {
  LoopElement zz = z;
  zz.prune();
  if (zz.is_zero()) return true;
  AdPoly p = ad_poly(sc, zz);
  const long points = static_cast<long>(p.n) * p.spread() + 1;
  for (long t = 1; t <= points; ++t)
    if (!is_nilpotent_int(p.eval(t))) return false;
  return true;
}

int NewtonPolygon::total_multiplicity() const {
  int s = 0;
  for (const auto& [slope, mult] : slopes) s += mult;
  return s;
}

NewtonPolygon newton_polygon(const StructureConstants& sc, const LoopElement& a) {
  const int n = sc.roots().dim();
  NewtonPolygon poly;
  LoopElement az = a;
  az.prune();
  if (az.is_zero()) {
    if (n > 0) poly.slopes.emplace_back(Rat(0), n);
    return poly;
  }
  AdPoly p = ad_poly(sc, az);
  const int bound = n * p.spread();  // t-degree bound for every charpoly coefficient

  // interpolate the charpoly coefficients of the shifted integer matrix
  std::vector<long> nodes(bound + 1);
  for (long t = 0; t <= bound; ++t) nodes[t] = t + 1;
  std::vector<std::vector<Rat>> values(n + 1, std::vector<Rat>(bound + 1));
  for (long t = 0; t <= bound; ++t) {
    std::vector<Int> cp = charpoly_int(p.eval(nodes[t]));
    for (int k = 0; k <= n; ++k) values[k][t] = Rat(cp[k]);
  }

  // valuation of each coefficient of the original charpoly:
  // val c_k = val c'_k + (n-k) * dmin   (eigenvalues scale by t^dmin)
  std::vector<std::pair<int, long>> pts;  // (k, val)
  for (int k = 0; k <= n; ++k) {
    std::vector<Rat> ck = poly_interpolate(nodes, values[k]);
    long val = -1;
    for (size_t d = 0; d < ck.size(); ++d)
      if (ck[d] != 0) {
        val = static_cast<long>(d);
        break;
      }
    if (val < 0) continue;  // identically zero coefficient
    pts.emplace_back(k, val + static_cast<long>(n - k) * p.dmin);
  }

  // lower convex hull left to right; leftmost point contributes the
  // lambda^k0 factor (k0 eigenvalues that vanish identically, slope 0)
  const int k0 = pts.front().first;
  std::vector<std::pair<int, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a2 = hull[hull.size() - 1];
      const auto& a1 = hull[hull.size() - 2];
      // drop a2 if it lies on or above segment a1->pt
      if (static_cast<long>(a2.second - a1.second) * (pt.first - a1.first) >=
          static_cast<long>(pt.second - a1.second) * (a2.first - a1.first))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  std::map<Rat, int, std::greater<Rat>> mult;
  if (k0 > 0) mult[Rat(0)] += k0;
  for (size_t i = 1; i < hull.size(); ++i) {
    const int len = hull[i].first - hull[i - 1].first;
    Rat s(hull[i].second - hull[i - 1].second, len);
    s.canonicalize();
    if (s < 0) s = 0;  // regular directions report slope 0
    mult[s] += len;
  }
  for (const auto& [s, m] : mult) poly.slopes.emplace_back(s, m);
  return poly;
}

Rat newton_irregularity(const StructureConstants& sc, const LoopElement& a) {
  NewtonPolygon p = newton_polygon(sc, a);
  Rat irr(0);
  for (const auto& [s, m] : p.slopes)
    if (s > 0) irr += s * Rat(m);
  return irr;
}

}  // namespace coxrig
