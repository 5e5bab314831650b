#include "doctest.h"

#include <cstdlib>

#include "coxrig/chevalley.hpp"

using namespace coxrig;

namespace {

GElement basis_element(const RootSystem& rs, int i) {
  return i < rs.rank ? coroot_vector(rs, i) : root_vector(rs, i - rs.rank);
}

bool jacobi_holds(const StructureConstants& sc, int i, int j, int k) {
  const RootSystem& rs = sc.roots();
  GElement x = basis_element(rs, i), y = basis_element(rs, j), z = basis_element(rs, k);
  GElement s = bracket(sc, x, bracket(sc, y, z));
  s += bracket(sc, y, bracket(sc, z, x));
  s += bracket(sc, z, bracket(sc, x, y));
  return s.is_zero();
}

struct Lcg {
  unsigned long s;
  explicit Lcg(unsigned long seed) : s(seed) {}
  int next(int n) {
    s = s * 6364136223846793005ul + 1442695040888963407ul;
    return static_cast<int>((s >> 33) % static_cast<unsigned long>(n));
  }
};

}  // namespace

TEST_CASE("A1: bracket of opposite root vectors is the coroot") {
  StructureConstants sc = structure_constants(build_root_system({Family::A, 1}));
  const RootSystem& rs = sc.roots();
  int pos = rs.of_height(1)[0], neg = rs.of_height(-1)[0];
  GElement h = bracket(sc, root_vector(rs, pos), root_vector(rs, neg));
  CHECK(h.root_part.empty());
  CHECK(h.cartan == std::vector<Rat>{Rat(1)});
  // [h, e] = 2e
  GElement he = bracket(sc, h, root_vector(rs, pos));
  CHECK(he.root_part.at(pos) == 2);
}

TEST_CASE("A2: all structure constants have magnitude 1") {
  StructureConstants sc = structure_constants(build_root_system({Family::A, 2}));
  const RootSystem& rs = sc.roots();
  for (size_t i = 0; i < rs.n_roots(); ++i)
    for (size_t j = 0; j < rs.n_roots(); ++j) {
      int n = sc.constant(static_cast<int>(i), static_cast<int>(j));
      if (n != 0) CHECK(std::abs(n) == 1);
    }
}

TEST_CASE("G2: magnitudes follow the root-string rule, reaching 3") {
  StructureConstants sc = structure_constants(build_root_system({Family::G, 2}));
  const RootSystem& rs = sc.roots();
  int maxmag = 0;
  for (size_t i = 0; i < rs.n_roots(); ++i)
    for (size_t j = 0; j < rs.n_roots(); ++j) {
      int n = sc.constant(static_cast<int>(i), static_cast<int>(j));
      if (n == 0) continue;
      CHECK(std::abs(n) == sc.string_down(static_cast<int>(i), static_cast<int>(j)) + 1);
      maxmag = std::max(maxmag, std::abs(n));
    }
  CHECK(maxmag == 3);
}

TEST_CASE("structure constant sign coherences") {
  for (SimpleType t : {SimpleType{Family::B, 2}, SimpleType{Family::G, 2}, SimpleType{Family::A, 3}}) {
    CAPTURE(t.name());
    StructureConstants sc = structure_constants(build_root_system(t));
    const RootSystem& rs = sc.roots();
    for (size_t i = 0; i < rs.n_roots(); ++i)
      for (size_t j = 0; j < rs.n_roots(); ++j) {
        int n = sc.constant(static_cast<int>(i), static_cast<int>(j));
        CHECK(n == -sc.constant(static_cast<int>(j), static_cast<int>(i)));
        CHECK(n == -sc.constant(rs.negative_of[i], rs.negative_of[j]));
      }
  }
}

TEST_CASE("Jacobi identity: full sweep on every type of rank <= 4") {
  for (SimpleType t : {SimpleType{Family::A, 2}, SimpleType{Family::A, 3}, SimpleType{Family::A, 4},
                       SimpleType{Family::B, 2}, SimpleType{Family::B, 3}, SimpleType{Family::B, 4},
                       SimpleType{Family::C, 3}, SimpleType{Family::C, 4}, SimpleType{Family::D, 3},
                       SimpleType{Family::D, 4}, SimpleType{Family::G, 2}, SimpleType{Family::F, 4}}) {
    CAPTURE(t.name());
    StructureConstants sc = structure_constants(build_root_system(t));
    const int n = sc.roots().dim();
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int k = j + 1; k < n && ok; ++k) ok = jacobi_holds(sc, i, j, k);
    CHECK(ok);
  }
}

TEST_CASE("Jacobi identity: sampled triples on E6, E7 and E8") {
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8}}) {
    CAPTURE(t.name());
    StructureConstants sc = structure_constants(build_root_system(t));
    const int n = sc.roots().dim();
    Lcg g(static_cast<unsigned long>(t.rank) * 11);
    bool ok = true;
    for (int trial = 0; trial < 400 && ok; ++trial) ok = jacobi_holds(sc, g.next(n), g.next(n), g.next(n));
    CHECK(ok);
  }
}

TEST_CASE("ad of zero is the zero matrix") {
  StructureConstants sc = structure_constants(build_root_system({Family::B, 2}));
  CHECK(adjoint_matrix(sc, zero_element(sc.roots())).is_zero());
}

TEST_CASE("ad of the coweight sum is diagonal with height eigenvalues") {
  for (SimpleType t : {SimpleType{Family::A, 2}, SimpleType{Family::C, 3}, SimpleType{Family::G, 2}}) {
    CAPTURE(t.name());
    StructureConstants sc = structure_constants(build_root_system(t));
    const RootSystem& rs = sc.roots();
    MatQ m = adjoint_matrix(sc, coweight_sum(rs));
    const int l = rs.rank;
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        Rat expect(0);
        if (i == j && j >= l) expect = rs.roots[j - l].height;
        CHECK(m.at(i, j) == expect);
      }
  }
}

TEST_CASE("A1: ad(e+f) has kernel dimension 1 and charpoly x^3 - 4x") {
  StructureConstants sc = structure_constants(build_root_system({Family::A, 1}));
  const RootSystem& rs = sc.roots();
  GElement x = root_vector(rs, rs.of_height(1)[0]);
  x += root_vector(rs, rs.of_height(-1)[0]);
  MatQ m = adjoint_matrix(sc, x);
  CHECK(kernel_dim(m) == 1);
  std::vector<Rat> c = charpoly_low_coeffs(m, 3);
  CHECK(c[0] == 0);
  CHECK(c[1] == -4);
  CHECK(c[2] == 0);
  CHECK(c[3] == 1);
}

TEST_CASE("kernel_dim of the zero matrix is the full dimension") {
  MatQ z(6, 6);
  CHECK(kernel_dim(z) == 6);
}

TEST_CASE("trace of ad is zero and kernel_dim(ad) >= rank, random elements") {
  Lcg g(2024);
  for (SimpleType t : {SimpleType{Family::A, 2}, SimpleType{Family::B, 2}, SimpleType{Family::G, 2}}) {
    CAPTURE(t.name());
    StructureConstants sc = structure_constants(build_root_system(t));
    const RootSystem& rs = sc.roots();
    for (int trial = 0; trial < 5; ++trial) {
      GElement x = zero_element(rs);
      for (int j = 0; j < rs.rank; ++j) x.cartan[j] = Rat(g.next(7) - 3);
      for (size_t idx = 0; idx < rs.n_roots(); ++idx)
        if (g.next(3) == 0) x.root_part[static_cast<int>(idx)] = Rat(g.next(7) - 3);
      x.prune();
      MatQ m = adjoint_matrix(sc, x);
      Rat tr(0);
      for (int i = 0; i < m.rows; ++i) tr += m.at(i, i);
      CHECK(tr == 0);
      CHECK(kernel_dim(m) >= rs.rank);
    }
  }
}

TEST_CASE("bracket is bilinear and antisymmetric on random elements") {
  Lcg g(99);
  StructureConstants sc = structure_constants(build_root_system({Family::B, 3}));
  const RootSystem& rs = sc.roots();
  auto rand_elt = [&]() {
    GElement x = zero_element(rs);
    for (int j = 0; j < rs.rank; ++j) x.cartan[j] = Rat(g.next(5) - 2);
    for (size_t idx = 0; idx < rs.n_roots(); ++idx)
      if (g.next(4) == 0) x.root_part[static_cast<int>(idx)] = Rat(g.next(5) - 2);
    x.prune();
    return x;
  };
  for (int trial = 0; trial < 5; ++trial) {
    GElement x = rand_elt(), y = rand_elt();
    GElement xy = bracket(sc, x, y);
    GElement yx = bracket(sc, y, x);
    yx += xy;
    CHECK(yx.is_zero());
    GElement xx = bracket(sc, x, x);
    CHECK(xx.is_zero());
    // [x, y+y'] = [x,y] + [x,y']
    GElement yp = rand_elt();
    GElement ysum = y;
    ysum += yp;
    GElement lhs = bracket(sc, x, ysum);
    GElement rhs = bracket(sc, x, y);
    rhs += bracket(sc, x, yp);
    lhs -= rhs;
    CHECK(lhs.is_zero());
  }
}
