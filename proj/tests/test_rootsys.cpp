#include "doctest.h"

#include <set>

#include "coxrig/rootsys.hpp"

using namespace coxrig;

namespace {

std::vector<SimpleType> all_types_up_to_rank(int max_rank) {
  std::vector<SimpleType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::B, l});
  for (int l = 2; l <= max_rank; ++l) out.push_back({Family::C, l});
  for (int l = 3; l <= max_rank; ++l) out.push_back({Family::D, l});
  for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back({Family::E, l});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

}  // namespace

TEST_CASE("golden Coxeter data") {
  RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(g2.coxeter_number == 6);
  CHECK(g2.rank == 2);
  CHECK(g2.n_roots() == 12);

  RootSystem e7 = build_root_system({Family::E, 7});
  CHECK(e7.coxeter_number == 18);
  CHECK(e7.rank == 7);
  CHECK(e7.n_roots() == 126);

  RootSystem a1 = build_root_system({Family::A, 1});
  CHECK(a1.coxeter_number == 2);
  CHECK(a1.n_roots() == 2);
  CHECK(a1.roots[a1.highest_root].coeffs == std::vector<int>{1});

  RootSystem a4 = build_root_system({Family::A, 4});
  CHECK(a4.coxeter_number == 5);
  CHECK(a4.n_roots() == 20);
}

TEST_CASE("illegal ranks are rejected") {
  CHECK_THROWS_AS(build_root_system({Family::B, 1}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::C, 1}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::D, 2}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::E, 9}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::E, 5}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::F, 3}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::G, 3}), IllegalRank);
  CHECK_THROWS_AS(build_root_system({Family::A, 0}), IllegalRank);
}

TEST_CASE("roots_of_height examples") {
  RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(roots_of_height(g2, 1).size() == 2);
  CHECK(roots_of_height(g2, 5).size() == 1);
  CHECK(roots_of_height(g2, 5)[0] == g2.highest_root);
  CHECK(roots_of_height(g2, 6).empty());
  CHECK(roots_of_height(g2, -7).empty());

  RootSystem a4 = build_root_system({Family::A, 4});
  CHECK(roots_of_height(a4, -2).size() + roots_of_height(a4, 3).size() == 5);  // = h
}

TEST_CASE("root system invariants across all types of rank <= 8") {
  for (const SimpleType& t : all_types_up_to_rank(8)) {
    CAPTURE(t.name());
    RootSystem rs = build_root_system(t);
    const int h = rs.coxeter_number;
    const int l = rs.rank;

    CHECK(static_cast<int>(rs.n_roots()) == h * l);
    CHECK(h == coxeter_number_table(t));

    // negation closure and sign coherence of coefficient vectors
    for (size_t i = 0; i < rs.n_roots(); ++i) {
      const Root& r = rs.roots[i];
      CHECK(r.height != 0);
      bool nonneg = true, nonpos = true;
      for (int c : r.coeffs) {
        nonneg &= c >= 0;
        nonpos &= c <= 0;
      }
      CHECK((nonneg || nonpos));
      CHECK(rs.negative_of[rs.negative_of[i]] == static_cast<int>(i));
      CHECK(rs.roots[rs.negative_of[i]].height == -r.height);
    }

    // exactly l simple roots; exactly one root of height h-1
    CHECK(rs.of_height(1).size() == static_cast<size_t>(l));
    CHECK(rs.of_height(h - 1).size() == 1);
    CHECK(rs.roots[rs.highest_root].height == h - 1);

    // graded pairing #ht(i) + #ht(i-h) = l + multiplicity of i as exponent;
    // summing the positive-height counts gives hl/2
    size_t tot = 0;
    for (int i = 1; i < h; ++i) tot += rs.of_height(i).size();
    CHECK(tot == static_cast<size_t>(h * l) / 2);

    // Cartan matrix entries in the legal pattern
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int c = rs.cartan[i][j];
        if (i == j)
          CHECK(c == 2);
        else
          CHECK((c == 0 || c == -1 || c == -2 || c == -3));
      }

    // exponents: multiplicities sum to rank, symmetric under m <-> h-m,
    // and 1 and h-1 always occur exactly once
    std::vector<int> mult = exponent_multiplicities(rs);
    int msum = 0;
    for (int m = 1; m < h; ++m) {
      CHECK(mult[m] >= 0);
      CHECK(mult[m] == mult[h - m]);
      msum += mult[m];
    }
    CHECK(msum == l);
    CHECK(mult[1] == 1);
    CHECK(mult[h - 1] == 1);
  }
}

TEST_CASE("D3 is a genuine D-type system isomorphic to A3") {
  RootSystem d3 = build_root_system({Family::D, 3});
  RootSystem a3 = build_root_system({Family::A, 3});
  CHECK(d3.coxeter_number == a3.coxeter_number);
  CHECK(d3.n_roots() == a3.n_roots());
  // same height statistics
  for (int k = -4; k <= 4; ++k) CHECK(d3.of_height(k).size() == a3.of_height(k).size());
}

TEST_CASE("find and lexicographic order") {
  RootSystem b2 = build_root_system({Family::B, 2});
  for (size_t i = 0; i + 1 < b2.n_roots(); ++i) CHECK(b2.roots[i].coeffs < b2.roots[i + 1].coeffs);
  for (size_t i = 0; i < b2.n_roots(); ++i) CHECK(b2.find(b2.roots[i].coeffs) == static_cast<int>(i));
  CHECK(b2.find({5, 5}) == -1);
}

TEST_CASE("exponents of small types match the classical tables") {
  auto exps = [](const SimpleType& t) {
    RootSystem rs = build_root_system(t);
    std::vector<int> out;
    std::vector<int> mult = exponent_multiplicities(rs);
    for (int m = 1; m < rs.coxeter_number; ++m)
      for (int c = 0; c < mult[m]; ++c) out.push_back(m);
    return out;
  };
  CHECK(exps({Family::A, 3}) == std::vector<int>{1, 2, 3});
  CHECK(exps({Family::B, 3}) == std::vector<int>{1, 3, 5});
  CHECK(exps({Family::D, 4}) == std::vector<int>{1, 3, 3, 5});
  CHECK(exps({Family::G, 2}) == std::vector<int>{1, 5});
  CHECK(exps({Family::F, 4}) == std::vector<int>{1, 5, 7, 11});
  CHECK(exps({Family::E, 6}) == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(exps({Family::E, 7}) == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(exps({Family::E, 8}) == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
}
