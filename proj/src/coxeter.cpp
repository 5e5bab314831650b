#include "coxrig/coxeter.hpp"

#include <numeric>
#include <stdexcept>

namespace coxrig {

void validate_params(const CoxeterParams& p) {
  validate_type(p.type);
  const int h = coxeter_number_table(p.type);
  if (p.r < 1 || p.r >= h)
    throw BadSlopeNumerator("r = " + std::to_string(p.r) + " outside [1," + std::to_string(h) + ")");
  if (std::gcd(p.r, h) != 1)
    throw BadSlopeNumerator("gcd(r,h) = " + std::to_string(std::gcd(p.r, h)) + " for r = " + std::to_string(p.r) +
                            ", h = " + std::to_string(h));
  if (p.m < 0) throw BadSlopeNumerator("m must be nonnegative");
}

bool LoopElement::is_zero() const {
  for (const auto& [d, x] : terms)
    if (!x.is_zero()) return false;
  return true;
}

void LoopElement::prune() {
  for (auto it = terms.begin(); it != terms.end();) it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

int LoopElement::min_degree() const {
  if (terms.empty()) throw std::logic_error("min_degree of zero loop element");
  return terms.begin()->first;
}

int LoopElement::max_degree() const {
  if (terms.empty()) throw std::logic_error("max_degree of zero loop element");
  return terms.rbegin()->first;
}

LoopElement loop_term(const GElement& x, int degree) {
  LoopElement a;
  if (!x.is_zero()) a.terms[degree] = x;
  return a;
}

LoopElement loop_add(const LoopElement& a, const LoopElement& b) {
  LoopElement r = a;
  for (const auto& [d, x] : b.terms) {
    auto it = r.terms.find(d);
    if (it == r.terms.end())
      r.terms[d] = x;
    else
      it->second += x;
  }
  r.prune();
  return r;
}

LoopElement loop_bracket(const StructureConstants& sc, const LoopElement& a, const LoopElement& b) {
  LoopElement r;
  for (const auto& [da, xa] : a.terms)
    for (const auto& [db, xb] : b.terms) {
      GElement br = bracket(sc, xa, xb);
      if (br.is_zero()) continue;
      auto it = r.terms.find(da + db);
      if (it == r.terms.end())
        r.terms[da + db] = std::move(br);
      else
        it->second += br;
    }
  r.prune();
  return r;
}

namespace {

GElement height_sum(const RootSystem& rs, int height) {
  GElement x = zero_element(rs);
  for (int idx : rs.of_height(height)) x.root_part[idx] = 1;
  return x;
}

void check_r(const RootSystem& rs, int r) {
  validate_params(CoxeterParams{rs.type, r, 0});
}

}  // namespace

GElement cyclic_lowering(const RootSystem& rs, int r) {
  check_r(rs, r);
  return height_sum(rs, -r);
}

GElement cyclic_raising(const RootSystem& rs, int r) {
  check_r(rs, r);
  return height_sum(rs, rs.coxeter_number - r);
}

GElement cyclic_element(const RootSystem& rs, int r) {
  GElement x = cyclic_lowering(rs, r);
  x += cyclic_raising(rs, r);
  return x;
}

LoopElement connection_matrix(const RootSystem& rs, int r, int m) {
  if (m < 0) throw BadSlopeNumerator("m must be nonnegative");
  LoopElement a = loop_term(cyclic_lowering(rs, r), -m);
  return loop_add(a, loop_term(cyclic_raising(rs, r), -m - 1));
}

LoopElement principal_loop_element(const RootSystem& rs) {
  return loop_add(loop_term(cyclic_lowering(rs, 1), 0), loop_term(cyclic_raising(rs, 1), -1));
}

bool is_regular_semisimple(const StructureConstants& sc, const GElement& x) {
  const int l = sc.roots().rank;
  std::vector<Rat> c = charpoly_low_coeffs(adjoint_matrix(sc, x), l);
  for (int k = 0; k < l; ++k)
    if (c[k] != 0) return false;
  return c[l] != 0;
}

int coxeter_cartan_graded_dim(const StructureConstants& sc, int i) {
  const RootSystem& rs = sc.roots();
  const int h = rs.coxeter_number;
  const int l = rs.rank;
  const int i0 = ((i % h) + h) % h;
  const LoopElement a1 = principal_loop_element(rs);

  // loop-element basis of the Kac degree -i0/h piece
  std::vector<LoopElement> basis;
  if (i0 == 0) {
    for (int j = 0; j < l; ++j) basis.push_back(loop_term(coroot_vector(rs, j), 0));
  } else {
    for (int idx : rs.of_height(-i0)) basis.push_back(loop_term(root_vector(rs, idx), 0));
    for (int idx : rs.of_height(h - i0)) basis.push_back(loop_term(root_vector(rs, idx), -1));
  }
  if (basis.empty()) return 0;

  // matrix of X -> [a1, X] over a coordinate system for the image
  std::vector<LoopElement> images;
  images.reserve(basis.size());
  std::map<std::pair<int, int>, int> coord;  // (degree, basis line) -> row; line: 0..l-1 cartan, l+idx root
  for (const LoopElement& b : basis) {
    LoopElement im = loop_bracket(sc, a1, b);
    for (const auto& [d, x] : im.terms) {
      for (int j = 0; j < l; ++j)
        if (x.cartan[j] != 0) coord.emplace(std::make_pair(d, j), 0);
      for (const auto& [idx, c] : x.root_part) coord.emplace(std::make_pair(d, l + idx), 0);
    }
    images.push_back(std::move(im));
  }
  int row = 0;
  for (auto& [k, v] : coord) v = row++;
  MatQ m(row == 0 ? 1 : row, static_cast<int>(basis.size()));
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [d, x] : images[j].terms) {
      for (int t = 0; t < l; ++t)
        if (x.cartan[t] != 0) m.at(coord[{d, t}], static_cast<int>(j)) = x.cartan[t];
      for (const auto& [idx, c] : x.root_part) m.at(coord[{d, l + idx}], static_cast<int>(j)) = c;
    }
  return kernel_dim(m);
}

int kmp_graded_dim(const RootSystem& rs, int i) {
  const int h = rs.coxeter_number;
  const int i0 = ((i % h) + h) % h;
  int dim = (i0 == 0) ? rs.rank : 0;
  for (const Root& r : rs.roots)
    if (((r.height % h) + h) % h == i0) ++dim;
  return dim;
}

}  // namespace coxrig
