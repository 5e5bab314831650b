#include "coxrig/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coxrig {

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw IllegalRank(std::string("unknown family letter: ") + c);
  }
}

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

void validate_type(const SimpleType& t) {
  const int l = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = l >= 1; break;
    case Family::B: ok = l >= 2; break;
    case Family::C: ok = l >= 2; break;
    case Family::D: ok = l >= 3; break;
    case Family::E: ok = l >= 6 && l <= 8; break;
    case Family::F: ok = l == 4; break;
    case Family::G: ok = l == 2; break;
  }
  if (!ok) throw IllegalRank("rank " + std::to_string(l) + " is not legal for family " + std::string(1, family_letter(t.family)));
}

int coxeter_number_table(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank;
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

namespace {

void build_cartan(const SimpleType& t, std::vector<std::vector<int>>& c, std::vector<int>& d) {
  const int l = t.rank;
  c.assign(l, std::vector<int>(l, 0));
  d.assign(l, 1);
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l short
      c[l - 1][l - 2] = -1;
      for (int i = 0; i + 1 < l; ++i) d[i] = 2;
      break;
    case Family::C:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      c[l - 2][l - 1] = -1;  // alpha_l long
      c[l - 1][l - 2] = -2;
      d[l - 1] = 2;
      break;
    case Family::D:
      for (int i = 0; i + 3 < l; ++i) link(i, i + 1);
      link(l - 3, l - 2);
      link(l - 3, l - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-...-l, with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      c[1][2] = -2;
      c[2][1] = -1;
      link(2, 3);
      d[0] = d[1] = 2;
      break;
    case Family::G:
      c[0][1] = -1;
      c[1][0] = -3;
      d[1] = 3;
      break;
  }
}

}  // namespace

int RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), coeffs,
                             [](const Root& r, const std::vector<int>& c) { return r.coeffs < c; });
  if (it == roots.end() || it->coeffs != coeffs) return -1;
  return static_cast<int>(it - roots.begin());
}

const std::vector<int>& RootSystem::of_height(int k) const {
  static const std::vector<int> empty;
  auto it = by_height.find(k);
  return it == by_height.end() ? empty : it->second;
}

RootSystem build_root_system(SimpleType t) {
  validate_type(t);
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  build_cartan(t, rs.cartan, rs.simple_norm2_half);
  const int l = t.rank;

  // close the simple roots under the simple reflections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> v = std::move(queue.back());
    queue.pop_back();
    for (int j = 0; j < l; ++j) {
      long pair = 0;
      for (int i = 0; i < l; ++i) pair += static_cast<long>(v[i]) * rs.cartan[i][j];
      std::vector<int> w = v;
      w[j] -= static_cast<int>(pair);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }

  rs.roots.reserve(seen.size());
  for (const std::vector<int>& v : seen) {
    Root r;
    r.coeffs = v;
    for (int x : v) r.height += x;
    rs.roots.push_back(std::move(r));
  }
  // std::set iterates lexicographically, so roots are already sorted

  const int n = static_cast<int>(rs.roots.size());
  rs.simple_roots.assign(l, -1);
  int max_h = 0;
  for (int i = 0; i < n; ++i) {
    const Root& r = rs.roots[i];
    rs.by_height[r.height].push_back(i);
    if (r.height > max_h) {
      max_h = r.height;
      rs.highest_root = i;
    }
    if (r.height == 1)
      for (int j = 0; j < l; ++j)
        if (r.coeffs[j] == 1) rs.simple_roots[j] = i;
  }
  rs.coxeter_number = max_h + 1;
  if (rs.coxeter_number != coxeter_number_table(t))
    throw std::logic_error("Coxeter number mismatch for " + t.name());
  if (n != rs.coxeter_number * l) throw std::logic_error("root count mismatch for " + t.name());

  rs.norm2_half.resize(n);
  rs.coroot.resize(n);
  rs.pairing.resize(n);
  rs.negative_of.resize(n);
  for (int b = 0; b < n; ++b) {
    const std::vector<int>& c = rs.roots[b].coeffs;
    long norm2 = 0;  // (beta,beta) with (alpha_i,alpha_j) = d_j * cartan[i][j]
    rs.pairing[b].assign(l, 0);
    for (int j = 0; j < l; ++j) {
      long p = 0;
      for (int i = 0; i < l; ++i) p += static_cast<long>(c[i]) * rs.cartan[i][j];
      rs.pairing[b][j] = static_cast<int>(p);
      norm2 += p * rs.simple_norm2_half[j] * c[j];
    }
    if (norm2 % 2 != 0) throw std::logic_error("odd root norm");
    const long d_beta = norm2 / 2;
    rs.norm2_half[b] = static_cast<int>(d_beta);
    rs.coroot[b].assign(l, 0);
    for (int j = 0; j < l; ++j) {
      long num = static_cast<long>(c[j]) * rs.simple_norm2_half[j];
      if (num % d_beta != 0) throw std::logic_error("non-integral coroot");
      rs.coroot[b][j] = static_cast<int>(num / d_beta);
    }
    std::vector<int> neg(l);
    for (int j = 0; j < l; ++j) neg[j] = -c[j];
    rs.negative_of[b] = rs.find(neg);
    if (rs.negative_of[b] < 0) throw std::logic_error("roots not closed under negation");
  }
  return rs;
}

std::vector<int> exponent_multiplicities(const RootSystem& rs) {
  const int h = rs.coxeter_number;
  std::vector<int> mult(h, 0);
  for (int m = 1; m < h; ++m) {
    int a = static_cast<int>(rs.of_height(m).size());
    int b = static_cast<int>(rs.of_height(m + 1).size());
    mult[m] = a - b;
  }
  return mult;
}

}  // namespace coxrig
