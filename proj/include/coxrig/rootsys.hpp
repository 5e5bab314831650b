#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxrig/errors.hpp"

namespace coxrig {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline char family_letter(Family f) { return static_cast<char>(f); }
Family family_from_letter(char c);

struct SimpleType {
  Family family;
  int rank;

  std::string name() const;
  bool is_classical() const {
    return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
  }
};

/// Throws IllegalRank unless the rank is legal for the family
/// (A: >=1, B/C: >=2, D: >=3, E: 6..8, F: 4, G: 2).
void validate_type(const SimpleType& t);

/// Coxeter number from the per-family closed form; used as a cross-check
/// against ht(theta)+1 during construction.
int coxeter_number_table(const SimpleType& t);

struct Root {
  std::vector<int> coeffs;  // coordinates over the simple roots
  int height = 0;           // sum of the coordinates
};

struct RootSystem {
  SimpleType type;
  int rank = 0;            // l
  int coxeter_number = 0;  // h
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> simple_norm2_half;    // d_i = (alpha_i,alpha_i)/2, short roots d=1

  std::vector<Root> roots;  // all h*l roots, lexicographic on coeff vectors
  std::vector<int> simple_roots;  // simple_roots[i] = index of alpha_{i+1}
  int highest_root = -1;          // index of theta

  // derived per-root data
  std::vector<int> norm2_half;               // d_beta
  std::vector<std::vector<int>> coroot;      // alpha^vee over the simple coroots (integers)
  std::vector<std::vector<int>> pairing;     // pairing[b][j] = <beta, alpha_j^vee>
  std::vector<int> negative_of;              // index of -beta
  std::map<int, std::vector<int>> by_height;

  int dim() const { return (coxeter_number + 1) * rank; }
  size_t n_roots() const { return roots.size(); }

  /// Index of the root with the given coefficient vector, or -1.
  int find(const std::vector<int>& coeffs) const;

  /// Indices of the roots of height k (empty when |k| >= h).
  const std::vector<int>& of_height(int k) const;
};

RootSystem build_root_system(SimpleType t);

inline std::vector<int> roots_of_height(const RootSystem& rs, int k) { return rs.of_height(k); }

/// Multiplicity of each residue 1..h-1 among the exponents, computed from
/// the height distribution of positive roots (#\{ht=m\} - #\{ht=m+1\} copies
/// of the exponent m).
std::vector<int> exponent_multiplicities(const RootSystem& rs);

}  // namespace coxrig
