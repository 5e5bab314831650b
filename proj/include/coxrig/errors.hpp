#pragma once

#include <stdexcept>
#include <string>

namespace coxrig {

/// Rank outside the legal range for the family (e.g. B_1, E_9, F_3).
struct IllegalRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Slope numerator r outside [1,h) or not coprime to the Coxeter number.
struct BadSlopeNumerator : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Partition-based formulas requested for an exceptional family.
struct NotClassical : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two independent centralizer-dimension computations disagree.
struct MismatchFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coxrig
