#pragma once

// Drinfeld double Z(A) of modular data A and its canonical representation.

#include <cstdint>
#include <utility>
#include <vector>

#include "modsym/galois.hpp"
#include "modsym/moddata.hpp"
#include "modsym/reps.hpp"
#include "modsym/report.hpp"

namespace modsym {

struct DoubledData {
  ModularData base;
  ModularData data;                       // labels (i, j) flattened row-major
  std::vector<std::pair<int, int>> pairs;  // label -> (i, j)

  int index(int i, int j) const { return i * base.rank() + j; }
};

/// s_{(i,j),(k,l)} = s~_ik conj(s~_jl), theta_{(i,j)} = theta_i / theta_j.
/// Throws InternalError if the result fails validation.
DoubledData drinfeld_double(const ModularData& data);

/// s = s~ / dim A, t = t~ of the double; level N. Throws DomainError unless
/// the double is anomaly free.
ModularRep canonical_rep(const DoubledData& dd);

struct DoubleSymmetryReport {
  std::int64_t n = 1;
  /// anomaly_free, fsexp_preserved, canonical_level, normalization,
  /// signed_permutation, t_hat_symmetry, word_formula, product_structure
  CheckList checks;
  std::vector<std::pair<std::int64_t, SignedPermutation>> g;  // per unit a mod N
  bool ok() const { return checks.ok(); }
};

/// Builds the double and its canonical representation and checks, for every
/// unit a mod N, that G is a signed permutation, that the unnormalized twist
/// matrix satisfies sigma_a^2(t) = G t G^-1, that G = t^a s t^b s t^a s^-1,
/// and that G splits as a product of the base signed permutations.
DoubleSymmetryReport verify_double_symmetry(const ModularData& data);

}  // namespace modsym
