#pragma once

// Modular data (S-matrix s~ and twists theta) and everything derived from it.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "modsym/cyclo.hpp"
#include "modsym/matrix.hpp"
#include "modsym/report.hpp"

namespace modsym {

struct DerivedInvariants {
  std::vector<CycloNum> dims;   // d_i = s~_{0i}
  std::vector<int> dual;        // i -> i*
  CycloNum global_dim;
  CycloNum gauss_plus;
  CycloNum gauss_minus;
  RootOfUnity anomaly;          // p+ / p-
  std::int64_t fsexp = 1;       // N = lcm of the twist orders
  Matrix charge_conj;           // C, ones at (i, i*)
};

class ModularData {
 public:
  /// Builds data from s~ over any Q(zeta_M0) and twists of any order.
  /// The result lives in Q(zeta_M) with M = lcm(M0, 12 N). Throws InvalidInput
  /// on shape errors, theta_0 != 1 or s~_00 != 1.
  static ModularData create(std::string name, const Matrix& s_tilde, std::vector<RootOfUnity> theta);

  const std::string& name() const;
  int rank() const;
  /// Order M of the ambient cyclotomic field.
  int ambient() const;
  const Matrix& s_tilde() const;
  /// Twists, each expressed with order ambient().
  const std::vector<RootOfUnity>& theta() const;
  /// N, the lcm of the twist orders (available without deriving).
  std::int64_t twist_exponent() const;

  /// Cached result of derive(); throws NotModular when derivation fails.
  const DerivedInvariants& derived() const;

  /// Same data under another name.
  ModularData renamed(std::string name) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

bool operator==(const ModularData& a, const ModularData& b);

/// Computes dims, duality, Gauss sums, anomaly and N. Throws NotModular on failure.
DerivedInvariants derive(const ModularData& data);

/// Fusion multiplicities N_{ij}^k.
struct FusionTensor {
  int rank = 0;
  std::vector<std::int64_t> entries;  // index (i * rank + j) * rank + k

  std::int64_t operator()(int i, int j, int k) const {
    return entries[(static_cast<std::size_t>(i) * rank + j) * rank + k];
  }
};

/// Verlinde formula. Throws VerlindeFailure on a non-integral or negative entry.
FusionTensor verlinde(const ModularData& data);

/// Named checks: symmetric, dual_symmetric, s_squared, st_cubed,
/// charge_conjugation, unitarity, dims, verlinde.
CheckList validate(const ModularData& data);

/// Central charge c in [0, 8) with alpha = exp(pi i c / 2) and
/// p+ / sqrt(dim) = exp(pi i c / 4) under the standard embedding.
Rational central_charge(const ModularData& data);

}  // namespace modsym
