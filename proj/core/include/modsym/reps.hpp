#pragma once

// Genuine SL2(Z) representations lifted from modular data.

#include <optional>
#include <vector>

#include "modsym/matrix.hpp"
#include "modsym/moddata.hpp"
#include "modsym/sl2.hpp"

namespace modsym {

struct ModularRep {
  ModularData base;
  Matrix s;                    // over Q(zeta_ambient)
  std::vector<RootOfUnity> t;  // diagonal of t, ambient order
  int level = 1;               // lcm of the orders of the t entries
  int sgn_s = 1;               // s^2 = sgn_s C
  RootOfUnity zeta;            // sixth root of the anomaly used
  RootOfUnity x;               // twist in mu_12
  Matrix s_level;              // s over Q(zeta_level)

  int ambient() const { return s.order(); }
  /// sgn_s C s over Q(zeta_level).
  Matrix s_inverse() const;
  /// diag(t) over Q(zeta_level).
  Matrix t_matrix() const;
  /// C over Q(zeta_level).
  Matrix charge_conj() const;
};

/// The six zeta in mu_M with zeta^6 = alpha, sorted by exponent.
std::vector<RootOfUnity> sixth_roots_of_anomaly(const ModularData& data);

/// s = zeta^3 / p+ s~, t = zeta^-1 t~. Relations are verified.
ModularRep rep_from_zeta(const ModularData& data, const RootOfUnity& zeta);

/// s -> x^-3 s, t -> x t. Requires x^12 = 1.
ModularRep twist(const ModularRep& rep, const RootOfUnity& x);

/// The twelve liftings twist(rep_from_zeta(zeta0), zeta_12^k), k = 0..11,
/// with zeta0 the sixth root of smallest exponent.
std::vector<ModularRep> all_liftings(const ModularData& data);

/// lcm of the t orders; throws TheoremViolation unless N | n | 12N.
std::int64_t level(const ModularRep& rep);

/// Every entry of s and t lies in Q(zeta_level), tested by Galois fixedness.
bool rationality_check(const ModularRep& rep);

struct KappaResult {
  bool trivial = false;
  RootOfUnity zeta;
  std::optional<RootOfUnity> witness;   // smallest exponent
  std::vector<RootOfUnity> witnesses;   // all x in mu_12 with (x / zeta)^N = 1
};

/// Tests (x / zeta)^N = 1 over x in mu_12. When trivial, checks that
/// x^3 p+ / zeta^3 lies in Q(zeta_N); when 4 does not divide N, checks
/// triviality. Violations throw TheoremViolation.
KappaResult kappa_trivial(const ModularData& data);
KappaResult kappa_trivial(const ModularData& data, const RootOfUnity& zeta);

/// rho(gamma) over Q(zeta_level).
Matrix evaluate(const ModularRep& rep, const Word& word);
Matrix evaluate(const ModularRep& rep, const SL2Mat& gamma);

}  // namespace modsym
