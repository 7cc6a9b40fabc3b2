#pragma once

// Galois action on modular representations.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "modsym/matrix.hpp"
#include "modsym/moddata.hpp"
#include "modsym/reps.hpp"
#include "modsym/report.hpp"

namespace modsym {

/// Matrix with (i, perm[i]) entry signs[i] and zeros elsewhere.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int n);
  int size() const { return static_cast<int>(perm.size()); }
  Matrix to_matrix(int order) const;
  SignedPermutation inverse() const;
  /// Cycle notation of perm, e.g. "(0 1)(2)".
  std::string cycles() const;

  /// Matrix product.
  friend SignedPermutation operator*(const SignedPermutation& x, const SignedPermutation& y);
  friend bool operator==(const SignedPermutation& x, const SignedPermutation& y) = default;
};

/// The permutation with sigma_a(s~_ij / s~_0j) = s~_{i,p(j)} / s~_{0,p(j)}.
/// Requires gcd(a, N) = 1; throws NotModular when no unique match exists.
std::vector<int> sigma_hat(const ModularData& data, std::int64_t a);

/// G = sigma_a(s) s^-1 for a unit a mod rep.level. Throws TheoremViolation
/// when G is not a signed permutation and InternalError when its
/// permutation disagrees with sigma_hat.
SignedPermutation gsigma(const ModularRep& rep, std::int64_t a);

struct GaloisReport {
  std::int64_t a = 1;
  std::int64_t b = 1;  // a^-1 mod n
  SignedPermutation g;
  /// galois_t: sigma_a(t) = t^a
  /// galois_action: sigma_a(s) = G s = s G^-1
  /// conjugation: sigma_a^2(s) = G s G^-1 and sigma_a^2(t) = G t G^-1
  /// t_permutation: sigma_a^2(t_ii) = t_{p(i)p(i)}
  /// word_formula: G = t^a s t^b s t^a s^-1
  /// word_square: (t^a s t^b s t^a)^2 = s^2
  CheckList checks;
  bool ok() const { return checks.ok(); }
};

GaloisReport verify_symmetry(const ModularRep& rep, std::int64_t a);

/// G_{a a'} = G_a G_{a'} for all units a, a' mod rep.level.
bool homomorphism_check(const ModularRep& rep);

struct TTildeReport {
  RootOfUnity zeta;
  bool unit_twist_trivial = false;     // theta_{p(0)} = 1 for every a
  bool ttilde_symmetric = false;       // sigma^2(theta_i) = theta_{p(i)} for every a, i
  bool alpha_order_divides_4 = false;  // alpha^4 = 1
  std::vector<std::pair<std::int64_t, RootOfUnity>> theta_sigma0;  // (a, theta_{p(0)})
};

/// Sweeps a over the units mod 12N, checks theta_{p(i)} / sigma^2(theta_i) =
/// theta_{p(0)} = zeta / sigma^2(zeta), and that the three booleans agree.
/// Throws TheoremViolation otherwise.
TTildeReport ttilde_symmetry(const ModularData& data);

}  // namespace modsym
