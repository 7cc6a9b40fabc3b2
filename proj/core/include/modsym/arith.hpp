#pragma once

// Anomaly arithmetic: parity sign J, square-root witnesses, integrality
// classes, anomaly order constraints, subfield structure, and the unit-group
// lemmas they rest on.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modsym/moddata.hpp"
#include "modsym/reps.hpp"
#include "modsym/report.hpp"

namespace modsym {

/// Jacobi symbol (a / m) for odd m >= 1; throws DomainError for even m.
int jacobi(std::int64_t a, std::int64_t m);

/// J = (-1)^(1 + ord alpha).
int j_parity(const DerivedInvariants& inv);

/// w = x^3 p+ / zeta^3 over Q(zeta_N) for the smallest kappa witness x.
/// Checks w^2 = J dim and that zeta_4 is not in Q(zeta_N). Requires 4 not
/// dividing N (DomainError otherwise); TheoremViolation on failure.
CycloNum sqrt_witness(const ModularData& data);

enum class IntegralityKind { Integral, WeaklyIntegralOnly, MockIntegralOnly, Generic };

std::string to_string(IntegralityKind kind);

struct IntegralityClass {
  IntegralityKind kind = IntegralityKind::Generic;
  bool dims_integral = false;          // every d_i in Z
  bool dims_squared_integral = false;  // every d_i^2 in Z
  bool dim_integral = false;           // dim in Z
  bool integral() const { return dims_integral; }
  bool weakly_integral() const { return dims_squared_integral; }
  bool mock_integral() const { return dim_integral; }
};

IntegralityClass integrality(const DerivedInvariants& inv);

struct AnomalyReport {
  std::int64_t ord_alpha = 1;
  int j = 1;
  IntegralityClass integrality;
  std::int64_t fsexp = 1;
  std::optional<Integer> dim;  // when dim is an integer
  /// integral_alpha4, weakly_integral_alpha8, odd_dim_j_parity,
  /// odd_dim_squarefree_divides_n, odd_dim_integral_alpha; inapplicable
  /// implications are recorded as passed with detail "not applicable".
  CheckList checks;
  /// Prime supports of N and dim (mock integral case), informational only.
  std::string prime_support;
  bool ok() const { return checks.ok(); }
};

AnomalyReport anomaly_checks(const ModularData& data);

struct SubfieldReport {
  std::int64_t n = 1;
  std::vector<std::vector<std::int64_t>> h_b;  // per label b
  std::vector<std::int64_t> h;                 // intersection
  std::int64_t conductor = 1;
  /// hb_fixes_t, h_exponent_two, quotient_divides_24, gcd_divides_2, totient_ratio_divides_8
  CheckList checks;
  bool ok() const { return checks.ok(); }
};

/// H_b = units a mod n fixing every ratio s_ib / s_0b; H their intersection;
/// conductor = least k | n whose congruence kernel lies in H.
SubfieldReport subfield_report(const ModularRep& rep);

/// Unit group of Z/m has exponent at most 2 iff m | 24. Both sides are
/// computed independently; InternalError if they disagree.
bool unit_exponent_two(std::int64_t m);

struct QuotientReport {
  std::int64_t k = 1;
  std::int64_t n = 1;
  bool hypothesis = false;  // a = 1 mod k implies a^2 = 1 mod n, over units a mod n
  bool quotient_divides_24 = false;
  bool gcd_divides_2 = false;
  bool totient_ratio_divides_8 = false;
};

/// Brute-forces the hypothesis; when it holds, checks the three conclusions
/// and throws InternalError if one fails.
QuotientReport quotient_report(std::int64_t k, std::int64_t n);

}  // namespace modsym
