#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M).
//
// Elements are stored in the power basis 1, z, ..., z^{phi(M)-1} of a
// primitive M-th root of unity z, fully reduced modulo the cyclotomic
// polynomial Phi_M, as integer numerators over one positive common
// denominator with gcd(numerators, denominator) = 1. That form is unique,
// so equality is coefficient comparison. Small values live in int64 storage;
// anything that overflows transparently moves to GMP integers.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace modsym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Phi_M as integer coefficients, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int order);

class RootOfUnity;

/// One term of a cyclotomic literal: coeff * zeta_M^exponent.
struct CycloTerm {
  std::int64_t exponent = 0;
  Rational coeff;
};

class CycloNum {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycloNum() : CycloNum(1) {}
  /// Zero of Q(zeta_order).
  explicit CycloNum(int order);

  static CycloNum rational(int order, const Rational& value);
  static CycloNum integer(int order, std::int64_t value);
  /// zeta_order^exponent.
  static CycloNum root(int order, std::int64_t exponent);
  /// Sum of the given terms, exponents taken modulo `order`.
  static CycloNum make(int order, std::span<const CycloTerm> terms);
  static CycloNum make(int order, std::initializer_list<CycloTerm> terms) {
    return make(order, std::span<const CycloTerm>(terms.begin(), terms.size()));
  }

  int order() const { return order_; }
  /// phi(order), the length of the coefficient sequence.
  int degree() const;

  Rational coeff(int k) const;
  std::vector<Rational> coeffs() const;
  /// Nonzero terms in increasing exponent order.
  std::vector<CycloTerm> terms() const;

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;
  /// True when the value is a rational integer.
  bool is_integer() const;

  CycloNum operator-() const;
  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inv(); }
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_M.
  CycloNum inv() const;
  /// this * zeta_M^e, without a general multiplication.
  CycloNum times_root(std::int64_t e) const;
  CycloNum scaled(const Rational& q) const;
  CycloNum pow(std::int64_t k) const;

  /// Compact canonical byte encoding; equal values give equal bytes.
  void serialize(std::string& out) const;
  static CycloNum deserialize(std::string_view& in);

  std::string to_string() const;

 private:
  struct Small {
    std::vector<std::int64_t> num;
    std::int64_t den;
  };
  struct Big {
    std::vector<Integer> num;
    Integer den;
  };

  int order_ = 1;
  std::variant<Small, Big> rep_;

  friend struct CycloKernel;
};

CycloNum operator*(const Rational& q, const CycloNum& z);

/// sigma_a: zeta_M -> zeta_M^a. Requires gcd(a, M) = 1.
CycloNum galois_apply(std::int64_t a, const CycloNum& z);
/// Complex conjugation, sigma_{-1}.
CycloNum conj(const CycloNum& z);
/// True iff z lies in Q(zeta_d); d must divide the order of z.
bool in_subfield(const CycloNum& z, int d);
/// Image of z under Q(zeta_M) -> Q(zeta_M2); M must divide M2.
CycloNum promote(const CycloNum& z, int order);
/// Re-expresses z in Q(zeta_d), d | M. Throws DomainError if z is not in Q(zeta_d).
CycloNum demote(const CycloNum& z, int d);
/// Standard embedding zeta_M -> exp(2 pi i / M). Display and branch selection only.
std::complex<double> numeric(const CycloNum& z);
std::optional<RootOfUnity> as_root_of_unity(const CycloNum& z);

/// zeta_order^exponent with exponent kept modulo order.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(int order, std::int64_t exponent);

  static RootOfUnity one() { return {1, 0}; }

  int order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }
  /// order / gcd(order, exponent).
  std::int64_t multiplicative_order() const;

  /// Same value expressed with the given order; requires multiplicative_order() | order.
  RootOfUnity with_order(int order) const;
  CycloNum to_cyclo(int order) const;
  CycloNum to_cyclo() const { return to_cyclo(order_); }

  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;
  /// sigma_a applied to the root: zeta^e -> zeta^{a e}.
  RootOfUnity galois(std::int64_t a) const { return pow(a); }
  bool is_one() const { return exponent_ == 0; }

  /// The value exp(2 pi i q) as q in [0, 1).
  Rational turns() const;
  std::complex<double> numeric() const;
  std::string to_string() const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  /// Value equality (independent of the order used to write it down).
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);

 private:
  int order_ = 1;
  std::int64_t exponent_ = 0;
};

}  // namespace modsym
