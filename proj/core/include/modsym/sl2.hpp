#pragma once

// SL2(Z) word calculus, SL2(Z/n) enumeration and level certificates.

#include <cstdint>
#include <string>
#include <vector>

#include "modsym/cyclo.hpp"

namespace modsym {

struct ModularRep;

struct SL2Mat {
  Integer a = 1, b = 0, c = 0, d = 1;

  static SL2Mat identity() { return {}; }
  /// The generator s = [0 -1; 1 0].
  static SL2Mat s();
  /// t^k = [1 k; 0 1].
  static SL2Mat t(const Integer& k = 1);

  Integer det() const { return a * d - b * c; }
  SL2Mat inverse() const { return {d, -b, -c, a}; }
  /// Entries reduced into [0, n).
  SL2Mat reduced(std::int64_t n) const;
  bool is_identity_mod(std::int64_t n) const;
  std::string to_string() const;

  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y);
  friend bool operator==(const SL2Mat& x, const SL2Mat& y) = default;
};

struct WordToken {
  enum class Gen { S, T };
  Gen gen = Gen::T;
  Integer power;  // +-1 for S, nonzero for T
};

/// Product of tokens left to right, times -id (= s^2) when `negate` is set.
struct Word {
  std::vector<WordToken> tokens;
  bool negate = false;

  SL2Mat evaluate() const;
  std::string to_string() const;
};

/// Continued-fraction rewriting: gamma = t^{q1} s t^{q2} s ... t^{k} (times s^2).
Word decompose(const SL2Mat& gamma);

/// n^3 prod_{p | n} (1 - p^-2).
std::int64_t sl2_order_closed_form(std::int64_t n);

/// Size of SL2(Z/n) found by breadth-first search from the identity with
/// right multiplication by s and t; throws InternalError if it disagrees
/// with the closed form.
std::int64_t enumerate_order(std::int64_t n);

enum class CertifyMode {
  Full,         // store the canonical serialization of every matrix
  Fingerprint,  // store a SHA-256 digest of it
};

struct LevelCertificate {
  std::int64_t n = 0;
  std::int64_t group_order = 0;
  std::int64_t visited = 0;
  std::int64_t collisions_checked = 0;
  std::int64_t mismatches = 0;
  bool t_order_is_n = false;
  bool passed = false;
  CertifyMode mode = CertifyMode::Full;
  std::vector<std::string> reasoning;
};

/// Breadth-first search over SL2(Z/n), n = rep.level, storing rho of the first
/// word reaching each element and comparing every later arrival against it.
LevelCertificate certify_level(const ModularRep& rep, CertifyMode mode = CertifyMode::Full);

/// Words for random elements of Gamma(n), built as products of conjugates
/// g t^{nk} g^-1 and g (t^T)^{nk} g^-1. Spot checks only.
std::vector<Word> gamma_n_words(std::int64_t n, int count, std::uint64_t seed);

/// t^a s t^b s t^a s^-1 reduced mod n, with b = a^-1 mod n. Throws DomainError
/// unless gcd(a, n) = 1 and InternalError unless the result is diag(a, b).
SL2Mat dmatrix(std::int64_t a, std::int64_t n);

}  // namespace modsym
