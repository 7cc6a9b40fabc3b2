#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace modsym::nt {

/// Mathematical residue in [0, m).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

constexpr std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

/// Euler totient.
std::int64_t totient(std::int64_t n);

/// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Units of Z/n in increasing order (for n == 1 this is {0}, the residue of 1).
std::vector<std::int64_t> units(std::int64_t n);

/// a^{-1} mod m; throws DomainError when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Largest square-free divisor d of |n| with |n| / d a perfect square.
std::int64_t squarefree_part(std::int64_t n);

/// Smallest integer a' >= 1 with a' = a (mod n) and gcd(a', m) = 1.
/// Requires gcd(a, n) = 1.
std::int64_t lift_unit(std::int64_t a, std::int64_t n, std::int64_t m);

}  // namespace modsym::nt
