#include "modsym/numtheory.hpp"

#include "modsym/errors.hpp"

namespace modsym::nt {

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::int64_t> units(std::int64_t n) {
  if (n == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw DomainError("inverse_mod: residue is not a unit");
  return mod(s0, m);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  __int128 result = 1, b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (std::gcd(mod(a, m), m) != 1) throw DomainError("multiplicative_order: not a unit");
  if (m == 1) return 1;
  std::int64_t k = 1;
  std::int64_t x = mod(a, m);
  while (x != 1) {
    x = static_cast<std::int64_t>(static_cast<__int128>(x) * mod(a, m) % m);
    ++k;
  }
  return k;
}

std::int64_t squarefree_part(std::int64_t n) {
  if (n < 0) n = -n;
  if (n == 0) return 0;
  std::int64_t result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  return result * n;
}

std::int64_t lift_unit(std::int64_t a, std::int64_t n, std::int64_t m) {
  if (std::gcd(mod(a, n), n) != 1 && n != 1)
    throw DomainError("lift_unit: residue is not a unit");
  std::int64_t base = mod(a, n);
  if (base == 0) base = n;  // n == 1
  for (std::int64_t k = 0;; ++k) {
    std::int64_t cand = base + k * n;
    if (std::gcd(cand, m) == 1) return cand;
  }
}

}  // namespace modsym::nt
