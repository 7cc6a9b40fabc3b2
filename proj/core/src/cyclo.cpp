#include "modsym/cyclo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of p by a monic divisor q.
IntPoly divide_exact_monic(IntPoly p, const IntPoly& q) {
  const std::size_t dq = q.size() - 1;
  if (p.size() < q.size()) throw InternalError("cyclotomic division: degree too small");
  IntPoly quot(p.size() - dq);
  for (std::size_t k = p.size(); k-- > dq;) {
    Integer c = p[k];
    quot[k - dq] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
  }
  trim(p);
  if (!p.empty()) throw InternalError("cyclotomic division left a remainder");
  return quot;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, IntPoly>& poly_cache() {
  static std::map<int, IntPoly> cache;
  return cache;
}

// ---------------------------------------------------------------------------
// Per-order field tables.

struct Field {
  int order = 1;
  int phi = 1;
  std::vector<std::int64_t> poly;                 // Phi_M, size phi + 1
  std::vector<std::vector<std::int64_t>> power;   // x^e mod Phi_M, e in [0, M)
  int power_bits = 0;                             // bit length of 1 + phi * max|power|
};

int bit_length(u128 v) {
  int b = 0;
  while (v != 0) {
    ++b;
    v >>= 1;
  }
  return b;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

std::unique_ptr<Field> build_field(int order) {
  if (order < 1) throw DomainError("cyclotomic field order must be positive");
  if (order > 20000) throw DomainError("cyclotomic field order too large");
  auto f = std::make_unique<Field>();
  f->order = order;
  IntPoly phi_poly = cyclotomic_polynomial(order);
  f->phi = static_cast<int>(phi_poly.size()) - 1;
  for (const Integer& c : phi_poly) {
    if (!c.fits_slong_p()) throw DomainError("cyclotomic coefficients too large");
    f->poly.push_back(c.get_si());
  }
  const int phi = f->phi;
  f->power.assign(order, std::vector<std::int64_t>(phi, 0));
  f->power[0][0] = 1;
  if (phi == 1 && order > 1) {
    // Phi_2 = x + 1, so x = -1; phi == 1 only for orders 1 and 2.
  }
  std::int64_t max_abs = 1;
  for (int e = 1; e < order; ++e) {
    const auto& prev = f->power[e - 1];
    auto& cur = f->power[e];
    std::int64_t top = prev[phi - 1];
    for (int j = phi - 1; j >= 1; --j) cur[j] = prev[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int j = 0; j < phi; ++j) {
        i128 v = static_cast<i128>(cur[j]) - static_cast<i128>(top) * f->poly[j];
        if (v > INT64_MAX / 4 || v < INT64_MIN / 4) throw DomainError("cyclotomic power table overflow");
        cur[j] = static_cast<std::int64_t>(v);
      }
    }
    for (std::int64_t v : cur) max_abs = std::max<std::int64_t>(max_abs, v < 0 ? -v : v);
  }
  f->power_bits = bit_length(static_cast<u128>(1) + static_cast<u128>(phi) * static_cast<u128>(max_abs));
  return f;
}

const Field& field(int order) {
  thread_local const Field* last = nullptr;
  if (last != nullptr && last->order == order) return *last;
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Field>> fields;
  {
    std::lock_guard lock(mutex);
    auto it = fields.find(order);
    if (it != fields.end()) {
      last = it->second.get();
      return *last;
    }
  }
  auto built = build_field(order);
  std::lock_guard lock(mutex);
  auto [it, inserted] = fields.emplace(order, std::move(built));
  last = it->second.get();
  return *last;
}

// ---------------------------------------------------------------------------
// GMP <-> int128 glue.

Integer to_integer(i128 v) {
  const bool neg = v < 0;
  u128 mag = uabs(v);
  std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  Integer out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (neg) out = -out;
  return out;
}

Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

// Kernels with access to the private representation.
struct CycloKernel {
  using Small = CycloNum::Small;
  using Big = CycloNum::Big;

  static CycloNum from_small(int order, Small s) {
    CycloNum z(order);
    z.rep_ = std::move(s);
    return z;
  }

  // Canonicalizes an int128 numerator vector over an int128 denominator.
  static CycloNum normalize(int order, std::vector<i128>& num, i128 den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      den = -den;
      for (auto& c : num) c = -c;
    }
    u128 g = static_cast<u128>(den);
    for (i128 c : num) {
      if (g == 1) break;
      if (c != 0) g = gcd_u128(g, uabs(c));
    }
    bool all_zero = std::all_of(num.begin(), num.end(), [](i128 c) { return c == 0; });
    if (all_zero) {
      den = 1;
      g = 1;
    }
    if (g > 1) {
      const i128 gi = static_cast<i128>(g);
      for (auto& c : num) c /= gi;
      den /= gi;
    }
    bool fits = den <= INT64_MAX;
    for (i128 c : num) {
      if (c > INT64_MAX || c < INT64_MIN) {
        fits = false;
        break;
      }
    }
    CycloNum z(order);
    if (fits) {
      Small s;
      s.num.resize(num.size());
      for (std::size_t i = 0; i < num.size(); ++i) s.num[i] = static_cast<std::int64_t>(num[i]);
      s.den = static_cast<std::int64_t>(den);
      z.rep_ = std::move(s);
    } else {
      Big b;
      b.num.reserve(num.size());
      for (i128 c : num) b.num.push_back(to_integer(c));
      b.den = to_integer(den);
      z.rep_ = std::move(b);
    }
    return z;
  }

  static CycloNum normalize(int order, std::vector<Integer>& num, Integer den) {
    if (den == 0) throw DomainError("zero denominator");
    if (den < 0) {
      den = -den;
      for (auto& c : num) c = -c;
    }
    Integer g = den;
    bool all_zero = true;
    for (const Integer& c : num) {
      if (c != 0) {
        all_zero = false;
        if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      }
    }
    if (all_zero) {
      den = 1;
      g = 1;
    }
    if (g != 1) {
      for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
    bool fits = den.fits_slong_p();
    for (const Integer& c : num) {
      if (!c.fits_slong_p()) {
        fits = false;
        break;
      }
    }
    CycloNum z(order);
    if (fits) {
      Small s;
      s.num.resize(num.size());
      for (std::size_t i = 0; i < num.size(); ++i) s.num[i] = num[i].get_si();
      s.den = den.get_si();
      z.rep_ = std::move(s);
    } else {
      Big b;
      b.num = std::move(num);
      b.den = std::move(den);
      z.rep_ = std::move(b);
    }
    return z;
  }

  static Big to_big(const CycloNum& z) {
    if (const auto* b = std::get_if<Big>(&z.rep_)) return *b;
    const auto& s = std::get<Small>(z.rep_);
    Big b;
    b.num.reserve(s.num.size());
    for (std::int64_t c : s.num) b.num.push_back(to_integer(c));
    b.den = to_integer(s.den);
    return b;
  }

  static const Small* small(const CycloNum& z) { return std::get_if<Small>(&z.rep_); }

  static int max_bits(const Small& s) {
    std::uint64_t m = 0;
    for (std::int64_t c : s.num) {
      std::uint64_t a = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
      m = std::max(m, a);
    }
    return bit_length(m);
  }

  static CycloNum add(const CycloNum& a, const CycloNum& b, bool subtract) {
    if (a.order_ != b.order_) throw DomainError("cyclotomic order mismatch in addition");
    const int order = a.order_;
    const Small* sa = small(a);
    const Small* sb = small(b);
    if (sa != nullptr && sb != nullptr) {
      const std::size_t n = sa->num.size();
      std::vector<i128> num(n);
      i128 den;
      if (sa->den == sb->den) {
        for (std::size_t i = 0; i < n; ++i)
          num[i] = subtract ? static_cast<i128>(sa->num[i]) - sb->num[i]
                            : static_cast<i128>(sa->num[i]) + sb->num[i];
        den = sa->den;
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          i128 x = static_cast<i128>(sa->num[i]) * sb->den;
          i128 y = static_cast<i128>(sb->num[i]) * sa->den;
          num[i] = subtract ? x - y : x + y;
        }
        den = static_cast<i128>(sa->den) * sb->den;
      }
      return normalize(order, num, den);
    }
    Big ba = to_big(a);
    Big bb = to_big(b);
    std::vector<Integer> num(ba.num.size());
    for (std::size_t i = 0; i < num.size(); ++i) {
      Integer x = ba.num[i] * bb.den;
      Integer y = bb.num[i] * ba.den;
      num[i] = subtract ? Integer(x - y) : Integer(x + y);
    }
    return normalize(order, num, ba.den * bb.den);
  }

  static CycloNum mul(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_) throw DomainError("cyclotomic order mismatch in multiplication");
    const int order = a.order_;
    const Field& f = field(order);
    const int phi = f.phi;
    const Small* sa = small(a);
    const Small* sb = small(b);
    if (sa != nullptr && sb != nullptr &&
        max_bits(*sa) + max_bits(*sb) + bit_length(static_cast<u128>(phi)) + f.power_bits <= 124) {
      std::vector<i128> conv(2 * phi - 1, 0);
      for (int i = 0; i < phi; ++i) {
        const std::int64_t x = sa->num[i];
        if (x == 0) continue;
        for (int j = 0; j < phi; ++j) conv[i + j] += static_cast<i128>(x) * sb->num[j];
      }
      std::vector<i128> out(conv.begin(), conv.begin() + phi);
      for (int k = phi; k < 2 * phi - 1; ++k) {
        const i128 c = conv[k];
        if (c == 0) continue;
        const auto& row = f.power[k % order];
        for (int j = 0; j < phi; ++j)
          if (row[j] != 0) out[j] += c * row[j];
      }
      const i128 den = static_cast<i128>(sa->den) * sb->den;
      return normalize(order, out, den);
    }
    Big ba = to_big(a);
    Big bb = to_big(b);
    std::vector<Integer> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
      if (ba.num[i] == 0) continue;
      for (int j = 0; j < phi; ++j)
        mpz_addmul(conv[i + j].get_mpz_t(), ba.num[i].get_mpz_t(), bb.num[j].get_mpz_t());
    }
    std::vector<Integer> out(conv.begin(), conv.begin() + phi);
    reduce_high(f, conv, out, phi);
    return normalize(order, out, ba.den * bb.den);
  }

  static void reduce_high(const Field& f, const std::vector<Integer>& conv, std::vector<Integer>& out,
                          int from) {
    for (std::size_t k = from; k < conv.size(); ++k) {
      if (conv[k] == 0) continue;
      const auto& row = f.power[k % f.order];
      for (int j = 0; j < f.phi; ++j) {
        if (row[j] > 0)
          mpz_addmul_ui(out[j].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(row[j]));
        else if (row[j] < 0)
          mpz_submul_ui(out[j].get_mpz_t(), conv[k].get_mpz_t(), static_cast<unsigned long>(-row[j]));
      }
    }
  }

  // out = sum_k num[k] * x^{exp(k)} reduced, for an exponent map k -> exp(k) in [0, M).
  template <class ExpFn>
  static CycloNum remap(const CycloNum& z, int target_order, ExpFn exp_of) {
    const Field& f = field(target_order);
    const int phi = f.phi;
    if (const Small* s = small(z); s != nullptr && max_bits(*s) + f.power_bits <= 124) {
      std::vector<i128> out(phi, 0);
      for (std::size_t k = 0; k < s->num.size(); ++k) {
        const std::int64_t c = s->num[k];
        if (c == 0) continue;
        const auto& row = f.power[exp_of(static_cast<std::int64_t>(k))];
        for (int j = 0; j < phi; ++j)
          if (row[j] != 0) out[j] += static_cast<i128>(c) * row[j];
      }
      return normalize(target_order, out, s->den);
    }
    Big b = to_big(z);
    std::vector<Integer> out(phi);
    for (std::size_t k = 0; k < b.num.size(); ++k) {
      if (b.num[k] == 0) continue;
      const auto& row = f.power[exp_of(static_cast<std::int64_t>(k))];
      for (int j = 0; j < phi; ++j) {
        if (row[j] > 0)
          mpz_addmul_ui(out[j].get_mpz_t(), b.num[k].get_mpz_t(), static_cast<unsigned long>(row[j]));
        else if (row[j] < 0)
          mpz_submul_ui(out[j].get_mpz_t(), b.num[k].get_mpz_t(), static_cast<unsigned long>(-row[j]));
      }
    }
    return normalize(target_order, out, b.den);
  }

  static std::vector<Rational> rational_coeffs(const CycloNum& z) {
    std::vector<Rational> out;
    if (const Small* s = small(z)) {
      for (std::int64_t c : s->num) {
        Rational q(to_integer(c), to_integer(s->den));
        q.canonicalize();
        out.push_back(q);
      }
    } else {
      const Big& b = std::get<Big>(z.rep_);
      for (const Integer& c : b.num) {
        Rational q(c, b.den);
        q.canonicalize();
        out.push_back(q);
      }
    }
    return out;
  }

  static CycloNum from_rationals(int order, const std::vector<Rational>& coeffs) {
    Integer den = 1;
    for (const Rational& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> num(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) num[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    return normalize(order, num, den);
  }

  static bool equal(const CycloNum& a, const CycloNum& b) {
    if (a.order_ != b.order_ || a.rep_.index() != b.rep_.index()) return false;
    if (const Small* sa = small(a)) {
      const Small* sb = small(b);
      return sa->den == sb->den && sa->num == sb->num;
    }
    const Big& ba = std::get<Big>(a.rep_);
    const Big& bb = std::get<Big>(b.rep_);
    return ba.den == bb.den && ba.num == bb.num;
  }
};

// ---------------------------------------------------------------------------

std::vector<Integer> cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic_polynomial: order must be positive");
  {
    std::lock_guard lock(poly_mutex());
    auto it = poly_cache().find(order);
    if (it != poly_cache().end()) return it->second;
  }
  IntPoly p(order + 1, 0);
  p[0] = -1;
  p[order] = 1;
  for (std::int64_t d : nt::divisors(order)) {
    if (d == order) continue;
    p = divide_exact_monic(std::move(p), cyclotomic_polynomial(static_cast<int>(d)));
  }
  std::lock_guard lock(poly_mutex());
  poly_cache().emplace(order, p);
  return p;
}

CycloNum::CycloNum(int order) : order_(order) {
  const Field& f = field(order);
  Small s;
  s.num.assign(f.phi, 0);
  s.den = 1;
  rep_ = std::move(s);
}

int CycloNum::degree() const { return field(order_).phi; }

CycloNum CycloNum::rational(int order, const Rational& value) {
  std::vector<Rational> coeffs(field(order).phi, Rational(0));
  coeffs[0] = value;
  return CycloKernel::from_rationals(order, coeffs);
}

CycloNum CycloNum::integer(int order, std::int64_t value) {
  CycloNum z(order);
  std::get<Small>(z.rep_).num[0] = value;
  return z;
}

CycloNum CycloNum::root(int order, std::int64_t exponent) {
  const Field& f = field(order);
  Small s;
  s.num = f.power[nt::mod(exponent, order)];
  s.den = 1;
  return CycloKernel::from_small(order, std::move(s));
}

CycloNum CycloNum::make(int order, std::span<const CycloTerm> terms) {
  const Field& f = field(order);
  std::vector<Rational> acc(f.phi, Rational(0));
  for (const CycloTerm& t : terms) {
    if (t.coeff == 0) continue;
    const auto& row = f.power[nt::mod(t.exponent, order)];
    for (int j = 0; j < f.phi; ++j)
      if (row[j] != 0) acc[j] += t.coeff * Rational(to_integer(row[j]));
  }
  return CycloKernel::from_rationals(order, acc);
}

Rational CycloNum::coeff(int k) const { return CycloKernel::rational_coeffs(*this).at(k); }

std::vector<Rational> CycloNum::coeffs() const { return CycloKernel::rational_coeffs(*this); }

std::vector<CycloTerm> CycloNum::terms() const {
  std::vector<CycloTerm> out;
  auto cs = coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (cs[k] != 0) out.push_back({static_cast<std::int64_t>(k), cs[k]});
  return out;
}

bool CycloNum::is_zero() const {
  if (const auto* s = std::get_if<Small>(&rep_))
    return std::all_of(s->num.begin(), s->num.end(), [](std::int64_t c) { return c == 0; });
  return false;  // big values are never zero after normalization
}

bool CycloNum::is_one() const {
  const auto* s = std::get_if<Small>(&rep_);
  if (s == nullptr || s->den != 1 || s->num[0] != 1) return false;
  return std::all_of(s->num.begin() + 1, s->num.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<Rational> CycloNum::as_rational() const {
  auto cs = coeffs();
  for (std::size_t k = 1; k < cs.size(); ++k)
    if (cs[k] != 0) return std::nullopt;
  return cs[0];
}

bool CycloNum::is_integer() const {
  auto q = as_rational();
  return q && q->get_den() == 1;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  if (auto* s = std::get_if<Small>(&out.rep_)) {
    for (auto c : s->num) {
      if (c == INT64_MIN) return CycloKernel::mul(*this, CycloNum::integer(order_, -1));
    }
    for (auto& c : s->num) c = -c;
  } else {
    for (auto& c : std::get<Big>(out.rep_).num) c = -c;
  }
  return out;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) { return CycloKernel::add(a, b, false); }
CycloNum operator-(const CycloNum& a, const CycloNum& b) { return CycloKernel::add(a, b, true); }
CycloNum operator*(const CycloNum& a, const CycloNum& b) { return CycloKernel::mul(a, b); }
bool operator==(const CycloNum& a, const CycloNum& b) { return CycloKernel::equal(a, b); }

CycloNum operator*(const Rational& q, const CycloNum& z) { return z.scaled(q); }

CycloNum CycloNum::scaled(const Rational& q) const {
  return CycloKernel::mul(*this, CycloNum::rational(order_, q));
}

CycloNum CycloNum::times_root(std::int64_t e) const {
  const int m = order_;
  const std::int64_t shift = nt::mod(e, m);
  return CycloKernel::remap(*this, m, [m, shift](std::int64_t k) { return (k + shift) % m; });
}

CycloNum CycloNum::pow(std::int64_t k) const {
  CycloNum base = k < 0 ? inv() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  CycloNum result = CycloNum::integer(order_, 1);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) {
      if (k == b.size() - 1) break;
      continue;
    }
    Rational c = a[k] / lead;
    q[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

CycloNum CycloNum::inv() const {
  if (is_zero()) throw DomainError("division by zero in cyclotomic field");
  QPoly modulus;
  for (const Integer& c : cyclotomic_polynomial(order_)) modulus.emplace_back(c);
  QPoly r0 = modulus;
  QPoly r1 = coeffs();
  trim(r1);
  QPoly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw InternalError("cyclotomic inverse: element shares a factor with Phi_M");
  const Rational c = r1[0];
  auto [unused, rem] = divmod(s1, modulus);
  (void)unused;
  std::vector<Rational> out(degree(), Rational(0));
  for (std::size_t k = 0; k < rem.size(); ++k) out[k] = rem[k] / c;
  CycloNum result = CycloKernel::from_rationals(order_, out);
  if (!(result * *this).is_one()) throw InternalError("cyclotomic inverse failed verification");
  return result;
}

namespace {

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t get_varint(std::string_view& in) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (in.empty()) throw ParseError("truncated cyclotomic encoding");
    auto byte = static_cast<unsigned char>(in.front());
    in.remove_prefix(1);
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) return v;
    shift += 7;
  }
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t v) {
  return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1);
}

void put_integer(std::string& out, const Integer& v) {
  std::size_t count = 0;
  std::vector<unsigned char> bytes((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 1);
  mpz_export(bytes.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  put_varint(out, (count << 1) | (v < 0 ? 1u : 0u));
  out.append(reinterpret_cast<const char*>(bytes.data()), count);
}

Integer get_integer(std::string_view& in) {
  std::uint64_t head = get_varint(in);
  std::size_t count = head >> 1;
  if (in.size() < count) throw ParseError("truncated cyclotomic encoding");
  Integer v;
  mpz_import(v.get_mpz_t(), count, 1, 1, 1, 0, in.data());
  in.remove_prefix(count);
  if (head & 1) v = -v;
  return v;
}

}  // namespace

void CycloNum::serialize(std::string& out) const {
  put_varint(out, static_cast<std::uint64_t>(order_));
  if (const auto* s = std::get_if<Small>(&rep_)) {
    out.push_back('\0');
    put_varint(out, zigzag(s->den));
    for (std::int64_t c : s->num) put_varint(out, zigzag(c));
  } else {
    const Big& b = std::get<Big>(rep_);
    out.push_back('\1');
    put_integer(out, b.den);
    for (const Integer& c : b.num) put_integer(out, c);
  }
}

CycloNum CycloNum::deserialize(std::string_view& in) {
  const int order = static_cast<int>(get_varint(in));
  if (in.empty()) throw ParseError("truncated cyclotomic encoding");
  const char tag = in.front();
  in.remove_prefix(1);
  const int phi = field(order).phi;
  CycloNum z(order);
  if (tag == '\0') {
    Small s;
    s.den = unzigzag(get_varint(in));
    s.num.resize(phi);
    for (int k = 0; k < phi; ++k) s.num[k] = unzigzag(get_varint(in));
    z.rep_ = std::move(s);
  } else {
    Big b;
    b.den = get_integer(in);
    b.num.resize(phi);
    for (int k = 0; k < phi; ++k) b.num[k] = get_integer(in);
    z.rep_ = std::move(b);
  }
  return z;
}

std::string CycloNum::to_string() const {
  auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : ts) {
    Rational c = t.coeff;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.exponent == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << order_;
    if (t.exponent != 1) os << "^" << t.exponent;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

CycloNum galois_apply(std::int64_t a, const CycloNum& z) {
  const int m = z.order();
  const std::int64_t ar = nt::mod(a, m);
  if (std::gcd(ar, static_cast<std::int64_t>(m)) != 1 && m != 1)
    throw DomainError("galois_apply: residue not coprime to the field order");
  if (ar == 1 || m <= 2) return z;
  return CycloKernel::remap(z, m, [m, ar](std::int64_t k) { return (k * ar) % m; });
}

CycloNum conj(const CycloNum& z) { return galois_apply(-1, z); }

bool in_subfield(const CycloNum& z, int d) {
  const int m = z.order();
  if (d < 1 || m % d != 0) throw DomainError("in_subfield: d must divide the field order");
  for (std::int64_t a = 1; a <= m; ++a) {
    if (std::gcd(a, static_cast<std::int64_t>(m)) != 1 || (a - 1) % d != 0) continue;
    if (!(galois_apply(a, z) == z)) return false;
  }
  return true;
}

CycloNum promote(const CycloNum& z, int order) {
  const int m = z.order();
  if (order < 1 || order % m != 0) throw DomainError("promote: source order must divide target order");
  if (order == m) return z;
  const std::int64_t scale = order / m;
  return CycloKernel::remap(z, order, [scale](std::int64_t k) { return k * scale; });
}

namespace {

// Linear data for re-expressing elements of Q(zeta_M) that lie in Q(zeta_d).
struct DemoteTable {
  std::vector<int> pivot_rows;               // phi(d) rows of the embedding matrix
  std::vector<std::vector<Rational>> inverse;  // inverse of the selected square block
};

DemoteTable build_demote(int big, int small) {
  const int phi_small = field(small).phi;
  const int phi_big = field(big).phi;
  // Columns: coefficients of zeta_d^j embedded in Q(zeta_M).
  std::vector<std::vector<Rational>> cols;
  for (int j = 0; j < phi_small; ++j) cols.push_back(promote(CycloNum::root(small, j), big).coeffs());
  // Row reduce the transposed matrix (phi_small x phi_big) to pick independent rows.
  std::vector<std::vector<Rational>> work = cols;  // work[j][i] = B[i][j]
  std::vector<int> pivots;
  int r = 0;
  for (int i = 0; i < phi_big && r < phi_small; ++i) {
    int sel = -1;
    for (int j = r; j < phi_small; ++j)
      if (work[j][i] != 0) {
        sel = j;
        break;
      }
    if (sel < 0) continue;
    std::swap(work[r], work[sel]);
    for (int j = 0; j < phi_small; ++j) {
      if (j == r || work[j][i] == 0) continue;
      Rational f = work[j][i] / work[r][i];
      for (int k = 0; k < phi_big; ++k) work[j][k] -= f * work[r][k];
    }
    pivots.push_back(i);
    ++r;
  }
  if (r != phi_small) throw InternalError("demote: embedding matrix is rank deficient");
  // Square block A[p][j] = B[pivot_p][j]; invert by Gauss-Jordan.
  const int n = phi_small;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int p = 0; p < n; ++p) {
    for (int j = 0; j < n; ++j) a[p][j] = cols[j][pivots[p]];
    a[p][n + p] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int p = c; p < n; ++p)
      if (a[p][c] != 0) {
        sel = p;
        break;
      }
    if (sel < 0) throw InternalError("demote: singular block");
    std::swap(a[c], a[sel]);
    Rational inv_piv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv_piv;
    for (int p = 0; p < n; ++p) {
      if (p == c || a[p][c] == 0) continue;
      Rational f = a[p][c];
      for (int k = 0; k < 2 * n; ++k) a[p][k] -= f * a[c][k];
    }
  }
  DemoteTable t;
  t.pivot_rows = pivots;
  t.inverse.assign(n, std::vector<Rational>(n));
  for (int p = 0; p < n; ++p)
    for (int j = 0; j < n; ++j) t.inverse[p][j] = a[p][n + j];
  return t;
}

const DemoteTable& demote_table(int big, int small) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<DemoteTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({big, small});
    if (it != cache.end()) return *it->second;
  }
  auto t = std::make_unique<DemoteTable>(build_demote(big, small));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(big, small), std::move(t));
  return *it->second;
}

}  // namespace

CycloNum demote(const CycloNum& z, int d) {
  const int m = z.order();
  if (d < 1 || m % d != 0) throw DomainError("demote: d must divide the field order");
  if (d == m) return z;
  const DemoteTable& t = demote_table(m, d);
  const auto zc = z.coeffs();
  const int n = static_cast<int>(t.pivot_rows.size());
  std::vector<Rational> out(n, Rational(0));
  for (int j = 0; j < n; ++j)
    for (int p = 0; p < n; ++p)
      if (t.inverse[j][p] != 0) out[j] += t.inverse[j][p] * zc[t.pivot_rows[p]];
  CycloNum result = CycloKernel::from_rationals(d, out);
  if (!(promote(result, m) == z)) throw DomainError("demote: element does not lie in the requested subfield");
  return result;
}

std::complex<double> numeric(const CycloNum& z) {
  const int m = z.order();
  std::complex<double> acc = 0.0;
  const auto cs = z.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
    acc += cs[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::optional<RootOfUnity> as_root_of_unity(const CycloNum& z) {
  if (z.is_zero()) return std::nullopt;
  const int m = z.order();
  // Roots of unity in Q(zeta_m) are the 2m-th roots for odd m, the m-th for even m.
  const int n = (m % 2 == 1) ? 2 * m : m;
  const auto w = numeric(z);
  const double mag = std::abs(w);
  if (std::abs(mag - 1.0) > 0.25) return std::nullopt;
  auto matches = [&](std::int64_t e) {
    CycloNum cand = (m == n) ? CycloNum::root(m, e)
                             : (e % 2 == 0 ? CycloNum::root(m, e / 2) : -CycloNum::root(m, (e + m) / 2));
    return cand == z;
  };
  double angle = std::arg(w) / (2.0 * std::numbers::pi) * n;
  const auto guess = static_cast<std::int64_t>(std::llround(angle));
  for (std::int64_t delta : {0, 1, -1}) {
    std::int64_t e = nt::mod(guess + delta, n);
    if (matches(e)) return RootOfUnity(n, e);
  }
  if (std::abs(mag - 1.0) < 1e-6) {
    for (std::int64_t e = 0; e < n; ++e)
      if (matches(e)) return RootOfUnity(n, e);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

RootOfUnity::RootOfUnity(int order, std::int64_t exponent) : order_(order) {
  if (order < 1) throw DomainError("root of unity order must be positive");
  exponent_ = nt::mod(exponent, order);
}

std::int64_t RootOfUnity::multiplicative_order() const {
  return order_ / std::gcd(static_cast<std::int64_t>(order_), exponent_);
}

RootOfUnity RootOfUnity::with_order(int order) const {
  const std::int64_t k = multiplicative_order();
  if (order % k != 0) throw DomainError("root of unity does not live in the requested order");
  const std::int64_t g = order_ / k;  // exponent_ is a multiple of g
  return RootOfUnity(order, exponent_ / g * (order / k));
}

CycloNum RootOfUnity::to_cyclo(int order) const {
  RootOfUnity r = with_order(order);
  return CycloNum::root(order, r.exponent_);
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(order_, -exponent_); }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  const std::int64_t kr = nt::mod(k, order_);
  return RootOfUnity(order_, static_cast<std::int64_t>(static_cast<__int128>(exponent_) * kr % order_));
}

Rational RootOfUnity::turns() const {
  Rational q(to_integer(exponent_), to_integer(static_cast<std::int64_t>(order_)));
  q.canonicalize();
  return q;
}

std::complex<double> RootOfUnity::numeric() const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent_) / order_;
  return {std::cos(angle), std::sin(angle)};
}

std::string RootOfUnity::to_string() const {
  Rational q = turns();
  if (q == 0) return "1";
  std::ostringstream os;
  os << "e(" << q.get_str() << ")";
  return os.str();
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  const std::int64_t m = nt::lcm(a.order_, b.order_);
  return RootOfUnity(static_cast<int>(m), a.exponent_ * (m / a.order_) + b.exponent_ * (m / b.order_));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  return static_cast<__int128>(a.exponent_) * b.order_ == static_cast<__int128>(b.exponent_) * a.order_;
}

}  // namespace modsym
