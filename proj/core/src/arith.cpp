#include "modsym/arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

int jacobi(std::int64_t a, std::int64_t m) {
  if (m < 1 || m % 2 == 0) throw DomainError("jacobi: modulus must be odd and positive");
  a = nt::mod(a, m);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

int j_parity(const DerivedInvariants& inv) { return inv.anomaly.multiplicative_order() % 2 == 1 ? 1 : -1; }

CycloNum sqrt_witness(const ModularData& data) {
  const DerivedInvariants& inv = data.derived();
  const std::int64_t n = inv.fsexp;
  if (n % 4 == 0) throw DomainError("sqrt_witness: requires 4 not dividing N");
  const KappaResult kappa = kappa_trivial(data);
  if (!kappa.witness) throw TheoremViolation("no kappa witness although 4 does not divide N");
  const int m = data.ambient();
  const RootOfUnity scalar = (*kappa.witness * kappa.zeta.inverse()).pow(3).with_order(m);
  const CycloNum w = inv.gauss_plus.times_root(scalar.exponent());
  const CycloNum target = inv.global_dim.scaled(Rational(j_parity(inv)));
  if (!(w * w == target)) throw TheoremViolation("witness square differs from J dim");
  CycloNum reduced;
  try {
    reduced = demote(w, static_cast<int>(n));
  } catch (const DomainError&) {
    throw TheoremViolation("witness is not in Q(zeta_N)");
  }
  const int l = static_cast<int>(nt::lcm(4, n));
  if (in_subfield(CycloNum::root(l, l / 4), static_cast<int>(n)))
    throw TheoremViolation("zeta_4 lies in Q(zeta_N) although 4 does not divide N");
  return reduced;
}

std::string to_string(IntegralityKind kind) {
  switch (kind) {
    case IntegralityKind::Integral: return "integral";
    case IntegralityKind::WeaklyIntegralOnly: return "weakly_integral_only";
    case IntegralityKind::MockIntegralOnly: return "mock_integral_only";
    case IntegralityKind::Generic: return "generic";
  }
  return "generic";
}

IntegralityClass integrality(const DerivedInvariants& inv) {
  IntegralityClass c;
  c.dims_integral = std::all_of(inv.dims.begin(), inv.dims.end(), [](const CycloNum& d) { return d.is_integer(); });
  c.dims_squared_integral =
      std::all_of(inv.dims.begin(), inv.dims.end(), [](const CycloNum& d) { return (d * d).is_integer(); });
  c.dim_integral = inv.global_dim.is_integer();
  if (c.dims_integral) c.kind = IntegralityKind::Integral;
  else if (c.dims_squared_integral) c.kind = IntegralityKind::WeaklyIntegralOnly;
  else if (c.dim_integral) c.kind = IntegralityKind::MockIntegralOnly;
  else c.kind = IntegralityKind::Generic;
  return c;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

AnomalyReport anomaly_checks(const ModularData& data) {
  const DerivedInvariants& inv = data.derived();
  AnomalyReport report;
  report.ord_alpha = inv.anomaly.multiplicative_order();
  report.j = j_parity(inv);
  report.integrality = integrality(inv);
  report.fsexp = inv.fsexp;
  const IntegralityClass& cls = report.integrality;
  if (cls.dim_integral) report.dim = inv.global_dim.as_rational()->get_num();

  const std::string na = "not applicable";
  if (cls.integral())
    report.checks.add("integral_alpha4", inv.anomaly.pow(4).is_one());
  else
    report.checks.add("integral_alpha4", true, na);
  if (cls.weakly_integral())
    report.checks.add("weakly_integral_alpha8", inv.anomaly.pow(8).is_one());
  else
    report.checks.add("weakly_integral_alpha8", true, na);

  const bool odd_dim = report.dim && mpz_odd_p(report.dim->get_mpz_t()) && report.dim->fits_slong_p();
  if (cls.mock_integral() && odd_dim) {
    const std::int64_t d = report.dim->get_si();
    const std::int64_t abs_d = d < 0 ? -d : d;
    const int symbol = jacobi(-1, abs_d);
    report.checks.add("odd_dim_j_parity", report.j == symbol,
                      "J = " + std::to_string(report.j) + ", (-1/dim) = " + std::to_string(symbol));
    const std::int64_t sf = nt::squarefree_part(d);
    report.checks.add("odd_dim_squarefree_divides_n", report.fsexp % sf == 0,
                      "squarefree(dim) = " + std::to_string(sf) + ", N = " + std::to_string(report.fsexp));
  } else {
    report.checks.add("odd_dim_j_parity", true, na);
    report.checks.add("odd_dim_squarefree_divides_n", true, na);
  }
  if (cls.integral() && odd_dim) {
    const std::int64_t d = report.dim->get_si();
    const int symbol = jacobi(-1, d < 0 ? -d : d);
    const RootOfUnity expected(2, symbol == 1 ? 0 : 1);
    report.checks.add("odd_dim_integral_alpha", inv.anomaly == expected,
                      "alpha = " + inv.anomaly.to_string() + ", (-1/dim) = " + std::to_string(symbol));
  } else {
    report.checks.add("odd_dim_integral_alpha", true, na);
  }

  if (cls.mock_integral() && report.dim && report.dim->fits_slong_p()) {
    const auto pn = nt::prime_factors(report.fsexp);
    const auto pd = nt::prime_factors(report.dim->get_si());
    report.prime_support = "primes(N) = " + join(pn) + ", primes(dim) = " + join(pd) +
                           (pn == pd ? " (equal)" : " (different)") + " [informational]";
  } else {
    report.prime_support = "not mock integral [informational]";
  }
  return report;
}

SubfieldReport subfield_report(const ModularRep& rep) {
  SubfieldReport report;
  const std::int64_t n = rep.level;
  report.n = n;
  const Matrix& s = rep.s_level;
  const int r = s.rows();
  const auto units = nt::units(n);

  std::vector<bool> in_h(units.size(), true);
  bool fixes_t = true;
  for (int b = 0; b < r; ++b) {
    if (s(0, b).is_zero()) throw NotModular("s_0b vanishes");
    const CycloNum inv0 = s(0, b).inv();
    std::vector<CycloNum> ratios;
    for (int i = 0; i < r; ++i) ratios.push_back(s(i, b) * inv0);
    std::vector<std::int64_t> hb;
    for (std::size_t u = 0; u < units.size(); ++u) {
      const std::int64_t a = units[u];
      bool fixed = true;
      for (const auto& q : ratios) fixed = fixed && galois_apply(a, q) == q;
      if (fixed) {
        hb.push_back(a);
        fixes_t = fixes_t && rep.t[b].pow(a * a) == rep.t[b];
      } else {
        in_h[u] = false;
      }
    }
    report.h_b.push_back(std::move(hb));
  }
  for (std::size_t u = 0; u < units.size(); ++u)
    if (in_h[u]) report.h.push_back(units[u]);
  report.checks.add("hb_fixes_t", fixes_t);

  bool exponent_two = true;
  for (std::int64_t a : report.h) exponent_two = exponent_two && (a * a) % n == 1 % n;
  report.checks.add("h_exponent_two", exponent_two);

  for (std::int64_t k : nt::divisors(n)) {
    bool contained = true;
    for (std::size_t u = 0; u < units.size() && contained; ++u)
      if ((units[u] - 1) % k == 0 || n == 1) contained = in_h[u];
    if (contained) {
      report.conductor = k;
      break;
    }
  }
  const std::int64_t k = report.conductor;
  report.checks.add("quotient_divides_24", 24 % (n / k) == 0,
                    "n/k = " + std::to_string(n / k) + ", k = " + std::to_string(k));
  report.checks.add("gcd_divides_2", 2 % std::gcd(n / k, k) == 0);
  report.checks.add("totient_ratio_divides_8", 8 % (nt::totient(n) / nt::totient(k)) == 0);
  return report;
}

bool unit_exponent_two(std::int64_t m) {
  if (m < 1) throw DomainError("unit_exponent_two: m must be positive");
  bool exponent_two = true;
  for (std::int64_t a : nt::units(m)) exponent_two = exponent_two && (a * a) % m == 1 % m;
  const bool divides = 24 % m == 0;
  if (exponent_two != divides)
    throw InternalError("unit exponent criterion fails for m = " + std::to_string(m));
  return divides;
}

QuotientReport quotient_report(std::int64_t k, std::int64_t n) {
  if (k < 1 || n < 1 || n % k != 0) throw DomainError("quotient_report: k must divide n");
  QuotientReport rep;
  rep.k = k;
  rep.n = n;
  rep.hypothesis = true;
  for (std::int64_t a : nt::units(n))
    if ((a - 1) % k == 0 && (a * a) % n != 1 % n) {
      rep.hypothesis = false;
      break;
    }
  const std::int64_t q = n / k;
  rep.quotient_divides_24 = 24 % q == 0;
  rep.gcd_divides_2 = 2 % std::gcd(q, k) == 0;
  rep.totient_ratio_divides_8 = 8 % (nt::totient(n) / nt::totient(k)) == 0;
  if (rep.hypothesis && !(rep.quotient_divides_24 && rep.gcd_divides_2 && rep.totient_ratio_divides_8))
    throw InternalError("quotient bound fails for k = " + std::to_string(k) + ", n = " + std::to_string(n));
  return rep;
}

}  // namespace modsym
