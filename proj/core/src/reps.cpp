#include "modsym/reps.hpp"

#include <algorithm>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

namespace {

std::int64_t order_of_diagonal(const std::vector<RootOfUnity>& t) {
  std::int64_t n = 1;
  for (const auto& r : t) n = nt::lcm(n, r.multiplicative_order());
  return n;
}

Matrix signed_charge_conj(const ModularData& data, int order, int sign) {
  const auto& dual = data.derived().dual;
  Matrix c(order, data.rank(), data.rank());
  for (int i = 0; i < data.rank(); ++i) c(i, dual[i]) = CycloNum::integer(order, sign);
  return c;
}

ModularRep make_rep(const ModularData& base, Matrix s, std::vector<RootOfUnity> t, RootOfUnity zeta,
                    RootOfUnity x, int sgn) {
  ModularRep rep;
  rep.base = base;
  rep.s = std::move(s);
  rep.t = std::move(t);
  rep.zeta = zeta;
  rep.x = x;
  rep.sgn_s = sgn;
  rep.level = static_cast<int>(level(rep));
  try {
    rep.s_level = demote(rep.s, rep.level);
  } catch (const DomainError&) {
    throw TheoremViolation("lifting of level " + std::to_string(rep.level) + " is not rational over Q(zeta_" +
                           std::to_string(rep.level) + ")");
  }
  const Matrix& sl = rep.s_level;
  const Matrix s2 = sl * sl;
  if (!(s2 == signed_charge_conj(base, rep.level, sgn)))
    throw TheoremViolation("lifting violates s^2 = sgn(s) C");
  if (!(s2 * s2).is_identity()) throw TheoremViolation("lifting violates s^4 = id");
  const Matrix st = times_diag(sl, rep.t);
  if (!(st * st * st == s2)) throw TheoremViolation("lifting violates (st)^3 = s^2");
  return rep;
}

}  // namespace

Matrix ModularRep::s_inverse() const { return charge_conj() * s_level.scaled(CycloNum::integer(level, sgn_s)); }

Matrix ModularRep::t_matrix() const { return Matrix::diagonal(level, t); }

Matrix ModularRep::charge_conj() const { return signed_charge_conj(base, level, 1); }

std::vector<RootOfUnity> sixth_roots_of_anomaly(const ModularData& data) {
  const int m = data.ambient();
  const RootOfUnity alpha = data.derived().anomaly.with_order(m);
  std::vector<RootOfUnity> out;
  // zeta = zeta_M^k with 6k = e_alpha (mod M); 6 | M, so solvable iff 6 | e_alpha.
  if (m % 6 != 0 || alpha.exponent() % 6 != 0) return out;
  const std::int64_t base = alpha.exponent() / 6;
  for (int j = 0; j < 6; ++j) out.emplace_back(m, base + j * (m / 6));
  std::sort(out.begin(), out.end(), [](const RootOfUnity& a, const RootOfUnity& b) { return a.exponent() < b.exponent(); });
  return out;
}

ModularRep rep_from_zeta(const ModularData& data, const RootOfUnity& zeta) {
  const DerivedInvariants& inv = data.derived();
  const int m = data.ambient();
  if (!(zeta.pow(6) == inv.anomaly)) throw DomainError("zeta is not a sixth root of the anomaly");
  const RootOfUnity z = zeta.with_order(m);
  const CycloNum lambda = inv.gauss_plus.inv().times_root(3 * z.exponent());
  std::vector<RootOfUnity> t;
  for (const auto& th : data.theta()) t.push_back(th * z.inverse());
  for (auto& r : t) r = r.with_order(m);
  return make_rep(data, data.s_tilde().scaled(lambda), std::move(t), z, RootOfUnity::one(), 1);
}

ModularRep twist(const ModularRep& rep, const RootOfUnity& x) {
  if (12 % x.multiplicative_order() != 0) throw DomainError("twist: x must be a 12th root of unity");
  const int m = rep.ambient();
  const RootOfUnity x12 = x.with_order(12);
  const RootOfUnity xm = x.with_order(m);
  std::vector<RootOfUnity> t;
  for (const auto& r : rep.t) t.push_back((r * xm).with_order(m));
  const int sgn = rep.sgn_s * (x12.exponent() % 2 == 0 ? 1 : -1);
  return make_rep(rep.base, rep.s.times_root(-3 * xm.exponent()), std::move(t), rep.zeta,
                  (rep.x * x12).with_order(12), sgn);
}

std::vector<ModularRep> all_liftings(const ModularData& data) {
  const auto roots = sixth_roots_of_anomaly(data);
  if (roots.empty()) throw InternalError("anomaly has no sixth root in the ambient field");
  const ModularRep base = rep_from_zeta(data, roots.front());
  std::vector<ModularRep> out;
  for (int k = 0; k < 12; ++k) out.push_back(k == 0 ? base : twist(base, RootOfUnity(12, k)));
  return out;
}

std::int64_t level(const ModularRep& rep) {
  const std::int64_t n = order_of_diagonal(rep.t);
  const std::int64_t big_n = rep.base.twist_exponent();
  if (n % big_n != 0 || (12 * big_n) % n != 0)
    throw TheoremViolation("level " + std::to_string(n) + " violates N | n | 12N with N = " + std::to_string(big_n));
  return n;
}

bool rationality_check(const ModularRep& rep) {
  const int n = rep.level;
  for (int i = 0; i < rep.s.rows(); ++i)
    for (int j = 0; j < rep.s.cols(); ++j)
      if (!in_subfield(rep.s(i, j), n)) return false;
  for (const auto& r : rep.t)
    if (!in_subfield(r.to_cyclo(rep.ambient()), n)) return false;
  return true;
}

KappaResult kappa_trivial(const ModularData& data) {
  const auto roots = sixth_roots_of_anomaly(data);
  if (roots.empty()) throw InternalError("anomaly has no sixth root in the ambient field");
  return kappa_trivial(data, roots.front());
}

KappaResult kappa_trivial(const ModularData& data, const RootOfUnity& zeta) {
  const DerivedInvariants& inv = data.derived();
  const std::int64_t n = inv.fsexp;
  const int m = data.ambient();
  KappaResult out;
  out.zeta = zeta;
  for (int k = 0; k < 12; ++k) {
    const RootOfUnity x(12, k);
    if ((x * zeta.inverse()).pow(n).is_one()) out.witnesses.push_back(x);
  }
  out.trivial = !out.witnesses.empty();
  if (out.trivial) {
    out.witness = out.witnesses.front();
    for (const auto& x : out.witnesses) {
      const RootOfUnity scalar = (x * zeta.inverse()).pow(3).with_order(m);
      const CycloNum w = inv.gauss_plus.times_root(scalar.exponent());
      if (!in_subfield(w, static_cast<int>(n)))
        throw TheoremViolation("x^3 p+ / zeta^3 is not in Q(zeta_N) for witness " + x.to_string());
    }
  }
  if (n % 4 != 0 && !out.trivial) throw TheoremViolation("kappa is nontrivial although 4 does not divide N");
  return out;
}

Matrix evaluate(const ModularRep& rep, const Word& word) {
  const int n = rep.level;
  Matrix acc = Matrix::identity(n, rep.s_level.rows());
  Matrix s_inv;
  for (const auto& tok : word.tokens) {
    if (tok.gen == WordToken::Gen::T) {
      Integer k = tok.power % n;
      acc = times_diag(acc, diag_pow(rep.t, k.get_si()));
    } else if (tok.power == 1) {
      acc = acc * rep.s_level;
    } else {
      if (s_inv.rows() == 0) s_inv = rep.s_inverse();
      acc = acc * s_inv;
    }
  }
  if (word.negate) acc = acc * (rep.s_level * rep.s_level);
  return acc;
}

Matrix evaluate(const ModularRep& rep, const SL2Mat& gamma) { return evaluate(rep, decompose(gamma)); }

}  // namespace modsym
