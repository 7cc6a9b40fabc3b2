#include "modsym/galois.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), 0);
  p.signs.assign(n, 1);
  return p;
}

Matrix SignedPermutation::to_matrix(int order) const {
  Matrix m(order, size(), size());
  for (int i = 0; i < size(); ++i) m(i, perm[i]) = CycloNum::integer(order, signs[i]);
  return m;
}

SignedPermutation SignedPermutation::inverse() const {
  // Orthogonal, so the inverse is the transpose.
  SignedPermutation out;
  out.perm.resize(size());
  out.signs.resize(size());
  for (int i = 0; i < size(); ++i) {
    out.perm[perm[i]] = i;
    out.signs[perm[i]] = signs[i];
  }
  return out;
}

std::string SignedPermutation::cycles() const {
  std::vector<bool> seen(size(), false);
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j;
      first = false;
      j = perm[j];
    }
    os << ")";
  }
  return os.str();
}

SignedPermutation operator*(const SignedPermutation& x, const SignedPermutation& y) {
  // (XY)_{ij} = x.signs[i] y.signs[x.perm[i]] at j = y.perm[x.perm[i]].
  SignedPermutation out;
  out.perm.resize(x.size());
  out.signs.resize(x.size());
  for (int i = 0; i < x.size(); ++i) {
    out.perm[i] = y.perm[x.perm[i]];
    out.signs[i] = x.signs[i] * y.signs[x.perm[i]];
  }
  return out;
}

std::vector<int> sigma_hat(const ModularData& data, std::int64_t a) {
  const std::int64_t n = data.twist_exponent();
  if (std::gcd(nt::mod(a, n), n) != 1 && n != 1) throw DomainError("sigma_hat: a must be a unit mod N");
  const int m = data.ambient();
  const std::int64_t lifted = nt::lift_unit(nt::mod(a, n), n, m);
  const int r = data.rank();
  const Matrix& s = data.s_tilde();
  const Matrix gs = galois_apply(lifted, s);
  // sigma(s_ij / s_0j) = s_ik / s_0k  <=>  sigma(s_ij) s_0k = s_ik sigma(s_0j).
  std::vector<int> out(r, -1);
  std::vector<bool> used(r, false);
  for (int j = 0; j < r; ++j) {
    int found = -1;
    for (int k = 0; k < r; ++k) {
      bool match = true;
      for (int i = 0; i < r && match; ++i) match = gs(i, j) * s(0, k) == s(i, k) * gs(0, j);
      if (!match) continue;
      if (found != -1) throw NotModular("sigma_hat: column match is ambiguous");
      found = k;
    }
    if (found == -1 || used[found]) throw NotModular("sigma_hat: no matching column for a = " + std::to_string(a));
    used[found] = true;
    out[j] = found;
  }
  return out;
}

namespace {

std::int64_t unit_residue(const ModularRep& rep, std::int64_t a) {
  const std::int64_t n = rep.level;
  const std::int64_t ar = nt::mod(a, n);
  if (n != 1 && std::gcd(ar, n) != 1) throw DomainError("residue is not a unit modulo the level");
  return ar;
}

}  // namespace

SignedPermutation gsigma(const ModularRep& rep, std::int64_t a) {
  const std::int64_t ar = unit_residue(rep, a);
  const int r = rep.s_level.rows();
  const Matrix g = galois_apply(ar, rep.s_level) * rep.s_inverse();
  SignedPermutation out;
  out.perm.assign(r, -1);
  out.signs.assign(r, 0);
  std::vector<bool> used(r, false);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const CycloNum& v = g(i, j);
      if (v.is_zero()) continue;
      int sign = 0;
      if (v.is_one()) sign = 1;
      else if ((-v).is_one()) sign = -1;
      if (sign == 0 || out.perm[i] != -1 || used[j])
        throw TheoremViolation("sigma_a(s) s^-1 is not a signed permutation for a = " + std::to_string(a));
      out.perm[i] = j;
      out.signs[i] = sign;
      used[j] = true;
    }
    if (out.perm[i] == -1) throw TheoremViolation("sigma_a(s) s^-1 is singular for a = " + std::to_string(a));
  }
  if (sigma_hat(rep.base, ar) != out.perm)
    throw InternalError("permutation of G_sigma disagrees with sigma_hat for a = " + std::to_string(a));
  return out;
}

GaloisReport verify_symmetry(const ModularRep& rep, std::int64_t a) {
  const int n = rep.level;
  GaloisReport report;
  report.a = unit_residue(rep, a);
  report.b = n == 1 ? 0 : nt::inverse_mod(report.a, n);
  report.g = gsigma(rep, report.a);
  const std::int64_t ar = report.a;
  const std::int64_t a2 = ar * ar % n;
  const Matrix& s = rep.s_level;
  const Matrix g = report.g.to_matrix(n);
  const Matrix g_inv = report.g.inverse().to_matrix(n);
  const Matrix t = rep.t_matrix();

  bool galois_t = true;
  for (const auto& ti : rep.t)
    galois_t = galois_t && galois_apply(ar, ti.to_cyclo(n)) == ti.pow(ar).to_cyclo(n);
  report.checks.add("galois_t", galois_t);

  const Matrix sigma_s = galois_apply(ar, s);
  report.checks.add("galois_action", sigma_s == g * s && sigma_s == s * g_inv);

  const bool conj_s = galois_apply(a2, s) == g * s * g_inv;
  const bool conj_t = galois_apply(a2, t) == g * t * g_inv;
  report.checks.add("conjugation", conj_s && conj_t);

  bool tperm = true;
  for (int i = 0; i < s.rows(); ++i)
    tperm = tperm && galois_apply(a2, rep.t[i].to_cyclo(n)) == rep.t[report.g.perm[i]].to_cyclo(n);
  report.checks.add("t_permutation", tperm);

  const auto ta = diag_pow(rep.t, ar);
  const auto tb = diag_pow(rep.t, report.b);
  const Matrix word = times_diag(times_diag(times_diag(Matrix::identity(n, s.rows()), ta) * s, tb) * s, ta);
  report.checks.add("word_formula", g == word * rep.s_inverse());
  report.checks.add("word_square", word * word == s * s);
  return report;
}

bool homomorphism_check(const ModularRep& rep) {
  const std::int64_t n = rep.level;
  std::map<std::int64_t, SignedPermutation> g;
  for (std::int64_t a : nt::units(n)) g.emplace(a, gsigma(rep, a));
  for (const auto& [a, ga] : g)
    for (const auto& [b, gb] : g)
      if (!(g.at(n == 1 ? 0 : a * b % n) == ga * gb)) return false;
  return true;
}

TTildeReport ttilde_symmetry(const ModularData& data) {
  const DerivedInvariants& inv = data.derived();
  const std::int64_t n = inv.fsexp;
  const auto roots = sixth_roots_of_anomaly(data);
  if (roots.empty()) throw InternalError("anomaly has no sixth root in the ambient field");
  TTildeReport report;
  report.zeta = roots.front();
  const auto& theta = data.theta();
  const int r = data.rank();
  std::map<std::int64_t, std::vector<int>> perms;
  bool unit_trivial = true;
  bool symmetric = true;
  for (std::int64_t a : nt::units(12 * n)) {
    const std::int64_t key = nt::mod(a, n);
    auto it = perms.find(key);
    if (it == perms.end()) it = perms.emplace(key, sigma_hat(data, key)).first;
    const auto& p = it->second;
    const std::int64_t a2 = a * a;
    const RootOfUnity unit_twist = theta[p[0]];
    const RootOfUnity zeta_ratio = report.zeta.pow(1 - a2);
    if (!(unit_twist == zeta_ratio))
      throw TheoremViolation("theta_{p(0)} != zeta / sigma^2(zeta) for a = " + std::to_string(a));
    for (int i = 0; i < r; ++i) {
      const RootOfUnity shifted = theta[p[i]] * theta[i].pow(a2).inverse();
      if (!(shifted == unit_twist))
        throw TheoremViolation("theta_{p(i)} / sigma^2(theta_i) is not constant for a = " + std::to_string(a));
      symmetric = symmetric && theta[p[i]] == theta[i].pow(a2);
    }
    unit_trivial = unit_trivial && unit_twist.is_one();
    report.theta_sigma0.emplace_back(a, unit_twist);
  }
  report.unit_twist_trivial = unit_trivial;
  report.ttilde_symmetric = symmetric;
  report.alpha_order_divides_4 = inv.anomaly.pow(4).is_one();
  if (report.unit_twist_trivial != report.ttilde_symmetric || report.ttilde_symmetric != report.alpha_order_divides_4)
    throw TheoremViolation("twist symmetry conditions disagree");
  return report;
}

}  // namespace modsym
