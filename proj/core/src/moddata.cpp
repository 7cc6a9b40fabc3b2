#include "modsym/moddata.hpp"

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>
#include <optional>

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

struct ModularData::Impl {
  std::string name;
  int rank = 0;
  int ambient = 1;
  Matrix s_tilde;
  std::vector<RootOfUnity> theta;
  std::int64_t n = 1;

  mutable std::once_flag derived_once;
  mutable std::optional<DerivedInvariants> derived;
};

ModularData ModularData::create(std::string name, const Matrix& s_tilde, std::vector<RootOfUnity> theta) {
  const int r = s_tilde.rows();
  if (r < 1) throw InvalidInput("modular data must have rank at least 1");
  if (s_tilde.cols() != r) throw InvalidInput("s_tilde must be square");
  if (static_cast<int>(theta.size()) != r) throw InvalidInput("theta must have one entry per simple object");
  if (!theta[0].is_one()) throw InvalidInput("theta_0 must be 1");
  if (!s_tilde(0, 0).is_one()) throw InvalidInput("s_tilde_00 must be 1");

  std::int64_t n = 1;
  for (const auto& t : theta) n = nt::lcm(n, t.multiplicative_order());
  const std::int64_t m = nt::lcm(s_tilde.order(), 12 * n);
  if (m > 20000) throw InvalidInput("ambient cyclotomic order too large");

  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->rank = r;
  impl->ambient = static_cast<int>(m);
  impl->s_tilde = promote(s_tilde, impl->ambient);
  for (const auto& t : theta) impl->theta.push_back(t.with_order(impl->ambient));
  impl->n = n;
  ModularData out;
  out.impl_ = std::move(impl);
  return out;
}

const std::string& ModularData::name() const { return impl_->name; }
int ModularData::rank() const { return impl_->rank; }
int ModularData::ambient() const { return impl_->ambient; }
const Matrix& ModularData::s_tilde() const { return impl_->s_tilde; }
const std::vector<RootOfUnity>& ModularData::theta() const { return impl_->theta; }
std::int64_t ModularData::twist_exponent() const { return impl_->n; }

const DerivedInvariants& ModularData::derived() const {
  std::call_once(impl_->derived_once, [this] { impl_->derived = derive(*this); });
  return *impl_->derived;
}

ModularData ModularData::renamed(std::string name) const {
  return create(std::move(name), impl_->s_tilde, impl_->theta);
}

bool operator==(const ModularData& a, const ModularData& b) {
  return a.name() == b.name() && a.ambient() == b.ambient() && a.s_tilde() == b.s_tilde() &&
         a.theta() == b.theta();
}

namespace {

// Reads a 0/1 permutation matrix; returns the permutation or nullopt.
std::optional<std::vector<int>> as_permutation(const Matrix& c) {
  const int r = c.rows();
  std::vector<int> perm(r, -1);
  std::vector<bool> hit(r, false);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const CycloNum& v = c(i, j);
      if (v.is_zero()) continue;
      if (!v.is_one() || perm[i] != -1 || hit[j]) return std::nullopt;
      perm[i] = j;
      hit[j] = true;
    }
    if (perm[i] == -1) return std::nullopt;
  }
  return perm;
}

CycloNum sum_of_squares(const std::vector<CycloNum>& dims, int order) {
  CycloNum acc(order);
  for (const auto& d : dims) acc += d * d;
  return acc;
}

}  // namespace

DerivedInvariants derive(const ModularData& data) {
  const int r = data.rank();
  const int m = data.ambient();
  const Matrix& s = data.s_tilde();
  DerivedInvariants inv;
  for (int i = 0; i < r; ++i) inv.dims.push_back(s(0, i));
  inv.global_dim = sum_of_squares(inv.dims, m);
  if (inv.global_dim.is_zero()) throw NotModular("global dimension is zero (degenerate data)");

  inv.gauss_plus = CycloNum(m);
  inv.gauss_minus = CycloNum(m);
  for (int i = 0; i < r; ++i) {
    const CycloNum d2 = inv.dims[i] * inv.dims[i];
    const std::int64_t e = data.theta()[i].exponent();
    inv.gauss_plus += d2.times_root(e);
    inv.gauss_minus += d2.times_root(-e);
  }

  const Matrix c = (s * s).scaled(inv.global_dim.inv());
  auto perm = as_permutation(c);
  if (!perm) throw NotModular("s_tilde^2 / dim is not a permutation matrix");
  if ((*perm)[0] != 0) throw NotModular("charge conjugation does not fix the unit");
  inv.dual = *perm;
  inv.charge_conj = c;

  if (inv.gauss_minus.is_zero()) throw NotModular("Gauss sum p- vanishes");
  auto alpha = as_root_of_unity(inv.gauss_plus / inv.gauss_minus);
  if (!alpha) throw NotModular("p+/p- is not a root of unity");
  inv.anomaly = alpha->with_order(m);
  inv.fsexp = data.twist_exponent();
  return inv;
}

FusionTensor verlinde(const ModularData& data) {
  const DerivedInvariants& inv = data.derived();
  const int r = data.rank();
  const Matrix& s = data.s_tilde();
  std::vector<CycloNum> inv_unit_row;
  for (int x = 0; x < r; ++x) {
    if (s(0, x).is_zero()) throw VerlindeFailure("s_tilde_0" + std::to_string(x) + " vanishes");
    inv_unit_row.push_back(s(0, x).inv());
  }
  const CycloNum inv_dim = inv.global_dim.inv();
  // w_{ij,x} = s_ix s_jx / (dim s_0x), reused across k.
  FusionTensor f;
  f.rank = r;
  f.entries.assign(static_cast<std::size_t>(r) * r * r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      std::vector<CycloNum> w;
      w.reserve(r);
      for (int x = 0; x < r; ++x) w.push_back(s(i, x) * s(j, x) * inv_unit_row[x]);
      for (int k = 0; k < r; ++k) {
        const int ks = inv.dual[k];
        CycloNum acc(data.ambient());
        for (int x = 0; x < r; ++x) acc += w[x] * s(ks, x);
        acc = acc * inv_dim;
        auto q = acc.as_rational();
        if (!q || q->get_den() != 1 || *q < 0)
          throw VerlindeFailure("N_{" + std::to_string(i) + "," + std::to_string(j) + "}^" + std::to_string(k) +
                                " = " + acc.to_string() + " is not a non-negative integer");
        if (!q->get_num().fits_slong_p()) throw VerlindeFailure("fusion multiplicity too large");
        f.entries[(static_cast<std::size_t>(i) * r + j) * r + k] = q->get_num().get_si();
      }
    }
  }
  return f;
}

CheckList validate(const ModularData& data) {
  CheckList report;
  const int r = data.rank();
  const int m = data.ambient();
  const Matrix& s = data.s_tilde();
  const auto& theta = data.theta();

  bool symmetric = true;
  for (int i = 0; i < r && symmetric; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!(s(i, j) == s(j, i))) {
        symmetric = false;
        report.add("symmetric", false, "s_tilde[" + std::to_string(i) + "][" + std::to_string(j) + "] != s_tilde[" +
                                           std::to_string(j) + "][" + std::to_string(i) + "]");
        break;
      }
  if (symmetric) report.add("symmetric", true);

  std::vector<CycloNum> dims;
  for (int i = 0; i < r; ++i) dims.push_back(s(0, i));
  const CycloNum dim = sum_of_squares(dims, m);
  const Matrix s2 = s * s;

  std::optional<std::vector<int>> dual;
  if (dim.is_zero()) {
    report.add("s_squared", false, "global dimension is zero");
  } else {
    dual = as_permutation(s2.scaled(dim.inv()));
    if (dual && (*dual)[0] != 0) dual.reset();
    report.add("s_squared", dual.has_value(), dual ? "" : "s_tilde^2 is not dim times a permutation fixing 0");
  }

  if (dual) {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = 0; j < r && ok; ++j) ok = s(i, (*dual)[j]) == s((*dual)[i], j);
    report.add("dual_symmetric", ok, ok ? "" : "s_tilde_{ij*} != s_tilde_{i*j}");
  } else {
    report.add("dual_symmetric", false, "no charge conjugation");
  }

  {
    CycloNum p_plus(m);
    for (int i = 0; i < r; ++i) p_plus += (dims[i] * dims[i]).times_root(theta[i].exponent());
    const Matrix st = times_diag(s, theta);
    const bool ok = st * st * st == s2.scaled(p_plus);
    report.add("st_cubed", ok, ok ? "" : "(s_tilde t_tilde)^3 != p+ s_tilde^2");
  }

  if (dual) {
    bool ok = true;
    for (int i = 0; i < r; ++i) {
      if (!(theta[i] == theta[(*dual)[i]])) ok = false;
      if ((*dual)[(*dual)[i]] != i) ok = false;
    }
    report.add("charge_conjugation", ok, ok ? "" : "C does not commute with t_tilde or C^2 != id");
  } else {
    report.add("charge_conjugation", false, "no charge conjugation");
  }

  {
    const Matrix prod = s * galois_apply(-1, s).transpose();
    bool ok = !dim.is_zero();
    for (int i = 0; i < r && ok; ++i)
      for (int k = 0; k < r && ok; ++k) ok = i == k ? prod(i, k) == dim : prod(i, k).is_zero();
    report.add("unitarity", ok, ok ? "" : "s_tilde conj(s_tilde)^T != dim * id");
  }

  {
    bool ok = dual.has_value();
    for (int i = 0; i < r && ok; ++i) ok = dims[i] == dims[(*dual)[i]] && conj(dims[i]) == dims[i];
    report.add("dims", ok, ok ? "" : "d_i != d_{i*} or d_i not fixed by conjugation");
  }

  if (report.ok()) {
    try {
      verlinde(data);
      report.add("verlinde", true);
    } catch (const Error& e) {
      report.add("verlinde", false, e.what());
    }
  } else {
    report.add("verlinde", false, "skipped: earlier axioms failed");
  }
  return report;
}

Rational central_charge(const ModularData& data) {
  const DerivedInvariants& inv = data.derived();
  const std::complex<double> dim = numeric(inv.global_dim);
  if (!(dim.real() > 0) || std::abs(dim.imag()) > 1e-9 * std::max(1.0, dim.real()))
    throw DomainError("central charge undefined: dim is not positive under the standard embedding");
  // alpha = exp(2 pi i e / M) = exp(pi i c / 2) gives c = 4 e / M mod 4.
  Rational c0(4 * inv.anomaly.exponent(), inv.anomaly.order());
  c0.canonicalize();
  while (c0 >= 4) c0 -= 4;
  const std::complex<double> target = numeric(inv.gauss_plus) / std::sqrt(dim.real());
  for (Rational c : {c0, Rational(c0 + 4)}) {
    const double angle = std::numbers::pi * c.get_d() / 4.0;
    if (std::abs(target - std::polar(1.0, angle)) < 1e-9) return c;
  }
  throw InternalError("central charge: p+/sqrt(dim) matches neither branch");
}

}  // namespace modsym
