#include "modsym/drinfeld.hpp"

#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"

namespace modsym {

DoubledData drinfeld_double(const ModularData& data) {
  const int r = data.rank();
  const int m = data.ambient();
  const Matrix& s = data.s_tilde();
  const Matrix s_bar = galois_apply(-1, s);
  DoubledData dd;
  dd.base = data;
  Matrix big(m, r * r, r * r);
  std::vector<RootOfUnity> theta;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      dd.pairs.emplace_back(i, j);
      theta.push_back(data.theta()[i] * data.theta()[j].inverse());
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) big(dd.index(i, j), dd.index(k, l)) = s(i, k) * s_bar(j, l);
    }
  dd.data = ModularData::create(data.name() + "_double", big, std::move(theta));
  const CheckList report = validate(dd.data);
  if (!report.ok()) throw InternalError("double of " + data.name() + " fails validation: " + report.failures());
  return dd;
}

ModularRep canonical_rep(const DoubledData& dd) {
  if (!dd.data.derived().anomaly.is_one()) throw DomainError("canonical representation needs anomaly-free data");
  return rep_from_zeta(dd.data, RootOfUnity::one());
}

DoubleSymmetryReport verify_double_symmetry(const ModularData& data) {
  DoubleSymmetryReport report;
  const DoubledData dd = drinfeld_double(data);
  const DerivedInvariants& base_inv = data.derived();
  const DerivedInvariants& inv = dd.data.derived();
  const std::int64_t n = base_inv.fsexp;
  report.n = n;

  report.checks.add("anomaly_free", inv.anomaly.is_one() && inv.gauss_plus == base_inv.global_dim &&
                                        inv.gauss_minus == base_inv.global_dim);
  report.checks.add("fsexp_preserved", inv.fsexp == n);
  const ModularRep rep = canonical_rep(dd);
  report.checks.add("canonical_level", rep.level == n && rationality_check(rep));

  // s_{(i,j),(k,l)} = s_ik conj(s_jl) for every lifting (s, t) of the base.
  const auto liftings = all_liftings(data);
  bool normalization = true;
  for (const auto& lift : liftings) {
    const int order = lift.level;
    const Matrix canon = promote(rep.s_level, order);
    const Matrix& bs = lift.s_level;
    const Matrix bs_bar = galois_apply(-1, bs);
    const int r = data.rank();
    for (int i = 0; i < r && normalization; ++i)
      for (int j = 0; j < r && normalization; ++j)
        for (int k = 0; k < r && normalization; ++k)
          for (int l = 0; l < r && normalization; ++l)
            normalization = canon(dd.index(i, j), dd.index(k, l)) == bs(i, k) * bs_bar(j, l);
  }
  report.checks.add("normalization", normalization);

  const ModularRep& base_rep = liftings.front();
  bool signed_perm = true, t_sym = true, word = true, product = true;
  std::string detail;
  const Matrix t_hat = rep.t_matrix();
  for (std::int64_t a : nt::units(n)) {
    SignedPermutation g;
    try {
      g = gsigma(rep, a);
    } catch (const TheoremViolation& e) {
      signed_perm = false;
      detail = e.what();
      continue;
    }
    report.g.emplace_back(a, g);
    const std::int64_t a2 = n == 1 ? 0 : a * a % n;
    const Matrix gm = g.to_matrix(static_cast<int>(n));
    const Matrix gm_inv = g.inverse().to_matrix(static_cast<int>(n));
    t_sym = t_sym && galois_apply(a2, t_hat) == gm * t_hat * gm_inv;
    word = word && verify_symmetry(rep, a).checks.passed("word_formula");

    const std::int64_t lifted = nt::lift_unit(a, n, base_rep.level);
    const SignedPermutation gb = gsigma(base_rep, lifted);
    for (int label = 0; label < g.size(); ++label) {
      const auto [i, j] = dd.pairs[label];
      product = product && g.signs[label] == gb.signs[i] * gb.signs[j] &&
                g.perm[label] == dd.index(gb.perm[i], gb.perm[j]);
    }
  }
  report.checks.add("signed_permutation", signed_perm, detail);
  report.checks.add("t_hat_symmetry", t_sym);
  report.checks.add("word_formula", word);
  report.checks.add("product_structure", product);
  return report;
}

}  // namespace modsym
