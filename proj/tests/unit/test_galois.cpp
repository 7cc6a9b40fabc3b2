#include <gtest/gtest.h>

#include <complex>

#include "generators.hpp"
#include "modsym/catalog.hpp"
#include "modsym/drinfeld.hpp"
#include "modsym/errors.hpp"
#include "modsym/galois.hpp"
#include "modsym/numtheory.hpp"

using namespace modsym;
using modsym::testing::all_builtins;

namespace {

// Oracle: match columns of sigma_a(s~_ij / s~_0j) numerically.
std::vector<int> numeric_sigma_hat(const ModularData& d, std::int64_t a) {
  const std::int64_t lifted = nt::lift_unit(a, d.derived().fsexp, d.ambient());
  const int r = d.rank();
  std::vector<int> out(r, -1);
  for (int j = 0; j < r; ++j) {
    std::vector<std::complex<double>> col;
    for (int i = 0; i < r; ++i)
      col.push_back(numeric(galois_apply(lifted, d.s_tilde()(i, j) / d.s_tilde()(0, j))));
    for (int k = 0; k < r; ++k) {
      double err = 0;
      for (int i = 0; i < r; ++i) err += std::abs(col[i] - numeric(d.s_tilde()(i, k) / d.s_tilde()(0, k)));
      if (err < 1e-8) out[j] = k;
    }
  }
  return out;
}

const ModularRep& fib60() {
  static const ModularRep r = rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7));
  return r;
}

}  // namespace

TEST(SignedPermutation, Algebra) {
  const SignedPermutation x{{1, 0, 2}, {1, -1, -1}};
  const SignedPermutation y{{2, 1, 0}, {-1, 1, 1}};
  const int m = 4;
  EXPECT_EQ((x * y).to_matrix(m), x.to_matrix(m) * y.to_matrix(m));
  EXPECT_EQ(x * x.inverse(), SignedPermutation::identity(3));
  EXPECT_EQ(x.cycles(), "(0 1)(2)");
  EXPECT_EQ(SignedPermutation::identity(2).to_matrix(m), Matrix::identity(m, 2));
}

TEST(SigmaHat, Examples) {
  const ModularData fib = builtin("fibonacci");
  EXPECT_EQ(sigma_hat(fib, 1), (std::vector<int>{0, 1}));
  EXPECT_EQ(sigma_hat(fib, 7), (std::vector<int>{1, 0}));
  EXPECT_EQ(sigma_hat(fib, 49), (std::vector<int>{0, 1}));
}

TEST(SigmaHat, MatchesNumericOracle) {
  for (const auto& d : all_builtins())
    for (std::int64_t a : nt::units(d.derived().fsexp)) EXPECT_EQ(sigma_hat(d, a), numeric_sigma_hat(d, a)) << d.name();
}

TEST(GSigma, Examples) {
  EXPECT_EQ(gsigma(fib60(), 1), SignedPermutation::identity(2));
  const SignedPermutation g7 = gsigma(fib60(), 7);
  EXPECT_EQ(g7.perm, (std::vector<int>{1, 0}));
  const Matrix gm = g7.to_matrix(60);
  EXPECT_EQ(gm * fib60().s_level, galois_apply(7, fib60().s_level));
  const SignedPermutation g49 = gsigma(fib60(), 49);
  EXPECT_EQ(g49.perm, (std::vector<int>{0, 1}));
  EXPECT_EQ(g49, g7 * g7);
}

TEST(VerifySymmetry, FibonacciSeven) {
  const GaloisReport r = verify_symmetry(fib60(), 7);
  EXPECT_TRUE(r.ok()) << r.checks.failures();
  EXPECT_EQ(r.b, 43);
  // sigma_49(t) is t with its diagonal swapped.
  const auto t49 = diag_pow(fib60().t, 49);
  EXPECT_EQ(t49[0], fib60().t[1]);
  EXPECT_EQ(t49[1], fib60().t[0]);
  // The same fails for the normalized twists.
  const ModularData fib = builtin("fibonacci");
  const auto& theta = fib.theta();
  EXPECT_FALSE(theta[0].pow(49) == theta[1] && theta[1].pow(49) == theta[0]);
}

TEST(VerifySymmetry, TrivialResidueAndToric) {
  for (const auto& d : all_builtins()) EXPECT_TRUE(verify_symmetry(all_liftings(d).front(), 1).ok()) << d.name();
  const ModularRep toric = rep_from_zeta(builtin("toric"), RootOfUnity::one());
  for (std::int64_t a : nt::units(toric.level)) EXPECT_TRUE(verify_symmetry(toric, a).ok());
}

TEST(GaloisProperty, EveryLiftingEveryUnit) {
  for (const auto& d : all_builtins())
    for (const auto& rep : all_liftings(d))
      for (std::int64_t a : nt::units(rep.level)) {
        const GaloisReport r = verify_symmetry(rep, a);
        EXPECT_TRUE(r.ok()) << d.name() << " level " << rep.level << " a = " << a << ": " << r.checks.failures();
        for (int s : r.g.signs) EXPECT_TRUE(s == 1 || s == -1);
      }
}

TEST(Homomorphism, Examples) {
  EXPECT_TRUE(homomorphism_check(rep_from_zeta(builtin("trivial"), RootOfUnity::one())));
  EXPECT_TRUE(homomorphism_check(fib60()));
}

TEST(TTilde, Examples) {
  const TTildeReport fib = ttilde_symmetry(builtin("fibonacci"));
  EXPECT_FALSE(fib.unit_twist_trivial);
  EXPECT_FALSE(fib.ttilde_symmetric);
  EXPECT_FALSE(fib.alpha_order_divides_4);
  const TTildeReport toric = ttilde_symmetry(builtin("toric"));
  EXPECT_TRUE(toric.unit_twist_trivial && toric.ttilde_symmetric && toric.alpha_order_divides_4);
  const TTildeReport dbl = ttilde_symmetry(drinfeld_double(builtin("fibonacci")).data);
  EXPECT_TRUE(dbl.unit_twist_trivial && dbl.ttilde_symmetric && dbl.alpha_order_divides_4);
}

TEST(TTilde, BooleansAgreeOnRandomData) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 15; ++i) {
    const ModularData d = modsym::testing::random_data(rng);
    const TTildeReport r = ttilde_symmetry(d);
    EXPECT_EQ(r.unit_twist_trivial, r.ttilde_symmetric) << d.name();
    EXPECT_EQ(r.ttilde_symmetric, r.alpha_order_divides_4) << d.name();
    EXPECT_EQ(r.alpha_order_divides_4, d.derived().anomaly.pow(4).is_one()) << d.name();
  }
}
