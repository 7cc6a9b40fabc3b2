#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "modsym/catalog.hpp"
#include "modsym/errors.hpp"
#include "modsym/moddata.hpp"

using namespace modsym;
using modsym::testing::all_builtins;
using modsym::testing::random_data;

namespace {

CycloNum phi5() {
  return CycloNum::make(5, {{0, Rational(1, 2)}, {1, Rational(1, 2)}, {2, Rational(-1, 2)}, {3, Rational(-1, 2)},
                            {4, Rational(1, 2)}});
}

Matrix fib_s() {
  Matrix s(5, 2, 2);
  s(0, 0) = CycloNum::integer(5, 1);
  s(0, 1) = s(1, 0) = phi5();
  s(1, 1) = CycloNum::integer(5, -1);
  return s;
}

}  // namespace

TEST(ModularData, CreateAppliesAmbientPolicy) {
  const ModularData fib = builtin("fibonacci");
  EXPECT_EQ(fib.ambient(), 60);
  EXPECT_EQ(fib.twist_exponent(), 5);
  EXPECT_EQ(builtin("ising").ambient(), 192);
  EXPECT_EQ(builtin("trivial").ambient(), 12);
}

TEST(ModularData, CreateRejectsBadShapes) {
  const std::vector<RootOfUnity> th2{{5, 0}, {5, 2}};
  EXPECT_THROW(ModularData::create("x", Matrix(5, 2, 3), th2), InvalidInput);
  EXPECT_THROW(ModularData::create("x", fib_s(), {{5, 0}}), InvalidInput);
  EXPECT_THROW(ModularData::create("x", fib_s(), {{5, 1}, {5, 2}}), InvalidInput);
  Matrix bad = fib_s();
  bad(0, 0) = CycloNum::integer(5, 2);
  EXPECT_THROW(ModularData::create("x", bad, th2), InvalidInput);
}

TEST(Derive, Fibonacci) {
  const DerivedInvariants inv = builtin("fibonacci").derived();
  const int m = 60;
  EXPECT_EQ(inv.global_dim, promote(CycloNum::integer(5, 2) + phi5(), m));
  EXPECT_EQ(inv.fsexp, 5);
  // alpha = e^{7 pi i / 5} = zeta_10^7
  EXPECT_EQ(inv.anomaly, RootOfUnity(10, 7));
  EXPECT_EQ(inv.anomaly.multiplicative_order(), 10);
  EXPECT_EQ(inv.dual, (std::vector<int>{0, 1}));
}

TEST(Derive, Trivial) {
  const DerivedInvariants inv = builtin("trivial").derived();
  EXPECT_TRUE(inv.global_dim.is_one());
  EXPECT_TRUE(inv.gauss_plus.is_one());
  EXPECT_TRUE(inv.gauss_minus.is_one());
  EXPECT_TRUE(inv.anomaly.is_one());
  EXPECT_EQ(inv.fsexp, 1);
  EXPECT_EQ(inv.dual, std::vector<int>{0});
}

TEST(Derive, ToricGaussSumsByHand) {
  // p+ = 1 + 1 + 1 - 1 = 2 = p-.
  const DerivedInvariants inv = builtin("toric").derived();
  EXPECT_EQ(inv.global_dim, CycloNum::integer(24, 4));
  EXPECT_EQ(inv.gauss_plus, CycloNum::integer(24, 2));
  EXPECT_EQ(inv.gauss_minus, CycloNum::integer(24, 2));
  EXPECT_TRUE(inv.anomaly.is_one());
  EXPECT_EQ(inv.fsexp, 2);
}

TEST(Derive, RejectsNonModular) {
  Matrix s(1, 2, 2);
  s(0, 0) = s(0, 1) = s(1, 0) = s(1, 1) = CycloNum::integer(1, 1);
  const ModularData d = ModularData::create("degenerate", s, {{1, 0}, {1, 0}});
  EXPECT_THROW(d.derived(), NotModular);
}

TEST(Verlinde, Fibonacci) {
  const FusionTensor n = verlinde(builtin("fibonacci"));
  EXPECT_EQ(n(1, 1, 0), 1);
  EXPECT_EQ(n(1, 1, 1), 1);
  EXPECT_EQ(n(0, 1, 1), 1);
  EXPECT_EQ(n(0, 1, 0), 0);
}

TEST(Verlinde, UnitRowIsIdentity) {
  for (const auto& d : all_builtins()) {
    const FusionTensor n = verlinde(d);
    for (int j = 0; j < d.rank(); ++j)
      for (int k = 0; k < d.rank(); ++k) EXPECT_EQ(n(0, j, k), j == k ? 1 : 0) << d.name();
  }
}

TEST(Verlinde, PointedZ3BothPairings) {
  // Fusion is the group law for s~ = zeta_3^{jk} and for its conjugate zeta_3^{2jk}.
  for (int mult : {1, 2}) {
    Matrix s(3, 3, 3);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s(j, k) = CycloNum::root(3, mult * j * k);
    const ModularData d = ModularData::create("z3", s, {{3, 0}, {3, 1}, {3, 1}});
    const FusionTensor n = verlinde(d);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) EXPECT_EQ(n(j, k, l), l == (j + k) % 3 ? 1 : 0);
  }
}

TEST(Verlinde, NonIntegralThrows) {
  // Symmetric and invertible but not a fusion-compatible S-matrix.
  Matrix s(1, 2, 2);
  s(0, 0) = CycloNum::integer(1, 1);
  s(0, 1) = s(1, 0) = CycloNum::integer(1, 2);
  s(1, 1) = CycloNum::integer(1, -1);
  const ModularData d = ModularData::create("bad", s, {{1, 0}, {2, 1}});
  EXPECT_THROW(verlinde(d), VerlindeFailure);
}

TEST(Validate, FibonacciAndTrivialPass) {
  EXPECT_TRUE(validate(builtin("fibonacci")).ok());
  EXPECT_TRUE(validate(builtin("trivial")).ok());
}

TEST(Validate, CorruptedFibonacciFailsStCubed) {
  const ModularData d = ModularData::create("corrupt", fib_s(), {{5, 0}, {5, 1}});
  const CheckList r = validate(d);
  EXPECT_FALSE(r.passed("st_cubed"));
  EXPECT_TRUE(r.passed("symmetric"));
  EXPECT_TRUE(r.passed("s_squared"));
}

TEST(Validate, NonSymmetricFailsSymmetry) {
  Matrix s = fib_s();
  s(0, 1) = CycloNum::integer(5, 1);
  const ModularData d = ModularData::create("asym", s, {{5, 0}, {5, 2}});
  EXPECT_FALSE(validate(d).passed("symmetric"));
}

TEST(CentralCharge, Examples) {
  EXPECT_EQ(central_charge(builtin("fibonacci")), Rational(14, 5));
  EXPECT_EQ(central_charge(builtin("toric")), Rational(0));
  EXPECT_EQ(central_charge(builtin("semion")), Rational(1));
  EXPECT_EQ(central_charge(builtin("ising")), Rational(1, 2));
  EXPECT_EQ(central_charge(builtin("pointed_z3")), Rational(2));
}

TEST(ModularDataProperty, CatalogInvariants) {
  for (const auto& d : all_builtins()) {
    const DerivedInvariants& inv = d.derived();
    // p+ p- = dim and alpha = exp(pi i c / 2).
    EXPECT_EQ(inv.gauss_plus * inv.gauss_minus, inv.global_dim) << d.name();
    const Rational c = central_charge(d);
    EXPECT_EQ(RootOfUnity(4 * static_cast<int>(c.get_den().get_si()), c.get_num().get_si()), inv.anomaly) << d.name();
    // sum d_i^2 = dim
    CycloNum sum(d.ambient());
    for (const auto& x : inv.dims) sum += x * x;
    EXPECT_EQ(sum, inv.global_dim) << d.name();
  }
}

TEST(ModularDataProperty, RandomProductsAndConjugates) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 25; ++trial) {
    const ModularData d = random_data(rng);
    const CheckList r = validate(d);
    EXPECT_TRUE(r.ok()) << d.name() << ": " << r.failures();
    const DerivedInvariants& inv = d.derived();
    EXPECT_EQ(inv.gauss_plus * inv.gauss_minus, inv.global_dim) << d.name();
    // Exact central charge agrees with the floating embedding of p+ / sqrt(dim).
    const Rational c = central_charge(d);
    const double angle = std::numbers::pi * c.get_d() / 4;
    const std::complex<double> expect = std::polar(1.0, angle);
    const std::complex<double> got = numeric(inv.gauss_plus) / std::sqrt(numeric(inv.global_dim).real());
    EXPECT_LT(std::abs(got - expect), 1e-9) << d.name();
  }
}

TEST(ModularDataProperty, DeligneProductMultiplies) {
  using modsym::testing::deligne;
  const auto all = all_builtins();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) {
      if (all[i].rank() * all[j].rank() > 9) continue;
      const ModularData p = deligne(all[i], all[j]);
      const int m = p.ambient();
      EXPECT_EQ(p.derived().global_dim,
                promote(all[i].derived().global_dim, m) * promote(all[j].derived().global_dim, m));
      EXPECT_EQ(p.derived().anomaly, all[i].derived().anomaly * all[j].derived().anomaly);
      EXPECT_EQ(central_charge(p), Rational((central_charge(all[i]) + central_charge(all[j])) -
                                            (central_charge(all[i]) + central_charge(all[j]) >= 8 ? 8 : 0)));
    }
}
