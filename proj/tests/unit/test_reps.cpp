#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "generators.hpp"
#include "modsym/catalog.hpp"
#include "modsym/errors.hpp"
#include "modsym/numtheory.hpp"
#include "modsym/reps.hpp"
#include "modsym/sl2.hpp"

using namespace modsym;
using modsym::testing::all_builtins;

namespace {

Matrix t_diag(const ModularRep& r) { return Matrix::diagonal(r.ambient(), r.t); }

SL2Mat random_sl2(std::mt19937_64& rng, int steps = 8) {
  std::uniform_int_distribution<int> k(-4, 4);
  SL2Mat g;
  for (int i = 0; i < steps; ++i) g = g * SL2Mat::t(k(rng)) * SL2Mat::s();
  return g;
}

}  // namespace

TEST(SixthRoots, AnomalyFree) {
  const auto roots = sixth_roots_of_anomaly(builtin("toric"));
  ASSERT_EQ(roots.size(), 6u);
  for (const auto& z : roots) EXPECT_TRUE(z.pow(6).is_one());
}

TEST(SixthRoots, FibonacciContainsZeta60To7) {
  const auto roots = sixth_roots_of_anomaly(builtin("fibonacci"));
  EXPECT_NE(std::find(roots.begin(), roots.end(), RootOfUnity(60, 7)), roots.end());
}

TEST(SixthRoots, IsingResidues) {
  // zeta_48^k with 6k = 6 mod 48, i.e. k = 1 mod 8.
  const auto roots = sixth_roots_of_anomaly(builtin("ising"));
  ASSERT_EQ(roots.size(), 6u);
  for (int k = 1; k < 48; k += 8) EXPECT_NE(std::find(roots.begin(), roots.end(), RootOfUnity(48, k)), roots.end());
}

TEST(RepFromZeta, FibonacciT) {
  const ModularRep r = rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7));
  ASSERT_EQ(r.t.size(), 2u);
  EXPECT_EQ(r.t[0], RootOfUnity(60, -7));
  EXPECT_EQ(r.t[1], RootOfUnity(60, 17));
  EXPECT_EQ(r.level, 60);
}

TEST(RepFromZeta, ScalarMatchesDefinition) {
  for (const auto& d : all_builtins()) {
    const auto zeta = sixth_roots_of_anomaly(d).front();
    const ModularRep r = rep_from_zeta(d, zeta);
    const CycloNum scalar = zeta.pow(3).to_cyclo(d.ambient()) * d.derived().gauss_plus.inv();
    EXPECT_EQ(r.s, d.s_tilde().scaled(scalar)) << d.name();
  }
}

TEST(RepFromZeta, TrivialAndToric) {
  const ModularRep triv = rep_from_zeta(builtin("trivial"), RootOfUnity::one());
  EXPECT_TRUE(triv.s.is_identity());
  EXPECT_TRUE(triv.t[0].is_one());

  const ModularData toric = builtin("toric");
  const ModularRep r = rep_from_zeta(toric, RootOfUnity::one());
  EXPECT_EQ(r.s, toric.s_tilde().scaled(CycloNum::rational(toric.ambient(), Rational(1, 2))));
  EXPECT_EQ(r.t, toric.theta());
  EXPECT_EQ(level(r), 2);
}

TEST(Twist, IdentityAndTrivialLevel) {
  const ModularData triv = builtin("trivial");
  const ModularRep base = rep_from_zeta(triv, RootOfUnity::one());
  const ModularRep same = twist(base, RootOfUnity::one());
  EXPECT_EQ(same.s, base.s);
  EXPECT_EQ(same.t, base.t);
  EXPECT_EQ(twist(base, RootOfUnity(12, 1)).level, 12);
  EXPECT_THROW(twist(base, RootOfUnity(5, 1)), DomainError);
}

TEST(Twist, IsingExample) {
  const ModularData ising = builtin("ising");
  const ModularRep r = twist(rep_from_zeta(ising, RootOfUnity(48, 9)), RootOfUnity(4, 1));
  EXPECT_EQ(r.t[0], RootOfUnity(16, 1));
  EXPECT_EQ(r.t[1], RootOfUnity(8, 1));
  EXPECT_EQ(r.t[2], RootOfUnity(16, 9));
  EXPECT_EQ(r.level, 16);
  const CycloNum minus_i_half = CycloNum::root(ising.ambient(), 3 * ising.ambient() / 4).scaled(Rational(1, 2));
  EXPECT_EQ(r.s, ising.s_tilde().scaled(minus_i_half));
  EXPECT_TRUE(rationality_check(r));
}

TEST(Twist, CompositionAndInjectivity) {
  for (const auto& d : all_builtins()) {
    const ModularRep base = all_liftings(d).front();
    for (int a = 0; a < 12; ++a)
      for (int b = 0; b < 12; b += 5) {
        const ModularRep lhs = twist(twist(base, RootOfUnity(12, a)), RootOfUnity(12, b));
        const ModularRep rhs = twist(base, RootOfUnity(12, a + b));
        EXPECT_EQ(lhs.s, rhs.s);
        EXPECT_EQ(lhs.t, rhs.t);
        EXPECT_EQ(lhs.sgn_s, rhs.sgn_s);
      }
    for (int a = 1; a < 12; ++a) {
      const ModularRep other = twist(base, RootOfUnity(12, a));
      EXPECT_FALSE(other.t == base.t && other.s == base.s) << d.name() << " x = zeta_12^" << a;
    }
  }
}

TEST(Liftings, TrivialLevelMultiset) {
  std::map<int, int> counts;
  for (const auto& r : all_liftings(builtin("trivial"))) ++counts[r.level];
  const std::map<int, int> expect{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {6, 2}, {12, 4}};
  EXPECT_EQ(counts, expect);
}

TEST(Liftings, FibonacciLevels) {
  const auto reps = all_liftings(builtin("fibonacci"));
  ASSERT_EQ(reps.size(), 12u);
  for (const auto& r : reps) {
    EXPECT_EQ(60 % r.level, 0);
    EXPECT_EQ(r.level % 5, 0);
  }
}

TEST(Liftings, SetIndependentOfSeed) {
  for (const auto& d : all_builtins()) {
    const auto roots = sixth_roots_of_anomaly(d);
    auto key = [](const ModularRep& r) {
      std::string k;
      r.s.serialize(k);
      for (const auto& t : r.t) k += t.to_string() + ";";
      return k;
    };
    std::vector<std::string> a, b;
    const ModularRep base0 = rep_from_zeta(d, roots[0]);
    const ModularRep base1 = rep_from_zeta(d, roots[1]);
    for (int k = 0; k < 12; ++k) {
      a.push_back(key(twist(base0, RootOfUnity(12, k))));
      b.push_back(key(twist(base1, RootOfUnity(12, k))));
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << d.name();
  }
}

TEST(Liftings, RelationsAndLevelBounds) {
  for (const auto& d : all_builtins()) {
    const std::int64_t n = d.derived().fsexp;
    for (const auto& r : all_liftings(d)) {
      const Matrix s = r.s;
      const Matrix t = t_diag(r);
      const Matrix s2 = s * s;
      EXPECT_TRUE((s2 * s2).is_identity()) << d.name();
      const Matrix st = s * t;
      EXPECT_EQ(st * st * st, s2) << d.name();
      const Matrix c = promote(d.derived().charge_conj, r.ambient());
      EXPECT_EQ(s2, r.sgn_s > 0 ? c : c.scaled(CycloNum::integer(r.ambient(), -1))) << d.name();
      EXPECT_EQ(r.level % n, 0);
      EXPECT_EQ((12 * n) % r.level, 0);
      EXPECT_TRUE(rationality_check(r));
      EXPECT_EQ(promote(r.s_level, r.ambient()), r.s);
      EXPECT_EQ(promote(r.s_inverse(), r.ambient()) * r.s, Matrix::identity(r.ambient(), d.rank()));
    }
  }
}

TEST(Level, FibonacciToricIsing) {
  EXPECT_EQ(level(rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7))), 60);
  EXPECT_EQ(level(rep_from_zeta(builtin("toric"), RootOfUnity::one())), 2);
  EXPECT_EQ(level(twist(rep_from_zeta(builtin("ising"), RootOfUnity(48, 9)), RootOfUnity(4, 1))), 16);
}

TEST(Rationality, Examples) {
  EXPECT_TRUE(rationality_check(rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7))));
  EXPECT_TRUE(rationality_check(twist(rep_from_zeta(builtin("trivial"), RootOfUnity::one()), RootOfUnity(12, 1))));
}

TEST(Kappa, Examples) {
  EXPECT_TRUE(kappa_trivial(builtin("fibonacci")).trivial);
  const KappaResult ising = kappa_trivial(builtin("ising"), RootOfUnity(48, 9));
  EXPECT_TRUE(ising.trivial);
  EXPECT_NE(std::find(ising.witnesses.begin(), ising.witnesses.end(), RootOfUnity(4, 1)), ising.witnesses.end());
  const KappaResult triv = kappa_trivial(builtin("trivial"), RootOfUnity(6, 1));
  ASSERT_TRUE(triv.witness);
  EXPECT_NE(std::find(triv.witnesses.begin(), triv.witnesses.end(), RootOfUnity(6, 1)), triv.witnesses.end());
}

TEST(Kappa, WitnessesSatisfyDefinition) {
  for (const auto& d : all_builtins()) {
    const std::int64_t n = d.derived().fsexp;
    for (const auto& zeta : sixth_roots_of_anomaly(d)) {
      const KappaResult k = kappa_trivial(d, zeta);
      int count = 0;
      for (int e = 0; e < 12; ++e) count += (RootOfUnity(12, e) * zeta.inverse()).pow(n).is_one();
      EXPECT_EQ(static_cast<int>(k.witnesses.size()), count) << d.name();
      EXPECT_EQ(k.trivial, count > 0) << d.name();
      if (n % 4 != 0) EXPECT_TRUE(k.trivial) << d.name();
    }
  }
}

TEST(Evaluate, Generators) {
  const ModularRep r = rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7));
  EXPECT_TRUE(evaluate(r, SL2Mat::identity()).is_identity());
  EXPECT_EQ(evaluate(r, SL2Mat::s()), r.s_level);
  EXPECT_EQ(evaluate(r, SL2Mat::t()), r.t_matrix());
}

TEST(Evaluate, ExplicitProduct) {
  const ModularRep r = all_liftings(builtin("ising"))[3];
  const SL2Mat g = SL2Mat::t(3) * SL2Mat::s() * SL2Mat::t(-2);
  std::vector<RootOfUnity> inv;
  for (const auto& x : r.t) inv.push_back(x.inverse());
  const Matrix t = t_diag(r);
  const Matrix t_inv = Matrix::diagonal(r.ambient(), inv);
  const Matrix expect = t * t * t * r.s * t_inv * t_inv;
  EXPECT_EQ(promote(evaluate(r, g), r.ambient()), expect);
}

TEST(EvaluateProperty, Homomorphism) {
  std::mt19937_64 rng(11);
  for (const auto& d : all_builtins()) {
    const auto reps = all_liftings(d);
    for (int trial = 0; trial < 40; ++trial) {
      const ModularRep& r = reps[trial % 12];
      const SL2Mat a = random_sl2(rng), b = random_sl2(rng);
      EXPECT_EQ(evaluate(r, a * b), evaluate(r, a) * evaluate(r, b)) << d.name();
    }
  }
}

TEST(EvaluateProperty, CongruenceOnGammaN) {
  std::mt19937_64 rng(12);
  for (const auto& d : all_builtins()) {
    for (const auto& r : all_liftings(d)) {
      const auto words = gamma_n_words(r.level, 10, rng());
      for (const auto& w : words) {
        const SL2Mat g = random_sl2(rng, 4);
        EXPECT_EQ(evaluate(r, g * w.evaluate()), evaluate(r, g)) << d.name();
      }
    }
  }
}
