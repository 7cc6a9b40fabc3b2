#include <benchmark/benchmark.h>

#include <random>

#include "modsym/catalog.hpp"
#include "modsym/galois.hpp"
#include "modsym/reps.hpp"
#include "modsym/sl2.hpp"

using namespace modsym;

namespace {

CycloNum sample(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coef(-50, 50), exp(0, order - 1);
  std::vector<CycloTerm> terms;
  for (int i = 0; i < 8; ++i) terms.push_back({exp(rng), Rational(coef(rng))});
  return CycloNum::make(order, terms);
}

void BM_CycloMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const CycloNum a = sample(rng, order), b = sample(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(12)->Arg(60)->Arg(192)->Arg(720);

void BM_CycloInv(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const CycloNum a = sample(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CycloInv)->Arg(12)->Arg(60)->Arg(192);

void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(3);
  SL2Mat g;
  for (int i = 0; i < 40; ++i) g = g * SL2Mat::t(static_cast<int>(rng() % 7) - 3) * SL2Mat::s();
  for (auto _ : state) benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose);

void BM_EnumerateOrder(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order(state.range(0)));
}
BENCHMARK(BM_EnumerateOrder)->Arg(24)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CertifyLevel(benchmark::State& state) {
  const ModularRep rep = rep_from_zeta(builtin("fibonacci"), RootOfUnity(60, 7));
  const auto mode = state.range(0) == 0 ? CertifyMode::Full : CertifyMode::Fingerprint;
  for (auto _ : state) benchmark::DoNotOptimize(certify_level(rep, mode));
}
BENCHMARK(BM_CertifyLevel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GaloisSweep(benchmark::State& state) {
  const ModularRep rep = all_liftings(builtin("ising")).front();
  for (auto _ : state)
    for (std::int64_t a : {1, 5, 7, 11, 13, 17, 19, 23}) benchmark::DoNotOptimize(verify_symmetry(rep, a));
}
BENCHMARK(BM_GaloisSweep)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
