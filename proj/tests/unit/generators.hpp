#pragma once

// Hand-rolled generators for property tests. New modular data is produced
// from the catalog by Deligne products and Galois conjugation, both of which
// preserve modularity.

#include <random>
#include <string>
#include <vector>

#include "modsym/catalog.hpp"
#include "modsym/numtheory.hpp"

namespace modsym::testing {

inline ModularData deligne(const ModularData& a, const ModularData& b) {
  const int m = static_cast<int>(nt::lcm(a.ambient(), b.ambient()));
  const Matrix sa = promote(a.s_tilde(), m);
  const Matrix sb = promote(b.s_tilde(), m);
  const int ra = a.rank(), rb = b.rank();
  Matrix s(m, ra * rb, ra * rb);
  std::vector<RootOfUnity> theta;
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < rb; ++j) {
      theta.push_back(a.theta()[i] * b.theta()[j]);
      for (int k = 0; k < ra; ++k)
        for (int l = 0; l < rb; ++l) s(i * rb + j, k * rb + l) = sa(i, k) * sb(j, l);
    }
  return ModularData::create(a.name() + "x" + b.name(), s, std::move(theta));
}

/// sigma_a applied to s~ and theta; a must be a unit mod the ambient order.
inline ModularData conjugate(const ModularData& d, std::int64_t a) {
  std::vector<RootOfUnity> theta;
  for (const auto& t : d.theta()) theta.push_back(t.pow(a));
  return ModularData::create(d.name() + "^" + std::to_string(a), galois_apply(a, d.s_tilde()), std::move(theta));
}

inline std::vector<ModularData> all_builtins() {
  std::vector<ModularData> out;
  for (const auto& n : builtin_names()) out.push_back(builtin(n));
  return out;
}

/// A random product of at most two builtins of total rank <= max_rank, then
/// a random Galois conjugate.
inline ModularData random_data(std::mt19937_64& rng, int max_rank = 6) {
  const auto names = builtin_names();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  ModularData d = builtin(names[pick(rng)]);
  if (std::bernoulli_distribution(0.5)(rng)) {
    ModularData e = builtin(names[pick(rng)]);
    if (d.rank() * e.rank() <= max_rank) d = deligne(d, e);
  }
  const auto units = nt::units(d.ambient());
  std::uniform_int_distribution<std::size_t> u(0, units.size() - 1);
  return conjugate(d, units[u(rng)]);
}

}  // namespace modsym::testing
