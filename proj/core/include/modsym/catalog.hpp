#pragma once

// Built-in fixtures and the JSON file format for modular data.
//
// Document layout:
//   {"name": "...", "ambient": M, "rank": r,
//    "s_tilde": [[literal, ...], ...],       r x r
//    "theta": [e_0, ..., e_{r-1}]}           theta_i = zeta_M^{e_i}
// A literal is a list of terms [num, den, exp] meaning sum num/den zeta_M^exp.
// num and den are JSON integers, or decimal strings when they exceed 64 bits.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "modsym/moddata.hpp"

namespace modsym {

struct ExpectedValues {
  CycloNum dim;
  std::int64_t fsexp = 1;
  std::int64_t ord_alpha = 1;
  Rational central_charge;
};

struct CatalogEntry {
  std::string name;
  ModularData data;
  ExpectedValues expected;
};

std::vector<std::string> builtin_names();
/// Throws InvalidInput for an unknown name.
ModularData builtin(const std::string& name);
CatalogEntry catalog_entry(const std::string& name);

/// Throws ParseError for malformed documents and InvalidInput for
/// type-invariant violations (theta_0 != 1, s~_00 != 1, ...).
ModularData from_json(const std::string& text);
/// Canonical document: terms sorted by exponent, zero terms omitted.
std::string to_json(const ModularData& data);

ModularData read(const std::filesystem::path& path);
void write(const ModularData& data, const std::filesystem::path& path);

/// A cyclotomic literal as JSON text, e.g. [[1,2,0],[1,2,1]].
std::string literal_to_json(const CycloNum& z);

}  // namespace modsym
