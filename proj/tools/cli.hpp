#pragma once

// Command-line front end. Exit codes: 0 when every check passes, 1 when a
// mathematical check fails, 2 on input or usage errors.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace modsym::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;  // validate, info, fusion, liftings, level, galois, double, anomaly, report, catalog
  std::string input;    // builtin name or file path
  Format format = Format::Text;
  bool certify = false;
  bool fast = false;
  bool verify_symmetry = false;
  std::optional<std::int64_t> residue;  // galois --a
  int lifting = 0;                      // galois --lifting
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to run().
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modsym::cli
