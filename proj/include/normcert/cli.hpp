#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normcert/criterion.hpp"

namespace normcert::cli {

enum class ExitCode : int { ok = 0, math_failure = 1, usage = 2 };

struct LevelSpec {
  std::string text;                  // as given on the command line
  std::vector<std::uint32_t> values;
  bool single = true;                // one value, not a range or list
};

/// "7", "5..16" or "5,7,9". Throws DomainError on malformed or oversized specs.
LevelSpec parse_levels(const std::string& text);

struct RunConfig {
  std::string command;  // cyclotomic | composite | modular
  LevelSpec levels;
  std::string construction = "cos-plus-one";
  std::optional<long> a, b;
  std::optional<std::uint32_t> t;
  std::optional<unsigned long> exponent;  // empty means auto
  long truncation = 40;
  PrecisionPolicy precision;
  std::string format = "json";
  std::string out;
};

/// Runs `verify <args...>` (args exclude the program name) and returns the
/// exit code. Reports go to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normcert::cli
