#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lmm/models.hpp"

namespace lmm::cli {

enum class OutputFormat { Csv, Json };

/// Parameters shared by every subcommand. Loaded from a JSON file, then
/// overridden by command-line flags.
struct RunConfig {
  models::ModelDefinition model = models::coulomb_test_model();
  bool builtin = true;
  int n = 50;
  double h = 0.5;
  int l = 0;
  int n_states = -1;  // -1: min(3, n)
  std::string output;
  OutputFormat format = OutputFormat::Csv;
};

/// Thrown for usage and schema problems; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a JSON config document with the strict schema
///   { "model": "<builtin>" | {"name": ..., "kinetic": {...}, "potential": {...}},
///     "n": int, "h": number, "l": int, "states": int, "output": string, "format": "csv"|"json" }
/// Unknown keys are rejected.
RunConfig parse_config(const std::string& json_text);

/// Entry point; returns the process exit status (0 ok, 1 numerical failure, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmm::cli
