#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/curve.hpp"
#include "linkhom/cubical.hpp"
#include "linkhom/verify.hpp"

namespace linkhom::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kHypothesisViolation = 3,
  kResourceRefusal = 4,
  kDisagreement = 5,
};

struct RunConfig {
  std::string command;  // radii | line | curve | oracle | verify
  std::string lengths;  // "1/3,1/3,1/3" or a JSON array of strings
  std::optional<std::string> h;
  std::optional<std::string> curve_path;
  std::optional<std::uint32_t> grid_n;
  std::optional<std::string> delta;
  curve::Tolerances tol;
  std::string output = "-";
  std::string format = "json";  // json | table
  std::size_t dump_samples = 0;
  std::size_t sweep_count = 50;
  std::size_t sweep_k = 3;
  std::uint64_t seed = 20261017;
  std::uint64_t cell_budget = oracle::kDefaultCellBudget;
};

/// 0 when every verification case passed or was inconclusive, else 5.
int exit_code(const verify::VerifyReport& report);

/// Executes one command and writes its report (or an error object) to
/// `out`, or to config.output when that is a path. Returns the exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (subcommand first) and dispatches to run(). Reads
/// LINKHOM_CELL_BUDGET from the environment.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace linkhom::cli
