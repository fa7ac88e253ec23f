#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/curve.hpp"
#include "linkhom/cubical.hpp"
#include "linkhom/report.hpp"

namespace linkhom::verify {

struct VerifyOptions {
  std::optional<std::uint32_t> grid_n;  // overrides the per-case oracle resolution
  std::size_t sweep_count = 50;
  std::size_t sweep_k = 3;
  std::uint64_t seed = 20261017;
  std::uint64_t cell_budget = oracle::kDefaultCellBudget;
  curve::Tolerances tol;
};

enum class Status { pass, fail, inconclusive };

struct VerifyCase {
  VerifyCase() = default;
  VerifyCase(std::string case_name, report::Json case_input, std::optional<BettiVector> reference = std::nullopt)
      : name(std::move(case_name)), input(std::move(case_input)), expected(std::move(reference)) {}

  std::string name;
  report::Json input;
  std::optional<BettiVector> expected;  // known answer, when there is one
  std::optional<BettiVector> formula;
  std::optional<BettiVector> oracle;
  Status status = Status::pass;
  bool agreement = true;
  std::string notes;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
};

/// Random positive rational lengths p/q with q <= 6 and a regular height
/// strictly inside a gap between consecutive critical values.
struct RandomInstance {
  arm::Linkage link;
  Rational h;  // in the linkage's own units
};
/// The two-dip polyline: endpoints (+-1, 0) on the unit circle and two
/// excursions into the disk of radius 1/3 (four crossings of that circle).
curve::PlanarCurve double_dip_curve();

RandomInstance random_instance(std::mt19937_64& rng, std::size_t k);

/// Oracle homology with an adaptive grid: n is doubled until the cubical
/// cover keeps clear of every critical point off the level, then doubled again
/// until two consecutive resolutions agree. nullopt (inconclusive) if that
/// does not happen by `max_n`.
struct StableOracle {
  std::optional<BettiVector> betti;
  std::uint32_t n = 0;  // coarser of the agreeing pair
  std::vector<std::string> trace;
};
StableOracle stable_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n, std::uint32_t max_n,
                           std::uint64_t cell_budget);

/// Runs every reference case through each applicable path, then a random
/// cross-validation sweep against the oracle. Cases are isolated: an error in
/// one is recorded and the suite continues.
VerifyReport verify_suite(const VerifyOptions& options);

report::Json to_json(const VerifyReport& r);
const char* to_string(Status s);

}  // namespace linkhom::verify
