#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/cubical.hpp"
#include "linkhom/rational.hpp"

namespace linkhom::oracle {

struct OracleRun {
  std::uint32_t n = 0;
  Rational delta;  // normalized units
  std::vector<std::size_t> cells_per_dim;
  BettiVector betti;
  bool contained = true;  // see ThickenedComplex::contained
};

/// Homology of the thickened level set at resolutions n and 2n. The answer
/// is only trusted when the two agree.
struct OracleReport {
  OracleRun coarse;
  OracleRun fine;
  bool stable = false;
};

/// Called with every complex run_oracle builds, after its homology is known.
/// Meant for test harnesses; pass an empty function to clear. Not thread-safe.
using RunObserver = std::function<void(const CubicalComplex&, const OracleRun&)>;
void set_run_observer(RunObserver observer);

OracleRun run_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n,
                     std::optional<Rational> delta = std::nullopt,
                     std::uint64_t cell_budget = kDefaultCellBudget,
                     HomologyMode mode = HomologyMode::full);

OracleReport stabilized_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n,
                               std::optional<Rational> delta = std::nullopt,
                               std::uint64_t cell_budget = kDefaultCellBudget,
                               HomologyMode mode = HomologyMode::full);

}  // namespace linkhom::oracle
