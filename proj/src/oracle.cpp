#include "linkhom/oracle.hpp"

#include <utility>

namespace linkhom::oracle {

namespace {
RunObserver& observer() {
  static RunObserver instance;
  return instance;
}
}  // namespace

void set_run_observer(RunObserver o) { observer() = std::move(o); }

OracleRun run_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n, std::optional<Rational> delta,
                     std::uint64_t cell_budget, HomologyMode mode) {
  const auto thick = build_thickened_complex(link, h, n, delta, cell_budget);
  OracleRun run{n, thick.grid.delta, thick.complex.cells_per_dim(), homology(thick.complex, mode),
                thick.contained};
  if (observer()) observer()(thick.complex, run);
  return run;
}

OracleReport stabilized_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n,
                               std::optional<Rational> delta, std::uint64_t cell_budget, HomologyMode mode) {
  OracleReport report;
  report.coarse = run_oracle(link, h, n, delta, cell_budget, mode);
  report.fine = run_oracle(link, h, 2 * n, delta, cell_budget, mode);
  report.stable = same_homology(report.coarse.betti, report.fine.betti);
  return report;
}

}  // namespace linkhom::oracle
