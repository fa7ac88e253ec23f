#include "linkhom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "linkhom/error.hpp"
#include "linkhom/line.hpp"
#include "linkhom/oracle.hpp"

namespace linkhom::verify {

namespace {

using report::Json;

BettiVector ranks_of(std::vector<std::int64_t> r) { return BettiVector{std::move(r), {}}; }

Json lengths_json(const arm::Linkage& link) {
  Json out = Json::array();
  for (const auto& l : link.lengths()) out.push_back(l.to_string());
  return out;
}

Json optional_ranks(const std::optional<BettiVector>& bv) {
  if (!bv) return nullptr;
  return report::ranks(*bv);
}

// Fills status/agreement from expected, formula and oracle values.
void settle(VerifyCase& c, bool oracle_requested) {
  bool agree = c.formula.has_value();
  if (agree && c.expected) agree = same_homology(*c.expected, *c.formula);
  if (agree && c.oracle) agree = same_homology(*c.oracle, *c.formula);
  c.agreement = agree;
  if (agree && oracle_requested && !c.oracle) {
    c.status = Status::inconclusive;
    c.agreement = false;
    return;
  }
  c.status = agree ? Status::pass : Status::fail;
}

void run_isolated(VerifyReport& report, VerifyCase c, const std::function<void(VerifyCase&)>& body) {
  try {
    body(c);
  } catch (const Error& e) {
    c.status = Status::fail;
    c.agreement = false;
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("error ") + e.code() + ": " + e.what();
  } catch (const std::exception& e) {
    c.status = Status::fail;
    c.agreement = false;
    c.notes += (c.notes.empty() ? "" : "; ") + std::string("error: ") + e.what();
  }
  report.cases.push_back(std::move(c));
}

void line_with_oracle(VerifyCase& c, const arm::Linkage& link, const Rational& h, std::uint32_t n,
                      std::uint64_t budget) {
  c.formula = line::betti_line(link, h);
  const auto o = stable_oracle(link, h, n, 4 * n, budget);
  c.oracle = o.betti;
  for (const auto& t : o.trace) c.notes += (c.notes.empty() ? "" : "; ") + t;
  settle(c, true);
}

}  // namespace

curve::PlanarCurve double_dip_curve() {
  return curve::PlanarCurve{{{-1.0, 0.0}, {-0.1, 0.0}, {-0.1, 0.5}, {0.1, 0.5}, {0.1, 0.0}, {1.0, 0.0}}};
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [s](const VerifyCase& c) { return c.status == s; }));
}

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

RandomInstance random_instance(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<long> den_dist(1, 6);
  std::vector<Rational> lengths;
  for (std::size_t i = 0; i < k; ++i) {
    const long q = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(1, 2 * q);
    lengths.emplace_back(num_dist(rng), static_cast<unsigned long>(q));
  }
  arm::Linkage link(std::move(lengths));
  const auto normalized = arm::normalize(link);
  const auto values = arm::spectrum(normalized.linkage).critical_values();

  std::uniform_int_distribution<std::size_t> gap_dist(0, values.size() - 2);
  std::uniform_int_distribution<long> frac_dist(1, 7);
  const std::size_t g = gap_dist(rng);
  const Rational level = values[g] + (values[g + 1] - values[g]) * Rational(frac_dist(rng), 8);
  return RandomInstance{link, level / normalized.scale};
}

StableOracle stable_oracle(const arm::Linkage& link, const Rational& h, std::uint32_t n, std::uint32_t max_n,
                           std::uint64_t cell_budget) {
  StableOracle out;
  auto describe = [](const oracle::OracleRun& r) {
    return "n=" + std::to_string(r.n) + " " + format_ranks(r.betti.ranks) + (r.contained ? "" : " (uncontained)");
  };
  auto current = oracle::run_oracle(link, h, n, std::nullopt, cell_budget);
  while (!current.contained && 2 * n <= max_n) {
    out.trace.push_back("oracle " + describe(current));
    n *= 2;
    current = oracle::run_oracle(link, h, n, std::nullopt, cell_budget);
  }
  if (!current.contained) {
    out.trace.push_back("oracle " + describe(current) + "; cover not contained by n=" + std::to_string(max_n));
    return out;
  }
  while (2 * n <= max_n) {
    auto finer = oracle::run_oracle(link, h, 2 * n, std::nullopt, cell_budget);
    out.trace.push_back("oracle " + describe(current) + ", " + describe(finer));
    if (same_homology(current.betti, finer.betti)) {
      out.betti = std::move(finer.betti);
      out.n = n;
      return out;
    }
    current = std::move(finer);
    n *= 2;
  }
  out.trace.push_back("not stabilized by n=" + std::to_string(max_n));
  return out;
}

VerifyReport verify_suite(const VerifyOptions& options) {
  VerifyReport report;
  const auto n_or = [&](std::uint32_t fallback) { return options.grid_n.value_or(fallback); };
  const auto& tol = options.tol;
  const std::uint64_t budget = options.cell_budget;

  // Stretched-out arms: the level set is a single point.
  for (std::size_t k = 2; k <= 6; ++k) {
    for (long sign : {1L, -1L}) {
      const arm::Linkage link(std::vector<Rational>(k, Rational(1, k)));
      const Rational h(sign);
      VerifyCase c{"equal_bars_extreme/k=" + std::to_string(k) + "/h=" + std::to_string(sign),
                   Json{{"lengths", lengths_json(link)}, {"h", h.to_string()}}};
      std::vector<std::int64_t> expected(k, 0);
      expected[0] = 1;
      c.expected = ranks_of(expected);
      run_isolated(report, std::move(c), [&](VerifyCase& vc) {
        vc.formula = line::betti_line(link, h);
        settle(vc, false);
      });
    }
  }

  const arm::Linkage halves({Rational(1, 2), Rational(1, 2)});
  const arm::Linkage thirds({Rational(1, 3), Rational(1, 3), Rational(1, 3)});

  run_isolated(report, VerifyCase{"two_bars_regular/line", Json{{"lengths", lengths_json(halves)}, {"h", "1/2"}},
                                  ranks_of({1, 1})},
               [&](VerifyCase& c) { line_with_oracle(c, halves, Rational(1, 2), n_or(32), budget); });

  run_isolated(report, VerifyCase{"two_bars_regular/curve", Json{{"lengths", lengths_json(halves)}, {"curve", "chord y=1/2"}},
                                  ranks_of({1, 1})},
               [&](VerifyCase& c) {
                 c.formula = curve::betti_curve(halves, curve::horizontal_chord(0.5), tol).betti;
                 settle(c, false);
               });

  run_isolated(report, VerifyCase{"two_bars_critical/line", Json{{"lengths", lengths_json(halves)}, {"h", "0/1"}},
                                  ranks_of({1, 3})},
               [&](VerifyCase& c) {
                 c.notes = "critical height, thickened about the critical value";
                 line_with_oracle(c, halves, Rational(0), n_or(32), budget);
               });

  run_isolated(report,
               VerifyCase{"two_bars_critical/curve_rejected", Json{{"lengths", lengths_json(halves)}, {"curve", "chord y=0"}}},
               [&](VerifyCase& c) {
                 try {
                   curve::betti_curve(halves, curve::horizontal_chord(0.0), tol);
                   c.status = Status::fail;
                   c.agreement = false;
                   c.notes = "chord through the origin was accepted";
                 } catch (const Error& e) {
                   c.agreement = e.code() == "origin_tangency";
                   c.status = c.agreement ? Status::pass : Status::fail;
                   c.notes = std::string("rejected: ") + e.code();
                 }
               });

  run_isolated(report, VerifyCase{"three_bars_genus3/line", Json{{"lengths", lengths_json(thirds)}, {"h", "0/1"}},
                                  ranks_of({1, 6, 1})},
               [&](VerifyCase& c) { line_with_oracle(c, thirds, Rational(0), n_or(24), budget); });

  run_isolated(report, VerifyCase{"three_bars_genus3/curve", Json{{"lengths", lengths_json(thirds)}, {"curve", "chord y=0"}},
                                  ranks_of({1, 6, 1})},
               [&](VerifyCase& c) {
                 c.formula = curve::betti_curve(thirds, curve::horizontal_chord(0.0), tol).betti;
                 settle(c, false);
               });

  run_isolated(report,
               VerifyCase{"double_dip/curve",
                          Json{{"lengths", lengths_json(thirds)}, {"curve", report::curve_json(double_dip_curve())}},
                          ranks_of({1, 12, 1})},
               [&](VerifyCase& c) {
                 c.formula = curve::betti_curve(thirds, double_dip_curve(), tol).betti;
                 settle(c, false);
               });

  const arm::Linkage single({Rational(1)});
  run_isolated(report, VerifyCase{"single_edge", Json{{"lengths", lengths_json(single)}, {"h", "1/2"}}},
               [&](VerifyCase& c) {
                 c.notes = "k=1: the level set is two points; a_0 = b_1 = 1";
                 line_with_oracle(c, single, Rational(1, 2), n_or(16), budget);
               });

  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.sweep_count; ++i) {
    const auto inst = random_instance(rng, options.sweep_k);
    VerifyCase c{"sweep/" + std::to_string(i), Json{{"lengths", lengths_json(inst.link)}, {"h", inst.h.to_string()}}};
    run_isolated(report, std::move(c), [&](VerifyCase& vc) {
      vc.formula = line::betti_line(inst.link, inst.h);
      const auto o = stable_oracle(inst.link, inst.h, n_or(16), std::max<std::uint32_t>(128, 4 * n_or(16)), budget);
      vc.oracle = o.betti;
      for (const auto& t : o.trace) vc.notes += (vc.notes.empty() ? "" : "; ") + t;
      settle(vc, true);
    });
  }
  return report;
}

Json to_json(const VerifyReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    cases.push_back(Json{{"name", c.name},
                         {"input", c.input},
                         {"betti_expected", optional_ranks(c.expected)},
                         {"betti_formula", optional_ranks(c.formula)},
                         {"betti_oracle", optional_ranks(c.oracle)},
                         {"status", to_string(c.status)},
                         {"agreement", c.agreement},
                         {"notes", c.notes}});
  }
  return Json{{"cases", cases},
              {"passed", r.count(Status::pass)},
              {"failed", r.count(Status::fail)},
              {"inconclusive", r.count(Status::inconclusive)}};
}

}  // namespace linkhom::verify
