#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "linkhom/cubical.hpp"
#include "linkhom/oracle.hpp"
#include "support.hpp"

using namespace linkhom;
using namespace linkhom::oracle;

namespace {

std::vector<std::int64_t> binomials(std::size_t k) {
  std::vector<std::int64_t> out(k + 1, 1);
  for (std::size_t j = 1; j <= k; ++j) out[j] = out[j - 1] * static_cast<std::int64_t>(k - j + 1) / j;
  return out;
}

}  // namespace

TEST_CASE("cell codes round trip") {
  const CubicalComplex c(3, 8);
  const Cube cube{{7, 0, 3}, 0b101};
  CHECK(c.decode(c.encode(cube)) == cube);
  CHECK(cube.dimension() == 2);
}

TEST_CASE("full torus homology is binomial") {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::uint32_t n : {8U, 16U}) {
      CAPTURE(k);
      CAPTURE(n);
      const auto t = full_torus(k, n);
      const auto bv = homology(t);
      CHECK(bv.ranks == binomials(k));
      CHECK(bv.torsion.empty());
      CHECK(audit(t, bv).ok());
      CHECK(homology(t, HomologyMode::rank_only).ranks == bv.ranks);
    }
  }
  const auto t4 = full_torus(4, 8);
  CHECK(homology(t4, HomologyMode::rank_only).ranks == binomials(4));
}

TEST_CASE("cell budget is enforced") {
  CHECK(test::error_code([] { (void)full_torus(3, 16, 1000); }) == "cell_budget_exceeded");
  CHECK(test::error_kind([] { (void)full_torus(3, 16, 1000); }) == ErrorKind::resource);
}

TEST_CASE("height range on a cube contains sampled heights") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto link = arm::normalize(test::arm("3,2,2,1")).linkage;
  const auto l = link.lengths_as_double();
  for (std::uint32_t n : {8U, 12U, 24U}) {
    for (int trial = 0; trial < 40; ++trial) {
      Cube cube{std::vector<std::uint32_t>(4), static_cast<std::uint32_t>(rng() % 16)};
      for (auto& b : cube.base) b = static_cast<std::uint32_t>(rng() % n);
      const auto range = s2_range_on_cube(link, cube, n);
      CHECK(range.lo <= range.hi);
      for (int s = 0; s < 1000; ++s) {
        double y = 0;
        for (std::size_t i = 0; i < 4; ++i) {
          const double step = ((cube.extent >> i) & 1U) ? unit(rng) : 0.0;
          y += l[i] * std::sin(2 * std::numbers::pi * (cube.base[i] + step) / n);
        }
        CHECK(y >= range.lo - 1e-12);
        CHECK(y <= range.hi + 1e-12);
      }
    }
  }
}

TEST_CASE("thickened level sets of the two-bar arm") {
  const auto link = test::arm("1/2,1/2");
  const auto regular = build_thickened_complex(link, Rational(1, 2), 32);
  CHECK(regular.grid.delta == Rational(1, 4));
  CHECK(regular.contained);
  const auto bv = homology(regular.complex);
  CHECK(bv.ranks == test::ranks({1, 1, 0}));
  CHECK(audit(regular.complex, bv).ok());

  const auto critical = build_thickened_complex(link, Rational(0), 32);
  const auto bc = homology(critical.complex);
  CHECK(bc.ranks == test::ranks({1, 3, 0}));
  CHECK(bc.torsion.empty());
  CHECK(audit(critical.complex, bc).ok());
}

TEST_CASE("boundary of a two-torus grid squares to zero") {
  const auto t = full_torus(2, 8);
  const auto d1 = boundary_matrix(t, 1);
  const auto d2 = boundary_matrix(t, 2);
  CHECK(d1.rows == t.cell_count(0));
  CHECK(d2.cols == t.cell_count(2));
  CHECK(snf::multiply(d1, d2).nonzeros() == 0);
}

TEST_CASE("auto delta and explicit delta") {
  const auto spec = arm::spectrum(test::arm("1/2,1/2"));
  CHECK(auto_delta(spec, Rational(0)) == Rational(1, 2));
  CHECK(auto_delta(spec, Rational(1, 2)) == Rational(1, 4));
  CHECK(test::error_code([] { (void)build_thickened_complex(test::arm("1/2,1/2"), Rational(1, 2), 16, Rational(0)); }) ==
        "bad_delta");
}

TEST_CASE("oracle agrees with the closed form for three equal bars") {
  const auto r = stabilized_oracle(test::arm("1/3,1/3,1/3"), Rational(0), 24);
  CHECK(r.stable);
  CHECK(r.coarse.betti.ranks == test::ranks({1, 6, 1, 0}));
  CHECK(r.fine.n == 48);
}

TEST_CASE("run observer sees every complex") {
  int seen = 0;
  bool all_ok = true;
  set_run_observer([&](const CubicalComplex& c, const OracleRun& run) {
    ++seen;
    all_ok = all_ok && audit(c, run.betti).ok();
  });
  (void)stabilized_oracle(test::arm("1/2,1/2"), Rational(1, 2), 16);
  set_run_observer({});
  CHECK(seen == 2);
  CHECK(all_ok);
}

TEST_CASE("four-torus at the finer grid") {
  const auto t = full_torus(4, 16);
  const auto bv = homology(t);
  CHECK(bv.ranks == binomials(4));
  CHECK(bv.torsion.empty());
}
