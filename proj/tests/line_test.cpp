#include <algorithm>
#include <numeric>
#include <random>

#include <doctest.h>

#include "linkhom/line.hpp"
#include "linkhom/verify.hpp"
#include "support.hpp"

using namespace linkhom;

namespace {

std::vector<Rational> probe_heights(const arm::CriticalSpectrum& spec) {
  const auto values = spec.critical_values();
  std::vector<Rational> hs = {Rational(-3, 2), Rational(3, 2)};
  for (std::size_t i = 0; i < values.size(); ++i) {
    hs.push_back(values[i]);
    if (i + 1 < values.size()) hs.push_back((values[i] + values[i + 1]) / Rational(2));
  }
  return hs;
}

}  // namespace

TEST_CASE("equal bars at the top of the workspace give a point") {
  for (int k = 2; k <= 6; ++k) {
    std::vector<Rational> lengths(k, Rational(1, k));
    const arm::Linkage link(lengths);
    for (const Rational& h : {Rational(1), Rational(-1)}) {
      auto expected = std::vector<std::int64_t>(k, 0);
      expected[0] = 1;
      CHECK(line::betti_line(link, h).ranks == expected);
    }
  }
}

TEST_CASE("two bars") {
  const auto link = test::arm("1/2,1/2");
  CHECK(line::betti_line(link, Rational(1, 2)).ranks == test::ranks({1, 1}));
  // critical level: figure-eight shaped, not a manifold
  CHECK(line::betti_line(link, Rational(0)).ranks == test::ranks({1, 3}));
  CHECK(line::betti_line(link, Rational(2)).ranks == test::ranks({0, 0}));
}

TEST_CASE("three equal bars at height zero is a genus three surface") {
  const auto bv = line::betti_line(test::arm("1/3,1/3,1/3"), Rational(0));
  CHECK(bv.ranks == test::ranks({1, 6, 1}));
  CHECK(bv.torsion.empty());
  CHECK(euler_characteristic(bv) == -4);
}

TEST_CASE("single bar") {
  // the level set is two points for |h| < 1
  CHECK(line::betti_line(test::arm("1"), Rational(1, 2)).ranks == test::ranks({2}));
  CHECK(line::betti_line(test::arm("1"), Rational(1)).ranks == test::ranks({1}));
  CHECK(line::betti_line(test::arm("1"), Rational(-1, 2)).ranks == test::ranks({2}));
}

TEST_CASE("a and b counts for three equal bars") {
  const auto spec = arm::spectrum(arm::normalize(test::arm("1,1,1")).linkage);
  const auto ab = line::count_ab(spec, Rational(0));
  CHECK(ab.a == std::vector<std::int64_t>{1, 3, 0, 0});
  CHECK(ab.b == std::vector<std::int64_t>{0, 0, 3, 1});
}

TEST_CASE("uv families agree with direct counting") {
  const auto spec = arm::spectrum(test::arm("1/2,1/2"));
  const auto fam = line::uv_families(spec, Rational(1, 2));
  CHECK(fam.U[0].size() == 1);
  CHECK(fam.U[1].size() == 2);
  CHECK(fam.V[0].size() == 1);
  CHECK(fam.V[1].empty());
  CHECK(line::ab_from_families(fam, 2) == line::count_ab(spec, Rational(1, 2)));
}

TEST_CASE("properties on random arms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t k = 1 + rng() % 6;
    const auto inst = verify::random_instance(rng, k);
    const auto norm = arm::normalize(inst.link);
    const auto spec = arm::spectrum(norm.linkage);
    for (const auto& h : probe_heights(spec)) {
      CAPTURE(h.to_string());
      const auto ab = line::count_ab(spec, h);
      CHECK(line::ab_from_families(line::uv_families(spec, h), k) == ab);
      const auto bv = line::betti_from_ab(ab);
      REQUIRE(bv.ranks.size() == k);
      if (arm::is_regular_height(spec, h)) {
        auto reversed = bv.ranks;
        std::reverse(reversed.begin(), reversed.end());
        CHECK(bv.ranks == reversed);
      }
      const Rational original_h = h / norm.scale;
      CHECK(line::betti_line(inst.link, original_h) == line::betti_line(inst.link, -original_h));
    }
    // permutation and scaling
    auto lengths = inst.link.lengths();
    std::shuffle(lengths.begin(), lengths.end(), rng);
    const Rational c(1 + static_cast<long>(rng() % 5), 1 + rng() % 5);
    for (auto& l : lengths) l *= c;
    CHECK(line::betti_line(arm::Linkage(lengths), inst.h * c) == line::betti_line(inst.link, inst.h));
  }
}

TEST_CASE("outside the workspace the level set is empty") {
  const auto bv = line::betti_line(test::arm("1,2,3"), Rational(7));
  CHECK(std::all_of(bv.ranks.begin(), bv.ranks.end(), [](auto r) { return r == 0; }));
}
