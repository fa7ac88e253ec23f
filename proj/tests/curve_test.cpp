#include <cmath>
#include <random>

#include <doctest.h>

#include "curves.hpp"
#include "linkhom/curve.hpp"
#include "linkhom/verify.hpp"
#include "support.hpp"

using namespace linkhom;
using curve::PlanarCurve;

namespace {

const auto kThree = test::arm("1/3,1/3,1/3");

std::string curve_error(const arm::Linkage& link, const PlanarCurve& c) {
  return test::error_code([&] { (void)curve::betti_curve(link, c); });
}

}  // namespace

TEST_CASE("chord at height one half") {
  const double s = std::sqrt(3.0) / 2;
  const PlanarCurve chord{{{-s, 0.5}, {s, 0.5}}};
  const auto r = curve::betti_curve(test::arm("1/2,1/2"), chord);
  CHECK(r.betti.ranks == test::ranks({1, 1}));
  CHECK(r.betti.torsion.empty());
  CHECK(curve::betti_curve(test::arm("1/2,1/2"), curve::horizontal_chord(0.5)).betti == r.betti);
}

TEST_CASE("chord through the origin is rejected when some r_J vanishes") {
  const auto link = test::arm("1/2,1/2");
  CHECK(curve_error(link, curve::horizontal_chord(0.0)) == "origin_tangency");
  CHECK(test::error_kind([&] { (void)curve::betti_curve(link, curve::horizontal_chord(0.0)); }) ==
        ErrorKind::hypothesis);
  // no zero radius for three equal bars: the same chord is fine
  CHECK(curve::betti_curve(kThree, curve::horizontal_chord(0.0)).betti.ranks == test::ranks({1, 6, 1}));
}

TEST_CASE("double dip through the inner circle") {
  const auto r = curve::betti_curve(kThree, verify::double_dip_curve());
  CHECK(r.betti.ranks == test::ranks({1, 12, 1}));
  CHECK(r.multipliers.mu.at(Rational(1, 3)) == 2);
  CHECK(r.multipliers.mu.at(Rational(1)) == 1);
  const auto crossings = curve::circle_crossings(verify::double_dip_curve(), Rational(1, 3));
  CHECK(crossings.size() == 4);
}

TEST_CASE("curve given in the linkage's own units is rescaled") {
  const auto big = test::arm("1,1,1");
  const auto scaled = verify::double_dip_curve().scaled(3.0);
  CHECK(curve::betti_curve(big, scaled).betti.ranks == test::ranks({1, 12, 1}));
}

TEST_CASE("hypothesis violations") {
  CHECK(curve_error(kThree, PlanarCurve{{{-0.9, 0}, {1, 0}}}) == "endpoint_off_circle");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {0, 1.5}, {1, 0}}}) == "curve_exits_disk");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {0.5, 0.3}, {0.5, -0.3}, {-0.3, 0.3}, {0, 1}}}) ==
        "self_intersection");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {-0.5, 1.0 / 3}, {0.5, 1.0 / 3}, {1, 0}}}) ==
        "tangential_intersection");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {0, 1.0 / 3}, {1, 0}}}) == "crossing_at_vertex");
}

TEST_CASE("malformed polylines") {
  CHECK(curve_error(kThree, PlanarCurve{{{1, 0}}}) == "curve_too_short");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {-1, 0}, {1, 0}}}) == "repeated_point");
  CHECK(curve_error(kThree, PlanarCurve{{{-1, 0}, {NAN, 0}, {1, 0}}}) == "non_finite_point");
  CHECK(test::error_kind([] { (void)curve::betti_curve(kThree, PlanarCurve{{{1, 0}}}); }) == ErrorKind::input);
}

TEST_CASE("invariants on random polar-monotone curves") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 60) {
    const auto inst = verify::random_instance(rng, 1 + rng() % 5);
    const auto spec = arm::spectrum(arm::normalize(inst.link).linkage);
    const auto c = test::random_polar_curve(rng);
    curve::CurveResult r;
    try {
      r = curve::betti_curve_normalized(spec, c);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::hypothesis) continue;  // grazing contact, draw again
      throw;
    }
    ++checked;
    const std::size_t k = spec.k();
    for (std::size_t j = 0; j <= k; ++j) CHECK(r.ab.a[j] == r.ab.b[k - j]);
    CHECK(curve::betti_curve_normalized(spec, c.reversed()).betti == r.betti);
    CHECK(curve::betti_curve_normalized(spec, test::refined(c)).betti == r.betti);
    for (const auto& entry : spec.radii()) {
      if (entry.radius == Rational(0)) continue;
      const auto xs = curve::circle_crossings(c, entry.radius);
      CHECK(xs.size() % 2 == 0);
      if (entry.radius == Rational(1)) continue;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(xs[i].direction == (i % 2 == 0 ? curve::Direction::inward : curve::Direction::outward));
      }
    }
  }
}

TEST_CASE("line and curve paths agree on horizontal chords") {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto inst = verify::random_instance(rng, 1 + rng() % 5);
    const auto rep = curve::line_curve_consistency(inst.link, inst.h);
    if (rep.skipped) continue;
    ++compared;
    CHECK(rep.equal);
  }
  CHECK(compared > 20);

  const auto crit = curve::line_curve_consistency(test::arm("1/2,1/2"), Rational(0));
  CHECK(crit.skipped);
  CHECK(crit.reason.find("tangency") != std::string::npos);
}
