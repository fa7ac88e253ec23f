#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "linkhom/curve.hpp"

namespace test {

// Polyline whose polar angle increases strictly along it, so it is simple.
// Starts and ends on the unit circle; interior vertices stay strictly inside
// the disk and every segment turns by less than pi, keeping it off the origin.
inline linkhom::curve::PlanarCurve random_polar_curve(std::mt19937_64& rng) {
  using std::numbers::pi;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t interior = 1 + rng() % 8;
  for (;;) {
    const double start = 2 * pi * unit(rng);
    const double sweep = pi * (0.3 + 1.5 * unit(rng));
    std::vector<double> angles{0.0, sweep};
    for (std::size_t i = 0; i < interior; ++i) angles.push_back(sweep * (0.02 + 0.96 * unit(rng)));
    std::sort(angles.begin(), angles.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
      const double gap = angles[i + 1] - angles[i];
      if (gap < 1e-3 || gap > 0.9 * pi) ok = false;
    }
    if (!ok) continue;
    linkhom::curve::PlanarCurve c;
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const bool end = i == 0 || i + 1 == angles.size();
      const double rho = end ? 1.0 : 0.02 + 0.95 * unit(rng);
      c.points.push_back({rho * std::cos(start + angles[i]), rho * std::sin(start + angles[i])});
    }
    return c;
  }
}

// Every segment split at its midpoint.
inline linkhom::curve::PlanarCurve refined(const linkhom::curve::PlanarCurve& c) {
  linkhom::curve::PlanarCurve out;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
    out.points.push_back(c.points[i]);
    out.points.push_back({(c.points[i].x + c.points[i + 1].x) / 2, (c.points[i].y + c.points[i + 1].y) / 2});
  }
  out.points.push_back(c.points.back());
  return out;
}

}  // namespace test
