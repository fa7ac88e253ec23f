#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkhom/arm.hpp"
#include "linkhom/betti.hpp"
#include "linkhom/line.hpp"
#include "linkhom/rational.hpp"

namespace linkhom::curve {

using arm::Point;

struct Tolerances {
  double end = 1e-6;   // endpoint distance from the unit circle
  double geo = 1e-9;   // vertex/circle coincidence, origin clearance
  double tan = 1e-7;   // normalized discriminant below which a crossing is tangential
};

/// Embedded interval in the plane given as a polyline (at least two points).
struct PlanarCurve {
  std::vector<Point> points;

  PlanarCurve scaled(double factor) const;
  PlanarCurve reversed() const;
};

enum class Direction { inward, outward };

struct Crossing {
  std::size_t segment_index = 0;
  double t = 0;  // in [0, 1) on the segment, or exactly 1 on the final segment
  Rational radius;
  Direction direction = Direction::inward;
};

/// mu per critical radius; mu_J is looked up through |r_J|.
struct MultiplierTable {
  std::map<Rational, std::int64_t> mu;

  std::int64_t of(const arm::CriticalSpectrum& spec, arm::SubsetMask mask) const;
};

/// Checks the hypotheses on a curve given in normalized units (unit reach):
/// endpoints on the unit circle, interior strictly inside the unit disk,
/// a simple polyline, and origin clearance whenever some r_J = 0. Throws
/// Error{hypothesis, ...} ("endpoint_off_circle", "curve_exits_disk",
/// "self_intersection", "origin_tangency") or Error{input, ...} for
/// malformed polylines.
void validate_curve(const PlanarCurve& curve, const arm::CriticalSpectrum& spec,
                    const Tolerances& tol = {});

/// Transverse crossings of the polyline with the circle |p| = radius, in
/// curve order. A curve endpoint on the circle counts once. Throws
/// Error{hypothesis, "tangential_intersection"} or
/// Error{hypothesis, "crossing_at_vertex"}.
std::vector<Crossing> circle_crossings(const PlanarCurve& curve, const Rational& radius,
                                       const Tolerances& tol = {});

/// mu(rho) = crossings / 2 for every positive critical radius, mu(0) = 0.
MultiplierTable multipliers(const PlanarCurve& curve, const arm::CriticalSpectrum& spec,
                            const Tolerances& tol = {});

struct CurveResult {
  line::AbCounts ab;  // a_j = sum mu_J over r_J < 0, b_j over r_J > 0
  BettiVector betti;
  MultiplierTable multipliers;
};

/// Homology of the motion space with the end vertex constrained to `curve`,
/// given in the same units as the linkage lengths.
CurveResult betti_curve(const arm::Linkage& link, const PlanarCurve& curve, const Tolerances& tol = {});

/// Same computation for an already normalized linkage and a curve in
/// normalized units.
CurveResult betti_curve_normalized(const arm::CriticalSpectrum& spec, const PlanarCurve& curve,
                                   const Tolerances& tol = {});

/// Horizontal chord y = h between the two points at unit distance.
PlanarCurve horizontal_chord(double h);

struct ConsistencyReport {
  bool skipped = false;
  std::string reason;  // why the check was skipped
  BettiVector line;
  std::optional<BettiVector> curve;
  bool equal = false;
};

/// Runs the curve formula on the chord y = h and compares with betti_line.
/// Skipped when |h| >= 1 or some critical radius equals |h| (tangency).
ConsistencyReport line_curve_consistency(const arm::Linkage& link, const Rational& h,
                                         const Tolerances& tol = {});

}  // namespace linkhom::curve
