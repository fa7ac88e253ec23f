#include "linkhom/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "linkhom/error.hpp"

namespace linkhom::curve {

using arm::CriticalSpectrum;
using arm::SubsetMask;

namespace {

double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
double norm(Point a) { return std::hypot(a.x, a.y); }

double point_segment_distance(Point p, Point a, Point b) {
  const Point d = sub(b, a);
  const double len2 = dot(d, d);
  double t = len2 > 0 ? dot(sub(p, a), d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(sub(p, {a.x + t * d.x, a.y + t * d.y}));
}

double segment_distance(Point a, Point b, Point c, Point d) {
  const double o1 = cross(sub(b, a), sub(c, a));
  const double o2 = cross(sub(b, a), sub(d, a));
  const double o3 = cross(sub(d, c), sub(a, c));
  const double o4 = cross(sub(d, c), sub(b, c));
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return 0.0;
  }
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

[[noreturn]] void hypothesis(const char* code, const std::string& message) {
  throw Error(ErrorKind::hypothesis, code, message);
}

std::string fmt_point(Point p) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.9g, %.9g)", p.x, p.y);
  return buf;
}

}  // namespace

PlanarCurve PlanarCurve::scaled(double factor) const {
  PlanarCurve out{points};
  for (auto& p : out.points) {
    p.x *= factor;
    p.y *= factor;
  }
  return out;
}

PlanarCurve PlanarCurve::reversed() const {
  return PlanarCurve{std::vector<Point>(points.rbegin(), points.rend())};
}

std::int64_t MultiplierTable::of(const CriticalSpectrum& spec, SubsetMask mask) const {
  const auto it = mu.find(spec.r(mask).abs());
  return it == mu.end() ? 0 : it->second;
}

void validate_curve(const PlanarCurve& curve, const CriticalSpectrum& spec, const Tolerances& tol) {
  const auto& pts = curve.points;
  if (pts.size() < 2) throw Error(ErrorKind::input, "curve_too_short", "a curve needs at least two points");
  for (const auto& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::input, "non_finite_point", "curve contains a non-finite coordinate");
    }
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (norm(sub(pts[i + 1], pts[i])) <= tol.geo) {
      throw Error(ErrorKind::input, "repeated_point",
                  "consecutive curve points " + std::to_string(i) + " and " + std::to_string(i + 1) + " coincide");
    }
  }

  for (std::size_t i : {std::size_t{0}, pts.size() - 1}) {
    if (std::abs(norm(pts[i]) - 1.0) > tol.end) {
      hypothesis("endpoint_off_circle", "endpoint off unit circle: " + fmt_point(pts[i]) + " has radius " +
                                            std::to_string(norm(pts[i])) + " after normalization");
    }
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (norm(pts[i]) >= 1.0 - tol.end) {
      hypothesis("curve_exits_disk", "curve exits reachable disk at vertex " + std::to_string(i) + " " +
                                         fmt_point(pts[i]));
    }
  }

  const std::size_t segments = pts.size() - 1;
  for (std::size_t i = 0; i < segments; ++i) {
    // Adjacent segments share a vertex; they only fail by folding back.
    if (i + 1 < segments) {
      const Point u = sub(pts[i + 1], pts[i]);
      const Point v = sub(pts[i + 2], pts[i + 1]);
      if (std::abs(cross(u, v)) <= tol.geo * norm(u) * norm(v) && dot(u, v) < 0) {
        hypothesis("self_intersection", "polyline folds back at vertex " + std::to_string(i + 1));
      }
    }
    for (std::size_t j = i + 2; j < segments; ++j) {
      if (segment_distance(pts[i], pts[i + 1], pts[j], pts[j + 1]) <= tol.geo) {
        hypothesis("self_intersection", "polyline is not simple: segments " + std::to_string(i) + " and " +
                                            std::to_string(j) + " meet");
      }
    }
  }

  const auto& radii = spec.radii();
  if (!radii.empty() && radii.front().radius.sign() == 0) {
    for (std::size_t i = 0; i < segments; ++i) {
      if (point_segment_distance({0, 0}, pts[i], pts[i + 1]) <= tol.geo) {
        hypothesis("origin_tangency",
                   "origin-tangency with r_J = 0: curve passes through origin while r_J = 0 exists");
      }
    }
  }
}

std::vector<Crossing> circle_crossings(const PlanarCurve& curve, const Rational& radius, const Tolerances& tol) {
  const auto& pts = curve.points;
  if (pts.size() < 2) throw Error(ErrorKind::input, "curve_too_short", "a curve needs at least two points");
  if (radius.sign() <= 0) throw Error(ErrorKind::input, "bad_radius", "crossing radius must be positive");
  const double rho = radius.to_double();
  const std::size_t last = pts.size() - 2;

  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (std::abs(norm(pts[i]) - rho) <= tol.geo) {
      hypothesis("crossing_at_vertex", "circle of radius " + radius.to_string() + " passes through vertex " +
                                           std::to_string(i) + "; refine the polyline");
    }
  }
  const bool start_contact = std::abs(norm(pts.front()) - rho) <= tol.end;
  const bool end_contact = std::abs(norm(pts.back()) - rho) <= tol.end;

  std::vector<Crossing> out;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point p = pts[i];
    const Point d = sub(pts[i + 1], p);
    const double a = dot(d, d);
    const double b = 2 * dot(p, d);
    const double c = dot(p, p) - rho * rho;
    const double seg_len = std::sqrt(a);

    if (i == 0 && start_contact) {
      out.push_back({0, 0.0, radius, b < 0 ? Direction::inward : Direction::outward});
    }

    const double disc = b * b - 4 * a * c;
    // (rho^2 - dist(origin, line)^2) / rho^2
    const double normalized = disc / (4 * a * rho * rho);
    const double t_closest = -b / (2 * a);
    if (std::abs(normalized) <= tol.tan) {
      const bool near_segment = t_closest >= 0 && t_closest <= 1;
      const bool at_contact = (i == 0 && start_contact && t_closest * seg_len <= 2 * tol.end) ||
                              (i == last && end_contact && (1 - t_closest) * seg_len <= 2 * tol.end);
      if (near_segment && !at_contact) {
        hypothesis("tangential_intersection", "tangential intersection with circle of radius " +
                                                  radius.to_string() + " on segment " + std::to_string(i));
      }
      if (i == last && end_contact) {
        out.push_back({i, 1.0, radius, 2 * a + b > 0 ? Direction::outward : Direction::inward});
      }
      continue;
    }
    if (normalized > 0) {
      const double sq = std::sqrt(disc);
      const double q = -0.5 * (b + std::copysign(sq, b));
      double t1 = q / a;
      double t2 = q != 0 ? c / q : t1;
      if (t1 > t2) std::swap(t1, t2);
      for (double t : {t1, t2}) {
        const bool in_range = t >= 0 && (t < 1 || (i == last && t <= 1));
        if (!in_range) continue;
        if (i == 0 && start_contact && t * seg_len <= 2 * tol.end) continue;
        if (i == last && end_contact && (1 - t) * seg_len <= 2 * tol.end) continue;
        out.push_back({i, t, radius, 2 * a * t + b < 0 ? Direction::inward : Direction::outward});
      }
    }
    if (i == last && end_contact) {
      out.push_back({i, 1.0, radius, 2 * a + b > 0 ? Direction::outward : Direction::inward});
    }
  }
  return out;
}

MultiplierTable multipliers(const PlanarCurve& curve, const CriticalSpectrum& spec, const Tolerances& tol) {
  MultiplierTable table;
  for (const auto& entry : spec.radii()) {
    if (entry.radius.sign() == 0) {
      table.mu[entry.radius] = 0;
      continue;
    }
    const auto count = static_cast<std::int64_t>(circle_crossings(curve, entry.radius, tol).size());
    if (count % 2 != 0) {
      hypothesis("odd_crossing_count", "odd crossing count " + std::to_string(count) + " for radius " +
                                           entry.radius.to_string());
    }
    table.mu[entry.radius] = count / 2;
  }
  return table;
}

CurveResult betti_curve_normalized(const CriticalSpectrum& spec, const PlanarCurve& curve, const Tolerances& tol) {
  validate_curve(curve, spec, tol);
  CurveResult result;
  result.multipliers = multipliers(curve, spec, tol);

  const std::size_t k = spec.k();
  result.ab.a.assign(k + 1, 0);
  result.ab.b.assign(k + 1, 0);
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    const SubsetMask mask(m);
    const std::int64_t num = spec.numerator(mask);
    if (num == 0) continue;
    const auto j = static_cast<std::size_t>(mask.cardinality());
    const std::int64_t mu = result.multipliers.of(spec, mask);
    (num < 0 ? result.ab.a : result.ab.b)[j] += mu;
  }
  result.betti = line::betti_from_ab(result.ab);
  return result;
}

CurveResult betti_curve(const arm::Linkage& link, const PlanarCurve& curve, const Tolerances& tol) {
  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage);
  return betti_curve_normalized(spec, curve.scaled(normalized.scale.to_double()), tol);
}

PlanarCurve horizontal_chord(double h) {
  const double half = std::sqrt(std::max(0.0, 1.0 - h * h));
  return PlanarCurve{{{-half, h}, {half, h}}};
}

ConsistencyReport line_curve_consistency(const arm::Linkage& link, const Rational& h, const Tolerances& tol) {
  ConsistencyReport report;
  report.line = line::betti_line(link, h);

  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage);
  const Rational level = h * normalized.scale;
  if (level.abs() >= Rational(1)) {
    report.skipped = true;
    report.reason = "no chord: |h| >= total length";
    return report;
  }
  for (const auto& entry : spec.radii()) {
    if (entry.radius == level.abs()) {
      report.skipped = true;
      report.reason = "tangency: |r_J| = |h| = " + entry.radius.to_string();
      if (entry.radius.sign() == 0) report.reason += " and the line passes through the origin";
      return report;
    }
  }
  report.curve = betti_curve_normalized(spec, horizontal_chord(level.to_double()), tol).betti;
  report.equal = same_homology(report.line, *report.curve);
  return report;
}

}  // namespace linkhom::curve
