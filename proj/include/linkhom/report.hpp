#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "linkhom/arm.hpp"
#include "linkhom/curve.hpp"
#include "linkhom/oracle.hpp"
#include "linkhom/rational.hpp"

namespace linkhom::report {

// Insertion-ordered so reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

Json rational(const Rational& r);
Json ranks(const BettiVector& bv);
Json torsion(const BettiVector& bv);

/// ["1/3", "0.5", ...] -> Linkage. Throws Error{input, "bad_linkage_json"}.
arm::Linkage parse_linkage(const nlohmann::json& j);
/// {"points": [[x, y], ...]} -> PlanarCurve. Throws Error{input, "bad_curve_json"}.
curve::PlanarCurve parse_curve(const nlohmann::json& j);
curve::PlanarCurve read_curve_file(const std::string& path);
Json curve_json(const curve::PlanarCurve& c);

Json spectrum_report(const arm::Linkage& link, std::size_t cap = arm::kDefaultEnumerationCap);
Json line_report(const arm::Linkage& link, const Rational& h);
Json curve_report(const arm::Linkage& link, const curve::PlanarCurve& c, const curve::Tolerances& tol);
Json oracle_report(const oracle::OracleReport& r);

/// `count` random points of the level set y = h (angles in radians, each
/// re-checked through end_position), for plotting.
Json level_set_samples(const arm::Linkage& link, const Rational& h, std::size_t count, std::uint64_t seed);

}  // namespace linkhom::report
