#include "linkhom/report.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "linkhom/error.hpp"
#include "linkhom/line.hpp"

namespace linkhom::report {

namespace {

Json int_array(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json normalized_lengths(const arm::Normalized& n) {
  Json out = Json::array();
  for (const auto& l : n.linkage.lengths()) out.push_back(rational(l));
  return out;
}

}  // namespace

Json rational(const Rational& r) { return r.to_string(); }

Json ranks(const BettiVector& bv) { return int_array(bv.ranks); }

Json torsion(const BettiVector& bv) {
  Json out = Json::array();
  for (const auto& t : bv.torsion) {
    Json factors = Json::array();
    for (const auto& f : t.factors) factors.push_back(f.get_str());
    out.push_back(Json{{"degree", t.degree}, {"factors", factors}});
  }
  return out;
}

arm::Linkage parse_linkage(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::input, "bad_linkage_json", "linkage must be a JSON array of strings");
  std::vector<std::string> literals;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorKind::input, "bad_linkage_json", "linkage entries must be strings");
    literals.push_back(e.get<std::string>());
  }
  return arm::Linkage::parse(literals);
}

curve::PlanarCurve parse_curve(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw Error(ErrorKind::input, "bad_curve_json", "curve must be an object with a \"points\" array");
  }
  curve::PlanarCurve c;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error(ErrorKind::input, "bad_curve_json", "each point must be a [x, y] pair of numbers");
    }
    c.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return c;
}

curve::PlanarCurve read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::input, "unreadable_file", "cannot open curve file " + path);
  try {
    return parse_curve(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::input, "bad_curve_json", std::string("curve file is not valid JSON: ") + e.what());
  }
}

Json curve_json(const curve::PlanarCurve& c) {
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(Json::array({p.x, p.y}));
  return Json{{"points", pts}};
}

Json spectrum_report(const arm::Linkage& link, std::size_t cap) {
  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage, cap);
  Json order = Json::array();
  for (auto i : normalized.order) order.push_back(i + 1);
  Json configs = Json::array();
  for (std::uint32_t m = 0; m < spec.size(); ++m) {
    const auto c = spec.config(arm::SubsetMask(m));
    configs.push_back(Json{{"mask", c.mask.to_string(spec.k())}, {"r", rational(c.r)}, {"index", c.index}});
  }
  Json radii = Json::array();
  for (const auto& entry : spec.radii()) {
    Json masks = Json::array();
    for (auto m : entry.masks) masks.push_back(m.to_string(spec.k()));
    radii.push_back(Json{{"radius", rational(entry.radius)}, {"masks", masks}});
  }
  return Json{{"k", spec.k()},
              {"scale", rational(normalized.scale)},
              {"normalized_lengths", normalized_lengths(normalized)},
              {"order", order},
              {"configs", configs},
              {"radii", radii}};
}

Json line_report(const arm::Linkage& link, const Rational& h) {
  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage);
  const Rational level = h * normalized.scale;
  const auto ab = line::count_ab(spec, level);
  const auto bv = line::betti_from_ab(ab);
  return Json{{"k", spec.k()},
              {"h", rational(h)},
              {"scale", rational(normalized.scale)},
              {"normalized_lengths", normalized_lengths(normalized)},
              {"a", int_array(ab.a)},
              {"b", int_array(ab.b)},
              {"betti", ranks(bv)},
              {"euler", euler_characteristic(bv)},
              {"regular", arm::is_regular_height(spec, level)}};
}

Json curve_report(const arm::Linkage& link, const curve::PlanarCurve& c, const curve::Tolerances& tol) {
  const auto normalized = arm::normalize(link);
  const auto spec = arm::spectrum(normalized.linkage);
  const auto scaled = c.scaled(normalized.scale.to_double());
  const auto result = curve::betti_curve_normalized(spec, scaled, tol);

  Json mult = Json::array();
  Json crossings = Json::array();
  for (const auto& [radius, mu] : result.multipliers.mu) {
    mult.push_back(Json{{"radius", rational(radius)}, {"mu", mu}});
    if (radius.sign() == 0) continue;
    for (const auto& x : curve::circle_crossings(scaled, radius, tol)) {
      crossings.push_back(Json{{"radius", rational(radius)},
                               {"segment", x.segment_index},
                               {"t", x.t},
                               {"direction", x.direction == curve::Direction::inward ? "inward" : "outward"}});
    }
  }
  return Json{{"k", spec.k()},
              {"scale", rational(normalized.scale)},
              {"normalized_lengths", normalized_lengths(normalized)},
              {"multipliers", mult},
              {"crossings", crossings},
              {"a", int_array(result.ab.a)},
              {"b", int_array(result.ab.b)},
              {"betti", ranks(result.betti)},
              {"euler", euler_characteristic(result.betti)}};
}

Json oracle_report(const oracle::OracleReport& r) {
  Json cells = Json::array();
  for (auto c : r.coarse.cells_per_dim) cells.push_back(c);
  Json fine_cells = Json::array();
  for (auto c : r.fine.cells_per_dim) fine_cells.push_back(c);
  return Json{{"n", r.coarse.n},
              {"delta", rational(r.coarse.delta)},
              {"cells_per_dim", cells},
              {"betti", ranks(r.coarse.betti)},
              {"torsion", torsion(r.coarse.betti)},
              {"stable", r.stable},
              {"contained", r.coarse.contained},
              {"refined", Json{{"n", r.fine.n},
                               {"cells_per_dim", fine_cells},
                               {"betti", ranks(r.fine.betti)},
                               {"torsion", torsion(r.fine.betti)},
                               {"contained", r.fine.contained}}}};
}

Json level_set_samples(const arm::Linkage& link, const Rational& h, std::size_t count, std::uint64_t seed) {
  const auto lengths = link.lengths_as_double();
  const double target = h.to_double();
  const std::size_t k = lengths.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::bernoulli_distribution branch(0.5);

  Json out = Json::array();
  const std::size_t max_attempts = 1000 * count + 1000;
  for (std::size_t attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
    std::vector<double> theta(k);
    double partial = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      theta[i] = angle(rng);
      partial += lengths[i] * std::sin(theta[i]);
    }
    const double s = (target - partial) / lengths[k - 1];
    if (std::abs(s) > 1) continue;
    theta[k - 1] = branch(rng) ? std::asin(s) : std::numbers::pi - std::asin(s);
    const auto end = arm::end_position(link, theta);
    out.push_back(Json{{"angles", theta}, {"end", Json::array({end.x, end.y})}});
  }
  return out;
}

}  // namespace linkhom::report
