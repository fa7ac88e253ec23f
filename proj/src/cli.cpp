#include "linkhom/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linkhom/error.hpp"
#include "linkhom/oracle.hpp"
#include "linkhom/report.hpp"
#include "linkhom/verify.hpp"

namespace linkhom::cli {

namespace {

using report::Json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::input: return kInputError;
    case ErrorKind::hypothesis: return kHypothesisViolation;
    case ErrorKind::resource: return kResourceRefusal;
    case ErrorKind::internal: return kInternal;
  }
  return kInternal;
}

Json error_json(const std::string& code, const std::string& message, int exit_code) {
  return Json{{"error", Json{{"code", code}, {"message", message}, {"exit_code", exit_code}}}};
}

arm::Linkage parse_lengths(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw Error(ErrorKind::input, "missing_lengths", "--lengths is required");
  if (text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::input, "bad_linkage_json", std::string("--lengths is not valid JSON: ") + e.what());
    }
    return report::parse_linkage(j);
  }
  return arm::Linkage::parse_list(text);
}

Rational require_h(const RunConfig& config) {
  if (!config.h) throw Error(ErrorKind::input, "missing_h", "--h is required for '" + config.command + "'");
  return Rational::parse(*config.h);
}

std::string render_table(const Json& j) {
  std::ostringstream os;
  if (j.contains("cases")) {
    for (const auto& c : j["cases"]) {
      os << c["status"].get<std::string>() << "\t" << c["name"].get<std::string>() << "\tformula="
         << c["betti_formula"].dump() << "\toracle=" << c["betti_oracle"].dump();
      if (!c["notes"].get<std::string>().empty()) os << "\t" << c["notes"].get<std::string>();
      os << "\n";
    }
    os << "passed=" << j["passed"] << " failed=" << j["failed"] << " inconclusive=" << j["inconclusive"] << "\n";
    return os.str();
  }
  for (const auto& [key, value] : j.items()) os << key << "\t" << value.dump() << "\n";
  return os.str();
}

void emit(const RunConfig& config, const Json& j, std::ostream& out) {
  const std::string text = config.format == "table" ? render_table(j) : j.dump(2) + "\n";
  if (config.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw Error(ErrorKind::input, "unwritable_output", "cannot write " + config.output);
  file << text;
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.format != "json" && config.format != "table") {
    throw Error(ErrorKind::input, "bad_format", "--format must be json or table");
  }
  if (!(config.tol.end > 0 && config.tol.geo > 0 && config.tol.tan > 0)) {
    throw Error(ErrorKind::input, "bad_tolerance", "tolerances must be positive");
  }

  if (config.command == "verify") {
    verify::VerifyOptions options;
    options.grid_n = config.grid_n;
    options.sweep_count = config.sweep_count;
    options.sweep_k = config.sweep_k;
    options.seed = config.seed;
    options.cell_budget = config.cell_budget;
    options.tol = config.tol;
    const auto result = verify::verify_suite(options);
    emit(config, verify::to_json(result), out);
    return exit_code(result);
  }

  const auto link = parse_lengths(config.lengths);
  if (config.command == "radii") {
    emit(config, report::spectrum_report(link), out);
    return kOk;
  }
  if (config.command == "line") {
    const Rational h = require_h(config);
    auto j = report::line_report(link, h);
    if (config.dump_samples > 0) j["samples"] = report::level_set_samples(link, h, config.dump_samples, config.seed);
    emit(config, j, out);
    return kOk;
  }
  if (config.command == "curve") {
    if (!config.curve_path) throw Error(ErrorKind::input, "missing_curve", "--curve is required for 'curve'");
    emit(config, report::curve_report(link, report::read_curve_file(*config.curve_path), config.tol), out);
    return kOk;
  }
  if (config.command == "oracle") {
    const Rational h = require_h(config);
    std::optional<Rational> delta;
    if (config.delta) delta = Rational::parse(*config.delta);
    const auto r = oracle::stabilized_oracle(link, h, config.grid_n.value_or(16), delta, config.cell_budget);
    emit(config, report::oracle_report(r), out);
    return kOk;
  }
  throw Error(ErrorKind::input, "unknown_command", "unknown command '" + config.command + "'");
}

}  // namespace

int exit_code(const verify::VerifyReport& report) { return report.ok() ? kOk : kDisagreement; }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    err << "linkhom: " << e.what() << "\n";
    out << error_json(e.code(), e.what(), code).dump(2) << "\n";
    return code;
  } catch (const std::exception& e) {
    err << "linkhom: internal error: " << e.what() << "\n";
    out << error_json("internal", e.what(), kInternal).dump(2) << "\n";
    return kInternal;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* budget = std::getenv("LINKHOM_CELL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(budget, &end, 10);
    if (end == budget || *end != '\0' || v == 0) {
      out << error_json("bad_cell_budget", "LINKHOM_CELL_BUDGET must be a positive integer", kInputError).dump(2)
          << "\n";
      return kInputError;
    }
    config.cell_budget = v;
  }

  CLI::App app{"Homology of constrained planar robotic arm motion spaces"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json or table")->capture_default_str();
    sub->add_option("--out", config.output, "output path, - for stdout")->capture_default_str();
  };
  auto add_lengths = [&](CLI::App* sub) {
    sub->add_option("--lengths", config.lengths, "edge lengths: 1/3,1/3,1/3 or [\"1/3\",...]")->required();
  };
  auto add_tolerances = [&](CLI::App* sub) {
    sub->add_option("--tol-end", config.tol.end, "endpoint distance to the unit circle")->capture_default_str();
    sub->add_option("--tol-geo", config.tol.geo, "vertex coincidence / origin clearance")->capture_default_str();
    sub->add_option("--tol-tan", config.tol.tan, "normalized discriminant tangency threshold")
        ->capture_default_str();
  };

  auto* radii = app.add_subcommand("radii", "collinear configurations and critical radii");
  add_lengths(radii);
  add_common(radii);

  auto* line = app.add_subcommand("line", "Betti numbers for the end vertex on y = h");
  add_lengths(line);
  line->add_option("--h", config.h, "height (rational)")->required();
  line->add_option("--dump-samples", config.dump_samples, "also emit this many sample configurations");
  line->add_option("--seed", config.seed, "sampling seed")->capture_default_str();
  add_common(line);

  auto* curve = app.add_subcommand("curve", "Betti numbers for the end vertex on a curve");
  add_lengths(curve);
  curve->add_option("--curve", config.curve_path, "curve JSON file")->required();
  add_tolerances(curve);
  add_common(curve);

  auto* oracle_cmd = app.add_subcommand("oracle", "cubical homology of the thickened level set at n and 2n");
  add_lengths(oracle_cmd);
  oracle_cmd->add_option("--h", config.h, "height (rational)")->required();
  oracle_cmd->add_option("--grid-n", config.grid_n, "subdivisions per circle (>= 8, default 16)");
  oracle_cmd->add_option("--delta", config.delta, "band half-width (default: half the gap to the next critical value)");
  add_common(oracle_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "reference cases plus a random oracle sweep");
  verify_cmd->add_option("--grid-n", config.grid_n, "override the oracle resolution of every case");
  verify_cmd->add_option("--sweep", config.sweep_count, "number of random instances")->capture_default_str();
  verify_cmd->add_option("--sweep-k", config.sweep_k, "number of edges in sweep instances (1-4)")
      ->capture_default_str()
      ->check(CLI::Range(1, 4));
  verify_cmd->add_option("--seed", config.seed, "sweep seed")->capture_default_str();
  add_tolerances(verify_cmd);
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "linkhom: " << e.what() << "\n";
    out << error_json("bad_arguments", e.what(), kInputError).dump(2) << "\n";
    return kInputError;
  }

  for (auto* sub : app.get_subcommands()) config.command = sub->get_name();
  if (config.grid_n && *config.grid_n < 8) {
    out << error_json("bad_grid", "--grid-n must be at least 8", kInputError).dump(2) << "\n";
    return kInputError;
  }
  return run(config, out, err);
}

}  // namespace linkhom::cli
