#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "linkhom/cli.hpp"
#include "linkhom/line.hpp"
#include "linkhom/report.hpp"
#include "support.hpp"

using namespace linkhom;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "linkhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(LINKHOM_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("line command") {
  const auto r = invoke({"line", "--lengths", "1/3,1/3,1/3", "--h", "0"});
  REQUIRE(r.code == cli::kOk);
  const auto j = r.json();
  CHECK(j["betti"] == nlohmann::json::array({1, 6, 1}));
  CHECK(j["h"] == "0/1");
  CHECK(j["euler"] == -4);
  CHECK(j["regular"] == true);

  const auto json_lengths = invoke({"line", "--lengths", R"(["1/3","1/3","1/3"])", "--h", "0"});
  CHECK(json_lengths.out == r.out);
}

TEST_CASE("curve command") {
  const auto ok = invoke({"curve", "--lengths", "1/2,1/2", "--curve", data("chord_half.json")});
  REQUIRE(ok.code == cli::kOk);
  CHECK(ok.json()["betti"] == nlohmann::json::array({1, 1}));

  const auto bad = invoke({"curve", "--lengths", "1/2,1/2", "--curve", data("through_origin.json")});
  CHECK(bad.code == cli::kHypothesisViolation);
  CHECK(bad.json()["error"]["code"] == "origin_tangency");
  CHECK(bad.json()["error"]["message"].get<std::string>().find("origin-tangency with r_J = 0") != std::string::npos);
  CHECK(bad.err.find("origin-tangency") != std::string::npos);

  const auto missing = invoke({"curve", "--lengths", "1/2,1/2", "--curve", data("no_such_file.json")});
  CHECK(missing.code == cli::kInputError);
}

TEST_CASE("input errors exit with 2") {
  CHECK(invoke({"line", "--lengths", "1/2,zero", "--h", "0"}).code == cli::kInputError);
  CHECK(invoke({"line", "--lengths", "1/2,0", "--h", "0"}).code == cli::kInputError);
  CHECK(invoke({"line", "--lengths", "1/2", "--h", "1/0"}).code == cli::kInputError);
  CHECK(invoke({"line", "--lengths", "1/2"}).code == cli::kInputError);
  CHECK(invoke({"oracle", "--lengths", "1/2,1/2", "--h", "0", "--grid-n", "4"}).code == cli::kInputError);
  CHECK(invoke({"line", "--lengths", "1/2", "--h", "0", "--format", "xml"}).code == cli::kInputError);
  CHECK(invoke({"frobnicate"}).code == cli::kInputError);
  const auto r = invoke({"line", "--lengths", "[1/2", "--h", "0"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.json()["error"]["code"] == "bad_linkage_json");
  CHECK(r.json()["error"]["exit_code"] == 2);
}

TEST_CASE("resource refusal exits with 4") {
  cli::RunConfig config;
  config.command = "oracle";
  config.lengths = "1/3,1/3,1/3";
  config.h = "0";
  config.cell_budget = 1000;
  std::ostringstream out, err;
  CHECK(cli::run(config, out, err) == cli::kResourceRefusal);
  CHECK(nlohmann::json::parse(out.str())["error"]["code"] == "cell_budget_exceeded");

  ::setenv("LINKHOM_CELL_BUDGET", "1000", 1);
  const auto r = invoke({"oracle", "--lengths", "1/3,1/3,1/3", "--h", "0"});
  ::unsetenv("LINKHOM_CELL_BUDGET");
  CHECK(r.code == cli::kResourceRefusal);
}

TEST_CASE("verification exit codes") {
  verify::VerifyReport report;
  report.cases.emplace_back("a", report::Json::object());
  report.cases.emplace_back("b", report::Json::object());
  report.cases.back().status = verify::Status::inconclusive;
  CHECK(cli::exit_code(report) == cli::kOk);
  report.cases.back().status = verify::Status::fail;
  CHECK(cli::exit_code(report) == cli::kDisagreement);

  const auto r = invoke({"verify", "--sweep", "2"});
  CHECK(r.code == cli::kOk);
  const auto j = r.json();
  CHECK(j["failed"] == 0);
  CHECK(j["cases"].size() > 10);
}

TEST_CASE("oracle command reports both resolutions") {
  const auto r = invoke({"oracle", "--lengths", "1/2,1/2", "--h", "1/2", "--grid-n", "16"});
  REQUIRE(r.code == cli::kOk);
  const auto j = r.json();
  CHECK(j["betti"] == nlohmann::json::array({1, 1, 0}));
  CHECK(j["refined"]["n"] == 32);
  CHECK(j["stable"] == true);
  CHECK(j["torsion"].empty());
  CHECK(j["delta"] == "1/4");
}

TEST_CASE("reports are deterministic and re-parse to the same answer") {
  const std::vector<std::string> args = {"line", "--lengths", "3,1,2/5", "--h", "1/7", "--dump-samples", "3"};
  const auto first = invoke(args);
  const auto second = invoke(args);
  REQUIRE(first.code == cli::kOk);
  CHECK(first.out == second.out);

  const auto j = first.json();
  const auto link = report::parse_linkage(j["normalized_lengths"]);
  const Rational h = Rational::parse(j["h"].get<std::string>()) * Rational::parse(j["scale"].get<std::string>());
  CHECK(report::ranks(line::betti_line(link, h)) == j["betti"]);
  CHECK(j["samples"].size() == 3);

  const auto radii = invoke({"radii", "--lengths", "1/2,1/2"});
  REQUIRE(radii.code == cli::kOk);
  CHECK(radii.json()["configs"].size() == 4);
  CHECK(radii.json()["radii"][0]["radius"] == "0/1");

  const auto c = invoke({"curve", "--lengths", "1/2,1/2", "--curve", data("chord_half.json")});
  const auto curve = report::parse_curve(nlohmann::json::parse(report::curve_json(
      report::parse_curve(nlohmann::json::parse(std::ifstream(data("chord_half.json"))))).dump()));
  CHECK(curve.points.size() == 2);
  CHECK(c.json()["crossings"].size() == 2);
}

TEST_CASE("table output and file output") {
  const auto t = invoke({"line", "--lengths", "1/2,1/2", "--h", "1/2", "--format", "table"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.find("betti\t[1,1]") != std::string::npos);

  const std::string path = "cli_test_out.json";
  const auto f = invoke({"line", "--lengths", "1/2,1/2", "--h", "1/2", "--out", path});
  CHECK(f.code == cli::kOk);
  CHECK(f.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["betti"] == nlohmann::json::array({1, 1}));
  std::remove(path.c_str());
}
