#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "kneserlab/families.hpp"
#include "kneserlab/io.hpp"
#include "kneserlab/lex.hpp"

using namespace kneserlab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run_cli(const std::string& args, const std::string& stdout_path = "/dev/null") {
  const std::string cmd =
      std::string(KNESERLAB_CLI_PATH) + " " + args + " > " + stdout_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

// Schema checks for the documented artifacts.
void require_family_schema(const Json& j) {
  REQUIRE(j.is_object());
  REQUIRE(j.at("n").is_number_integer());
  REQUIRE(j.at("k").is_number_integer());
  REQUIRE(j.at("sets").is_array());
  for (const auto& s : j.at("sets")) {
    REQUIRE(s.is_array());
    for (const auto& e : s) REQUIRE(e.is_number_integer());
  }
}

void require_report_schema(const Json& j) {
  REQUIRE(j.is_object());
  for (const char* key : {"name", "lhs", "rhs", "slack", "params"}) {
    REQUIRE(j.at(key).is_string());
  }
  REQUIRE(j.at("n").is_number_integer());
  REQUIRE(j.at("k").is_number_integer());
  REQUIRE(j.at("hypotheses_met").is_boolean());
  REQUIRE(j.at("assertable").is_boolean());
}

}  // namespace

TEST_CASE("family JSON writes canonically and round-trips byte-identically") {
  const Params p{7, 3};
  const Family f = make_tightness_G(2, p);
  const std::string path = "/tmp/kneserlab_roundtrip.json";
  write_family(f, path);
  const std::string first = slurp(path);
  const FamilyFile file = read_family(path);
  CHECK(file.family == f);
  write_family(file.family, path, file.meta);
  CHECK(slurp(path) == first);
  require_family_schema(Json::parse(first));
}

TEST_CASE("family JSON rejects malformed input") {
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 5, "k": 2})")), DomainError);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 5, "k": 2, "sets": [[1,2,3]]})")),
                  DomainError);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 5, "k": 2, "sets": [[1,6]]})")),
                  DomainError);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"n": 5, "k": 2, "sets": [[1,2],[1,2]]})")),
                  DomainError);
  CHECK_THROWS_AS(read_family("/tmp/definitely_missing_kneserlab.json"), DomainError);
}

TEST_CASE("report serialization: CSV header and JSON schema") {
  const Family f = make_star_plus(1, KSet::interval(2, 3), {6, 2});
  std::vector<BoundReport> reports{edge_floor_check(f), degree_or_concentration_bound(f)};
  const std::string csv = reports_to_csv(reports);
  CHECK(csv.rfind("name,n,k,params,lhs,rhs,slack,hypotheses_met,assertable\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

  const Json arr = reports_to_json(reports);
  REQUIRE(arr.is_array());
  for (const auto& j : arr) require_report_schema(j);
}

TEST_CASE("search result JSON carries the documented fields") {
  const auto r = min_edges(5, {5, 2});
  const Json j = search_result_to_json(r, 5, {5, 2}, "min-edges");
  CHECK(j.at("m") == 5);
  CHECK(j.at("optimum") == 2);
  CHECK(j.at("proven_optimal") == true);
  CHECK(j.at("witness").is_array());
  CHECK(j.at("nodes").is_number_integer());
}

TEST_CASE("spread JSON meta block") {
  const Json j = spread_to_json(polynomial_spread({16, 3}, 1, 9));
  require_family_schema(j);
  CHECK(j.at("meta").at("mode") == "polynomial");
  CHECK(j.at("meta").at("q") == 5);
  CHECK(j.at("meta").at("d") == 1);
  CHECK(j.at("meta").at("spread").is_number_integer());
  CHECK(j.at("meta").at("seed") == 9);
}

TEST_CASE("cli: construct then measure agrees with in-process statistics") {
  const std::string fam_path = "/tmp/kneserlab_cli_d.json";
  REQUIRE(run_cli("construct --family D --n 6 --k 2 --out " + fam_path) == 0);
  const FamilyFile file = read_family(fam_path);
  CHECK(file.family.size() == 4);

  const std::string out = "/tmp/kneserlab_cli_measure.json";
  REQUIRE(run_cli("measure --in " + fam_path, out) == 0);
  const Json j = Json::parse(slurp(out));
  CHECK(j.at("size") == 4);
  CHECK(j.at("d") == 1);
  CHECK(j.at("e") == "1");
  CHECK(j.at("intersecting") == false);
  CHECK(j.at("d") == max_degree(file.family).max);
  CHECK(j.at("tau") == covering_number(file.family).value);
}

TEST_CASE("cli: search subcommand value and schema") {
  const std::string out = "/tmp/kneserlab_cli_search.json";
  REQUIRE(run_cli("search --objective max-degree --m 5 --n 5 --k 2", out) == 0);
  const Json j = Json::parse(slurp(out));
  CHECK(j.at("optimum") == 1);
  CHECK(j.at("proven_optimal") == true);
  CHECK(j.at("objective") == "max-degree");
  CHECK(j.at("witness").size() == 5);
}

TEST_CASE("cli: bounds emits parseable CSV and JSON") {
  const std::string fam_path = "/tmp/kneserlab_cli_full.json";
  REQUIRE(run_cli("construct --family lex --m 10 --n 5 --k 2 --out " + fam_path) == 0);

  const std::string csv_out = "/tmp/kneserlab_cli_bounds.csv";
  REQUIRE(run_cli("bounds --in " + fam_path + " --format csv --assert", csv_out) == 0);
  const std::string csv = slurp(csv_out);
  CHECK(csv.rfind("name,n,k,params,", 0) == 0);

  const std::string json_out = "/tmp/kneserlab_cli_bounds.json";
  REQUIRE(run_cli("bounds --in " + fam_path + " --format json", json_out) == 0);
  const Json arr = Json::parse(slurp(json_out));
  REQUIRE(arr.is_array());
  REQUIRE(!arr.empty());
  for (const auto& j : arr) require_report_schema(j);
}

TEST_CASE("cli: spread and tightness and spectral run clean") {
  const std::string spread_out = "/tmp/kneserlab_cli_spread.json";
  REQUIRE(run_cli("spread --mode poly --n 16 --k 3 --d 1 --seed 4", spread_out) == 0);
  const Json sj = Json::parse(slurp(spread_out));
  require_family_schema(sj);
  CHECK(sj.at("sets").size() == 25);

  const std::string base = "/tmp/kneserlab_cli_base.json";
  REQUIRE(run_cli("construct --family lex --m 1140 --n 20 --k 3 --out " + base) == 0);
  const std::string mc_out = "/tmp/kneserlab_cli_mc.json";
  REQUIRE(run_cli("spread --mode monte-carlo --in " + base + " --c 1 --seed 1 --retries 50",
                  mc_out) == 0);
  const Json mj = Json::parse(slurp(mc_out));
  CHECK(mj.at("meta").at("success") == true);

  const std::string tight_out = "/tmp/kneserlab_cli_tight.json";
  REQUIRE(run_cli("tightness --n 12 --k 3 --s 4", tight_out) == 0);
  const Json tj = Json::parse(slurp(tight_out));
  CHECK(tj.at("d_exact") == 15);
  CHECK(tj.at("form1") == "119/15");
  CHECK(tj.at("form2") == "-13/4");

  const std::string spec_out = "/tmp/kneserlab_cli_spec.json";
  REQUIRE(run_cli("spectral --n 6 --k 2 --mixing-trials 50 --seed 2 --jobs 2 --assert",
                  spec_out) == 0);
  const Json pj = Json::parse(slurp(spec_out));
  CHECK(pj.at("lambda_match") == true);
  CHECK(pj.at("lambda_formula") == "3");
  CHECK(pj.at("mixing_violations") == 0);
}

TEST_CASE("cli: exit codes for usage, domain, and budget errors") {
  CHECK(run_cli("construct --n 5 --k 2") == 1);  // missing --family
  CHECK(run_cli("nonsense") == 1);               // unknown subcommand
  CHECK(run_cli("construct --family star --n 5 --k 9") == 2);
  CHECK(run_cli("measure --in /tmp/no_such_kneserlab_file.json") == 2);
  CHECK(run_cli("search --objective max-degree --m 12 --n 7 --k 2 --budget-nodes 10") == 3);
  CHECK(run_cli("construct --family random --m 3 --n 4 --k 2 --seed 1 "
                "--require-non-intersecting") == 0);
}
