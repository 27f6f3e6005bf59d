#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("ANCAS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "ANCAS_CLI must point at the built binary");
  return p;
}

RunResult run_cli(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string("'") + cli_path() + "' " + args;
  if (merge_stderr) cmd += " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse_record(const RunResult& r) {
  json j = json::parse(r.out, nullptr, false);
  REQUIRE_MESSAGE(!j.is_discarded(), ("output is not JSON: " + r.out));
  return j;
}

// Structural validation against the shipped schema: required keys, declared
// types, enum membership, and the rational pattern. Floats are banned
// everywhere in a record.
void check_no_floats(const json& j) {
  if (j.is_object() || j.is_array()) {
    for (const auto& v : j) check_no_floats(v);
  } else {
    CHECK_FALSE(j.is_number_float());
  }
}

json load_schema() {
  const char* p = std::getenv("ANCAS_SCHEMA");
  REQUIRE_MESSAGE(p != nullptr, "ANCAS_SCHEMA must point at the schema file");
  std::ifstream in(p);
  REQUIRE(in.good());
  return json::parse(in);
}

void validate_against_schema(const json& record) {
  static const json schema = load_schema();
  for (const auto& req : schema.at("required"))
    CHECK_MESSAGE(record.contains(req.get<std::string>()),
                  ("missing required field " + req.get<std::string>()));
  const json& props = schema.at("properties");
  for (const auto& [key, val] : record.items()) {
    if (!props.contains(key)) continue;
    const json& spec = props.at(key);
    if (spec.contains("type")) {
      const std::string t = spec.at("type");
      if (t == "string") CHECK(val.is_string());
      if (t == "object") CHECK(val.is_object());
      if (t == "integer") CHECK(val.is_number_integer());
    }
    if (spec.contains("enum")) {
      bool found = false;
      for (const auto& e : spec.at("enum"))
        if (e == val) found = true;
      CHECK_MESSAGE(found, (key + " outside its enum"));
    }
  }
  if (record.at("status") == "error") {
    REQUIRE(record.contains("error"));
    for (const auto& req : schema.at("properties").at("error").at("required"))
      CHECK(record.at("error").contains(req.get<std::string>()));
  } else {
    CHECK(record.contains("result"));
  }
  check_no_floats(record);
}

void check_rational(const json& value) {
  static const json schema = load_schema();
  static const std::regex pattern(
      schema.at("definitions").at("rational").at("pattern").get<std::string>());
  REQUIRE(value.is_string());
  CHECK_MESSAGE(std::regex_match(value.get<std::string>(), pattern),
                ("not a rational literal: " + value.dump()));
}

} // namespace

TEST_CASE("orbit command") {
  RunResult r = run_cli("orbit --rank 7 --weight 1,0,1,0,0,1,0");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["result"]["dimension"] == "1680");
  CHECK(j["result"]["weight_mu"] == "3,2,2,1,1,1,0,0");
  check_rational(j["result"]["dimension"]);
}

TEST_CASE("orbit listing") {
  RunResult r = run_cli("orbit --rank 2 --weight 1,0 --list");
  json j = parse_record(r);
  validate_against_schema(j);
  auto elems = j["result"]["elements"];
  REQUIRE(elems.size() == 3);
  CHECK(elems[0] == "1,0,0");
  CHECK(elems[1] == "0,1,0");
  CHECK(elems[2] == "0,0,1");
}

TEST_CASE("non-dominant weights exit with code 2") {
  RunResult r = run_cli("orbit --rank 2 --weight -1,0");
  CHECK(r.exit_code == 2);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["status"] == "error");
  CHECK(j["error"]["code"] == 2);
}

TEST_CASE("malformed flags exit with code 2") {
  CHECK(run_cli("orbit --rank 2").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("chs --rank 2 --weight 1,0 --order 2 --method nope").exit_code ==
        2);
}

TEST_CASE("chs command") {
  RunResult r = run_cli("chs --rank 2 --weight 0,1 --order 2");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["result"]["ch"]["mu(2)"] == "2");
  CHECK(j["result"]["ch"]["mu(1,1)"] == "2");
  for (const auto& [k, v] : j["result"]["ch"].items()) check_rational(v);
}

TEST_CASE("chs with both methods agrees and is job-count independent") {
  RunResult a = run_cli("chs --rank 4 --weight 1,0,2,0 --order 5 --method both --jobs 1");
  RunResult b = run_cli("chs --rank 4 --weight 1,0,2,0 --order 5 --method both --jobs 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-identical regardless of --jobs
  json j = parse_record(a);
  CHECK(j["result"]["match"] == true);
  CHECK(j["result"]["formula"] == j["result"]["bruteforce"]);
}

TEST_CASE("cof command lists every class of the order") {
  RunResult r = run_cli("cof --rank 3 --weight 1,0,0 --order 4");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  REQUIRE(j["result"]["cof"].size() == 2);
  CHECK(j["result"]["cof"]["4"] == "1");
  CHECK(j["result"]["cof"]["2,2"] == "0");
}

TEST_CASE("decompose command") {
  RunResult r = run_cli("decompose --rank 2 --weight 1,1");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["result"]["dimension"] == "8");
  CHECK(j["result"]["sum_check"] == true);
  REQUIRE(j["result"]["entries"].size() == 2);
  CHECK(j["result"]["entries"][0]["lambda"] == "1,1");
  CHECK(j["result"]["entries"][1]["multiplicity"] == "2");
}

TEST_CASE("eigen command with closed form") {
  RunResult r = run_cli(
      "eigen --rank 5 --weight 1,0,0,0,0 --class 4 --norm default");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["result"]["closed"] == "84");
  CHECK(j["result"]["from_cof"] == "84");
  CHECK(j["result"]["match"] == true);
  check_rational(j["result"]["closed"]);
}

TEST_CASE("eigen below the admissible rank exits 3 and names the factor") {
  RunResult r = run_cli("eigen --rank 2 --weight 1,0 --class 4");
  CHECK(r.exit_code == 3);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["error"]["code"] == 3);
  std::string msg = j["error"]["message"];
  CHECK(msg.find("(N-2)") != std::string::npos);
}

TEST_CASE("eigen rejects untabulated high orders with exit 2") {
  RunResult r = run_cli("eigen --rank 8 --weight 1,0,0,0,0,0,0,0 --class 8");
  CHECK(r.exit_code == 2);
}

TEST_CASE("eigen supports orders 2 and 3 through the coefficient route") {
  RunResult r = run_cli("eigen --rank 2 --weight 1,1 --class 2");
  CHECK(r.exit_code == 0);
  json j = parse_record(r);
  validate_against_schema(j);
  CHECK(j["result"]["from_cof"] == "9/4");
  CHECK(j["result"]["reference"] == "1");
  CHECK_FALSE(j["result"].contains("closed"));
}

TEST_CASE("csv and table formats") {
  RunResult csv = run_cli("orbit --rank 2 --weight 1,0 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("result.dimension,3") != std::string::npos);
  RunResult tab = run_cli("orbit --rank 2 --weight 1,0 --format table");
  CHECK(tab.exit_code == 0);
  CHECK(tab.out.find("result.dimension") != std::string::npos);
}

TEST_CASE("records are deterministic and timing is opt-in") {
  RunResult a = run_cli("cof --rank 4 --weight 0,1,0,1 --order 6 --jobs 2");
  RunResult b = run_cli("cof --rank 4 --weight 0,1,0,1 --order 6 --jobs 5");
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  RunResult t = run_cli("cof --rank 4 --weight 0,1,0,1 --order 6 --timing");
  CHECK(parse_record(t).contains("elapsed_ms"));
}

TEST_CASE("verify command, quick suites") {
  RunResult schur = run_cli("verify --suite schur --order-max 7");
  CHECK(schur.exit_code == 0);
  json j = parse_record(schur);
  validate_against_schema(j);
  CHECK(j["result"]["pass"] == true);

  RunResult red = run_cli("verify --suite reductions --order-max 6");
  CHECK(red.exit_code == 0);

  // the coefficient audit of family 43 is an explained erratum: it fails
  // the run only under --strict
  RunResult eigen = run_cli("verify --suite eigen");
  CHECK(eigen.exit_code == 0);
  RunResult strict = run_cli("verify --suite eigen --strict");
  CHECK(strict.exit_code == 1);
  json js = parse_record(strict);
  bool found_erratum = false;
  for (const auto& cls : js["result"]["eigen"]["classes"])
    if (cls["class"] == "4,3" && !cls["erratum_candidates"].empty())
      found_erratum = true;
  CHECK(found_erratum);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("orbit --help").exit_code == 0);
}
