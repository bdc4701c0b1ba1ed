#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mackey/catalog.hpp"
#include "mackey/cli.hpp"

using namespace mackey;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("analyze renders a text report") {
  CliResult r = run({"analyze", "--group", "C2", "--prime", "2"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.err, "");
  CHECK(contains(r.out, "group:         C2"));
  CHECK(contains(r.out, "det_mackey:    3"));
  CHECK(contains(r.out, "det_comackey:  1"));
  CHECK(contains(r.out, "nonsingular:   true"));
  CHECK_FALSE(contains(r.out, "verification:"));
}

TEST_CASE("analyze omits the cohomological determinant in the singular case") {
  CliResult r = run({"analyze", "--group", "S3", "--prime", "3"});
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.out, "det_mackey:    5"));
  CHECK(contains(r.out, "nonsingular:   false"));
  CHECK_FALSE(contains(r.out, "det_comackey"));
}

TEST_CASE("analyze emits machine-readable json") {
  CliResult r = run({"analyze", "--group", "EA(2,2)", "--prime", "2", "--format", "json"});
  REQUIRE_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK_EQ(j["group"], "EA(2,2)");
  CHECK_EQ(j["order"], 4);
  CHECK_EQ(j["prime"], 2);
  CHECK_EQ(j["pairs"].size(), 5);
  CHECK_EQ(j["det_mackey"]["num"], "270");
  CHECK_EQ(j["det_mackey"]["den"], "1");
  CHECK_EQ(j["comackey"]["rank"], 4);
  CHECK_EQ(j["comackey"]["size"], 5);
  CHECK_EQ(j["comackey"]["nonsingular"], false);
  CHECK_FALSE(j["comackey"].contains("det"));
  CHECK_FALSE(j.contains("verification"));

  CliResult n = run({"analyze", "--group", "C12", "--prime", "2", "--format", "json"});
  auto jn = nlohmann::json::parse(n.out);
  CHECK_EQ(jn["comackey"]["nonsingular"], true);
  CHECK_EQ(jn["comackey"]["det"]["num"], "8");
  CHECK_EQ(jn["comackey"]["det"]["den"], "1");
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args = {"analyze", "--group", "S4", "--prime", "2",
                                   "--format", "json", "--verify"};
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK_EQ(a.code, 0);
  CHECK_EQ(a.out, b.out);
}

TEST_CASE("analyze --verify attaches the cross-check section") {
  CliResult r = run({"analyze", "--group", "C4", "--prime", "2", "--verify"});
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.out, "verification:"));
  CHECK(contains(r.out, "PASS"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("verify reports one line per check") {
  CliResult r = run({"verify", "--group", "C4", "--prime", "2"});
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.out, "== C4  prime 2"));
  CHECK(contains(r.out, "PASS"));
  CHECK(contains(r.out, "all checks passed"));
  CHECK_FALSE(contains(r.out, "FAIL"));

  // Degenerate prime: still a meaningful run.
  CliResult degenerate = run({"verify", "--group", "S3", "--prime", "5"});
  CHECK_EQ(degenerate.code, 0);
  CHECK(contains(degenerate.out, "all checks passed"));
}

TEST_CASE("verify can sweep the catalog with an order cap") {
  CliResult r = run({"verify", "--group", "catalog", "--prime", "2",
                     "--max-order", "10"});
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.out, "== C1  prime 2"));
  CHECK(contains(r.out, "== Q8  prime 2"));
  CHECK(contains(r.out, "== S4  skipped (order above limit)"));
  CHECK(contains(r.out, "== C12  skipped (order above limit)"));
  CHECK(contains(r.out, "all checks passed"));
}

TEST_CASE("verify renders json for one group or the whole catalog") {
  CliResult one = run({"verify", "--group", "C4", "--prime", "2", "--format", "json"});
  REQUIRE_EQ(one.code, 0);
  auto j = nlohmann::json::parse(one.out);
  CHECK(j.is_object());
  REQUIRE(j.contains("verification"));
  CHECK(j["verification"].is_array());
  CHECK_FALSE(j["verification"].empty());
  for (const auto& record : j["verification"]) CHECK_EQ(record["pass"], true);

  CliResult sweep = run({"verify", "--group", "catalog", "--prime", "3", "--format",
                         "json", "--max-order", "10"});
  REQUIRE_EQ(sweep.code, 0);
  auto array = nlohmann::json::parse(sweep.out);
  CHECK(array.is_array());
  CHECK(array.size() >= 10);
}

TEST_CASE("the catalog subcommand prints the spec grammar") {
  CliResult r = run({"catalog"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, catalog_listing());
}

TEST_CASE("usage and input errors exit with code 1") {
  CHECK_EQ(run({}).code, 1);
  CHECK_EQ(run({"frobnicate"}).code, 1);
  CHECK_EQ(run({"analyze", "--prime", "2"}).code, 1);  // --group is required
  CHECK_EQ(run({"analyze", "--group", "C2", "--prime", "2", "--format", "xml"}).code, 1);

  CliResult bad_spec = run({"analyze", "--group", "X5", "--prime", "2"});
  CHECK_EQ(bad_spec.code, 1);
  CHECK(contains(bad_spec.err, "error:"));
  CHECK_EQ(bad_spec.out, "");

  CliResult bad_file = run({"analyze", "--group", "file:/nonexistent", "--prime", "2"});
  CHECK_EQ(bad_file.code, 1);
  CHECK(contains(bad_file.err, "cannot read"));

  CliResult too_big = run({"analyze", "--group", "S4", "--prime", "2",
                           "--max-order", "10"});
  CHECK_EQ(too_big.code, 1);
  CHECK(contains(too_big.err, "above the limit"));

  // verify propagates bad specs instead of skipping them.
  CHECK_EQ(run({"verify", "--group", "X5", "--prime", "2"}).code, 1);
}

TEST_CASE("a composite --prime is rejected in every mode") {
  for (const char* mode : {"analyze", "verify"}) {
    CliResult r = run({mode, "--group", "C2", "--prime", "4"});
    CHECK_EQ(r.code, 1);
    CHECK(contains(r.err, "--prime must be a prime number"));
  }
  CHECK_EQ(run({"verify", "--group", "catalog", "--prime", "4"}).code, 1);
  CHECK_EQ(run({"analyze", "--group", "C2", "--prime", "1"}).code, 1);
}

TEST_CASE("--help exits cleanly") {
  CliResult r = run({"--help"});
  CHECK_EQ(r.code, 0);
  for (const char* word : {"analyze", "verify", "catalog"}) CHECK(contains(r.out, word));
  CHECK_EQ(run({"analyze", "--help"}).code, 0);
}
