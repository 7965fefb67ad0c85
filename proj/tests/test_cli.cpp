#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "tamagawa/cli.hpp"

using namespace tamagawa;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tamagawa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string small_db_path() {
  static const std::string path = [] {
    const auto p = std::filesystem::temp_directory_path() / "tamagawa_cli_test_db.txt";
    std::ofstream(p) << fixtures::kSmallDb;
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("localdata JSON for 11a1") {
  const auto r = run({"--json", "localdata", "--ainvs", "0,-1,1,-10,-20", "--p", "11"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kodaira"] == "I5");
  CHECK(j["c"] == 5);
  CHECK(j["tt_order"] == 5);
  CHECK(j["f"] == 1);
  CHECK(j["kind"] == "split_multiplicative");
  CHECK(j["phi"]["factors"] == nlohmann::json::array({5}));
  CHECK(j["phi"]["frobenius"] == nlohmann::json::array({nlohmann::json::array({1})}));
  CHECK(j["label"].is_null());
  // the flag may also follow the subcommand
  CHECK(run({"localdata", "--ainvs", "0,-1,1,-10,-20", "--p", "11", "--json"}).out == r.out);
}

TEST_CASE("localdata over every bad prime") {
  const auto r = run({"--json", "localdata", "--ainvs=1,1,1,-352,-2431", "--label", "114c1"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["p"] == 2);
  CHECK(j[0]["label"] == "114c1");
  CHECK(j[2]["p"] == 19);
}

TEST_CASE("invariants and torsors") {
  const auto inv = run({"--json", "invariants", "--ainvs", "0,0,0,-1,0"});
  REQUIRE(inv.code == kExitOk);
  CHECK(nlohmann::json::parse(inv.out)["discriminant"] == "64");
  const auto tt = run({"--json", "torsors", "--ainvs", "1,1,1,-352,-2431"});
  REQUIRE(tt.code == kExitOk);
  const auto j = nlohmann::json::parse(tt.out);
  CHECK(j["total_order"] == 20);
  CHECK(j["tamagawa_product"] == 20);
  CHECK(run({"torsors", "--ainvs", "0,-1,1,-10,-20"}).out.find("Z/5") != std::string::npos);
}

TEST_CASE("congruence exit codes") {
  CHECK(run({"congruence", "--a", "114c1", "--b", "57a1", "--p", "5", "--db", small_db_path()}).code == kExitOk);
  const auto fail = run({"--json", "congruence", "--a", "11a1", "--b", "57a1", "--p", "5", "--bound", "100", "--db",
                         small_db_path()});
  CHECK(fail.code == kExitCheckFailed);
  CHECK(nlohmann::json::parse(fail.out)["verdict"] == "fail");
}

TEST_CASE("visibility") {
  const auto r = run({"--json", "visibility", "--a", "114c1", "--b", "57a1", "--p", "5", "--db", small_db_path()});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_hypotheses_pass"] == true);
  CHECK(j["tamagawa_product_A"] == 20);
  CHECK(j["tamagawa_product_B"] == 2);
  CHECK(j["torsion_A"] == 4);
  CHECK(j["prediction"] == 5);
  CHECK(j["verified"] == true);
  for (const auto& [name, h] : j["hypotheses"].items()) CHECK(h["verdict"] == "pass");

  const auto swapped = run({"visibility", "--a", "57a1", "--b", "114c1", "--p", "5", "--db", small_db_path()});
  CHECK(swapped.code == kExitCheckFailed);
}

TEST_CASE("scan and verify") {
  const auto s = run({"--json", "scan", "--p", "5", "--db", small_db_path()});
  REQUIRE(s.code == kExitOk);
  CHECK(nlohmann::json::parse(s.out)["pairs"] == nlohmann::json::parse(R"([["114c1","57a1"]])"));
  const auto v = run({"--json", "verify", "--db", small_db_path()});
  CHECK(v.code == kExitOk);
  CHECK(nlohmann::json::parse(v.out)["failures"].empty());
  CHECK(run({"verify", "--db", TAMAGAWA_CORPUS}).code == kExitOk);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"--json", "verify", "--db", small_db_path()};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"localdata"}).code == kExitUsage);
  CHECK(run({"localdata", "--ainvs", "0,0,0,0,0"}).code == kExitUsage);
  CHECK(run({"localdata", "--ainvs", "1,2,3"}).code == kExitUsage);
  CHECK(run({"localdata", "--ainvs", "0,-1,1,-10,-20", "--p", "12"}).code == kExitUsage);
  CHECK(run({"verify", "--db", "/nonexistent/curves.txt"}).code == kExitUsage);
  CHECK(run({"visibility", "--a", "nope", "--b", "57a1", "--p", "5", "--db", small_db_path()}).code == kExitUsage);
  CHECK(run({"scan", "--p", "x", "--db", small_db_path()}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}
