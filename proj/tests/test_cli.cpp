#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arr/cli.hpp"

using arr::cli::run;
using nlohmann::json;

namespace {

arr::cli::RunOutput arr_run(std::vector<std::string> args) {
  args.insert(args.begin(), "arr");
  return run(args);
}

json result_of(std::vector<std::string> args) {
  const auto out = arr_run(std::move(args));
  REQUIRE(out.status == 0);
  return json::parse(out.out)["result"];
}

const std::vector<std::string> catalog{"braid",  "x3", "x2", "nonpappus", "pappus", "split_solvable:2,3",
                                       "graphic:0-1,1-2,2-0,2-3"};
const std::vector<std::string> commands{"info",   "l2",        "betti",   "holonomy", "decomp", "lcs",
                                        "chen",   "resonance", "charvar", "milnor",   "check"};

std::string golden_name(const std::string& command, const std::string& key) {
  std::string s = command + "_" + key;
  for (auto& c : s)
    if (c == ':' || c == ',') c = '_';
  return s + ".txt";
}

}  // namespace

TEST_CASE("documented examples") {
  const auto d = result_of({"decomp", "--builtin", "nonpappus"});
  CHECK(d == json::parse(R"({"rational": true, "integral": true, "h3_rank": 18, "local_rank": 18, "torsion": []})"));

  const auto refusal = arr_run({"milnor", "--builtin", "pappus", "--mult", "1,1,1,1,1,1,1,1,1"});
  CHECK(refusal.status == arr::cli::exit_hypothesis);
  CHECK(refusal.err.find("not decomposable over Q") != std::string::npos);
  CHECK(json::parse(refusal.out)["advisory"]["local_lower_bound"]["b1"] == 8);

  CHECK(result_of({"chen", "--builtin", "x3", "--max", "4"})["ranks"] == json::parse("[6, 3, 6, 9]"));
  CHECK(result_of({"holonomy", "--builtin", "braid:3", "--max", "3"})["ranks"] == json::parse("[6, 4, 10]"));
  CHECK(result_of({"lcs", "--builtin", "x3", "--max", "5"})["ranks"] == json::parse("[6, 3, 6, 9, 18]"));
  CHECK(result_of({"lcs", "--builtin", "graphic:0-1,0-2,0-3,1-2,1-3,2-3", "--max", "3"})["ranks"] ==
        json::parse("[6, 4, 10]"));
  const auto m = result_of({"milnor", "--builtin", "nonpappus", "--assert-separated"});
  CHECK(m["b1"] == 8);
  CHECK(m["trivial_monodromy"] == true);
  CHECK(result_of({"resonance", "--builtin", "nonpappus"})["components"].size() == 9);
  CHECK(result_of({"betti", "--builtin", "braid"}) == json::parse(R"({"b0": 1, "b1": 6, "b2": 11})"));
}

TEST_CASE("report layout") {
  const auto out = arr_run({"info", "--builtin", "x3"});
  REQUIRE(out.status == 0);
  const auto doc = json::parse(out.out);
  for (const char* key : {"tool_version", "arrangement", "result", "hypotheses", "verification"})
    CHECK(doc.contains(key));
  CHECK(doc["verification"]["modular_only"] == false);
  CHECK(doc["arrangement"]["normals"].size() == 6);

  const auto charvar = json::parse(arr_run({"charvar", "--builtin", "x3", "--assert-separated"}).out);
  CHECK(charvar["hypotheses"]["separated"] == "asserted");

  const auto table = arr_run({"holonomy", "--builtin", "x3", "--table"});
  CHECK(table.out.find("ranks: 6 3 6 9") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(arr_run({"info", "--builtin", "nosuch"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"info"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"frobnicate"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"info", "--file", "/nonexistent/file"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"holonomy", "--builtin", "x3", "--max", "0"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"milnor", "--builtin", "x3", "--mult", "1,1"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"milnor", "--builtin", "x3", "--mult", "2,2,2,2,2,2", "--assert-separated"}).status ==
        arr::cli::exit_input_error);
  CHECK(arr_run({"charvar", "--builtin", "x3"}).status == arr::cli::exit_hypothesis);
  CHECK(arr_run({"resonance", "--builtin", "braid"}).status == arr::cli::exit_hypothesis);
  CHECK(arr_run({"holonomy", "--builtin", "nonpappus", "--max", "6", "--ceiling", "1000"}).status ==
        arr::cli::exit_resource);
  CHECK(arr_run({"info", "--builtin", "x3", "--json", "--table"}).status == arr::cli::exit_input_error);
  CHECK(arr_run({"--help"}).status == 0);
  CHECK(arr_run({"--version"}).out.find(arr::cli::tool_version) != std::string::npos);
}

TEST_CASE("file input") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto poly = dir / "arr_test_poly.txt";
  const auto bad = dir / "arr_test_bad.txt";
  std::ofstream(poly) << "xyz(x+y)(x+z)(y+z)\n";
  std::ofstream(bad) << "(x+1)y\n";
  CHECK(result_of({"decomp", "--file", poly.string()})["h3_rank"] == 6);
  const auto out = arr_run({"info", "--file", bad.string()});
  CHECK(out.status == arr::cli::exit_input_error);
  CHECK(out.err.find("nonlinear") != std::string::npos);
  std::filesystem::remove(poly);
  std::filesystem::remove(bad);
}

TEST_CASE("check mode") {
  const auto out = arr_run({"check", "--random", "4", "--seed", "5"});
  CHECK(out.status == 0);
  CHECK(json::parse(out.out)["result"]["failures"] == 0);
}

TEST_CASE("golden outputs") {
  const std::filesystem::path dir = ARR_GOLDEN_DIR;
  const bool update = std::getenv("ARR_UPDATE_GOLDEN") != nullptr;
  for (const auto& command : commands)
    for (const auto& key : catalog) {
      std::vector<std::string> args{command, "--builtin", key};
      if (command == "charvar" || command == "milnor") args.push_back("--assert-separated");
      if (command == "check") args.insert(args.end(), {"--max", "3"});
      const auto out = arr_run(args);
      std::ostringstream got;
      got << "status " << out.status << "\n" << out.out << "--- stderr\n" << out.err;
      const auto path = dir / golden_name(command, key);
      CAPTURE(path.string());
      if (update) {
        std::ofstream(path) << got.str();
        continue;
      }
      std::ifstream in(path);
      REQUIRE(in.good());
      std::stringstream expected;
      expected << in.rdbuf();
      CHECK(got.str() == expected.str());
    }
}
