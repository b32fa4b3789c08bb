#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dirmix/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dirmix::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code != dirmix::cli::kExitUsage);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dirmix_cli_test_" + name);
}

}  // namespace

TEST_CASE("verify theorem1 passes and its target can be overridden") {
  const auto pass = run({"verify", "theorem1", "--n", "3", "--max-order", "8", "--format", "json"});
  CHECK(pass.code == 0);
  const auto doc = nlohmann::json::parse(pass.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["claim"] == "theorem1");
  CHECK(doc["status"] == "pass");
  CHECK(doc["params"]["target"] == "psc:1,1");
  CHECK_FALSE(doc.contains("counterexample"));

  const auto fail = run({"verify", "theorem1", "--n", "3", "--max-order", "8", "--target", "psc:2,1", "--format", "json"});
  CHECK(fail.code == 1);
  const auto bad = nlohmann::json::parse(fail.out);
  CHECK(bad["status"] == "fail");
  CHECK(bad["counterexample"]["order"] == 2);
  CHECK(bad["counterexample"]["lhs"] == "1/4");
  CHECK(bad["counterexample"]["rhs"] == "1/6");
}

TEST_CASE("verify subcommands") {
  CHECK(run({"verify", "lemma1", "--n", "4"}).code == 0);
  CHECK(run({"verify", "lemma2", "--a", "1/2,3,5/7"}).code == 0);
  CHECK(run({"verify", "theorem2", "--n", "2", "--alpha", "1/4"}).code == 0);
  const auto t2 = run_json({"verify", "theorem2", "--n", "3", "--alpha", "1/3", "--a", "2", "--max-order", "6"});
  CHECK(t2["status"] == "pass");
  CHECK(t2["params"]["alpha"] == "1/3");
  CHECK(run({"verify", "theorem1", "--n", "1"}).code == 2);
  CHECK(run({"verify", "theorem2", "--n", "2", "--alpha", "1"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("moments table") {
  const auto doc = run_json({"moments", "--dist", "arcsin:1", "--n", "2", "--max-order", "4"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["moments"] == nlohmann::json({"1", "0", "1/3", "0", "1/5"}));
  CHECK(doc["support"] == nlohmann::json({"-1", "1"}));

  const auto csv = run({"moments", "--dist", "arcsin:1", "--n", "2", "--max-order", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "r,exact,decimal\n0,1,1\n1,0,0\n2,1/3,0.33333333333333331\n");

  // Flat Dirichlet(1, 1) weights reproduce the uniform-spacing result.
  const auto flat = run_json({"moments", "--dist", "arcsin:1", "--n", "2", "--dirichlet", "1,1", "--max-order", "4"});
  CHECK(flat["moments"] == doc["moments"]);
  const auto half = run_json({"moments", "--dist", "uniform:0,1", "--n", "2", "--dirichlet", "1/2,1/2", "--max-order", "2"});
  CHECK(half["moments"][1] == "1/2");
  CHECK(run({"moments", "--dist", "arcsin:1", "--n", "3", "--dirichlet", "1,1"}).code == 2);
}

TEST_CASE("recover from a target or a moments file") {
  const auto doc = run_json({"recover", "--n", "2", "--target", "psc:1/2,1", "--identify", "--max-order", "6"});
  CHECK(doc["schema"] == 1);
  CHECK(doc["recovered"]["moments"] == nlohmann::json({"1", "0", "1/2", "0", "3/8", "0", "5/16"}));
  const auto& matches = doc["identification"]["matches"];
  CHECK(std::find(matches.begin(), matches.end(), "arcsin:1") != matches.end());

  const auto path = temp_file("moments.json");
  {
    std::ofstream f(path);
    f << R"({"support": ["0", "1"], "moments": ["1", "1/2", "7/20", "11/40", "23/100"]})";
  }
  // Arbitrary moments match no candidate law.
  const auto miss = run({"recover", "--n", "2", "--moments-file", path.string(), "--identify", "--format", "json"});
  CHECK(miss.code == 1);
  CHECK(nlohmann::json::parse(miss.out)["identification"]["matches"].empty());

  {
    std::ofstream f(path);
    f << R"({"support": ["0", "1"], "moments": ["1", "1/4", "1/8", "5/64", "7/128"]})";
  }
  // Beta(1/2, 3/2) moments for S_2 invert to GenArcsin(1/4).
  const auto hit = run({"recover", "--n", "2", "--moments-file", path.string(), "--identify", "--format", "json"});
  CHECK(hit.code == 0);
  const auto hit_doc = nlohmann::json::parse(hit.out);
  const auto& hm = hit_doc["identification"]["matches"];
  CHECK(std::find(hm.begin(), hm.end(), "genarcsin:1/4,1") != hm.end());

  {
    std::ofstream f(path);
    f << R"({"support": ["0", "1"], "moments": ["2"]})";
  }
  CHECK(run({"recover", "--n", "2", "--moments-file", path.string()}).code == 2);
  std::filesystem::remove(path);

  CHECK(run({"recover", "--n", "2", "--moments-file", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"recover", "--n", "2"}).code == 2);
}

TEST_CASE("simulate output is reproducible") {
  const std::vector<std::string> args{"simulate", "--dist", "arcsin:1", "--n", "3", "--samples", "20000", "--seed", "0x2a", "--format", "json"};
  const auto a = run(args);
  auto args_threads = args;
  args_threads.insert(args_threads.end(), {"--threads", "3"});
  const auto b = run(args_threads);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["seed"] == 42);
  CHECK(doc["target"] == "psc:1,1");

  const auto decimal = run({"simulate", "--dist", "arcsin:1", "--n", "3", "--samples", "20000", "--seed", "42", "--format", "json"});
  CHECK(decimal.out == a.out);

  const auto csv = run({"simulate", "--dist", "arcsin:1", "--n", "2", "--samples", "1000", "--format", "csv"});
  CHECK(csv.out.rfind("check,order,value,exact,exact_decimal,threshold,pass\nks,", 0) == 0);

  CHECK(run({"simulate", "--dist", "arcsin:1", "--n", "0"}).code == 2);
  CHECK(run({"simulate", "--dist", "arcsin:1", "--n", "2", "--samples", "10"}).code == 2);
  CHECK(run({"simulate", "--dist", "arcsin:1", "--n", "2", "--seed", "0xZZ"}).code == 2);
}

TEST_CASE("density table") {
  const auto r = run({"density-table", "--dist", "arcsin:1", "--points", "3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,pdf,cdf");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 3);

  const auto doc = run_json({"density-table", "--dist", "psc:1,1", "--points", "5"});
  CHECK(doc["schema"] == 1);
  CHECK(run({"density-table", "--dist", "point:0"}).code == 2);
}

TEST_CASE("usage errors name the offending flag") {
  const auto bad = run({"moments", "--dist", "bogus", "--n", "2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--dist") != std::string::npos);

  const auto neg = run({"moments", "--dist", "arcsin:-1", "--n", "2"});
  CHECK(neg.code == 2);
  CHECK(neg.err.find("--dist") != std::string::npos);

  CHECK(run({"moments", "--dist", "arcsin:1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"moments", "--dist", "arcsin:1", "--n", "2", "--format", "xml"}).code == 2);
}

TEST_CASE("help lists the flags") {
  const auto top = run({"--help"});
  CHECK(top.code == 0);
  for (const char* sub : {"moments", "verify", "recover", "simulate", "density-table"})
    CHECK(top.out.find(sub) != std::string::npos);
  const auto sim = run({"simulate", "--help"});
  CHECK(sim.code == 0);
  for (const char* flag : {"--dist", "--n", "--samples", "--seed", "--threads", "--format", "--output"})
    CHECK(sim.out.find(flag) != std::string::npos);
}

TEST_CASE("output file and format environment variable") {
  const auto path = temp_file("out.json");
  const auto r = run({"verify", "lemma1", "--n", "3", "--format", "json", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const auto doc = nlohmann::json::parse(f);
  CHECK(doc["claim"] == "lemma1");
  std::filesystem::remove(path);

  ::setenv("DIRMIX_FORMAT", "json", 1);
  const auto env = run({"verify", "lemma1", "--n", "3"});
  ::unsetenv("DIRMIX_FORMAT");
  CHECK(nlohmann::json::parse(env.out)["schema"] == 1);
}
