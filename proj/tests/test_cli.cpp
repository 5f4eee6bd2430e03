#include "dunkl/cli.hpp"
#include "dunkl/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dunkl;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dunkl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: documented examples") {
  auto r = run({"pair", "--group", "z2^2", "--kappa", "1/2,1/2", "--p", "x1", "--q", "x1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"result_rational\":\"2\"}\n");
  r = run({"sphere-int", "--group", "z2^2", "--kappa", "1/2,1/2", "--poly", "x1^2"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["result_rational"] == "1/2");
}

TEST_CASE("cli: subcommands") {
  auto r = run({"apply", "--group", "z2^2", "--kappa", "1/2,1/2", "--xi", "e1", "--poly", "x1^3"});
  CHECK(r.parsed()["result"] == "4*x1^2");
  r = run({"apply", "--group", "z2^2", "--kappa", "0,0", "--xi", "v:1,2", "--poly", "x1*x2"});
  CHECK(r.parsed()["result"] == "2*x1 + x2");
  r = run({"laplacian", "--group", "a2", "--kappa", "1", "--poly", "x1^2 + x2^2 + x3^2"});
  CHECK(r.parsed()["result"] == "18");
  r = run({"decompose", "--group", "z2^2", "--poly", "x1^2"});
  CHECK(r.parsed()["components"] == json::parse(R"([{"i":0,"poly":"1/2*x1^2 - 1/2*x2^2"},{"i":1,"poly":"1/2"}])"));
  r = run({"hbasis", "--group", "a2", "--kappa", "1", "--degree", "2"});
  CHECK(r.parsed()["basis"].size() == 5);
  r = run({"pizzetti", "--group", "z2^2", "--kappa", "1/2,1/2", "--f", "x1^2 + x2^2", "--N", "1"});
  CHECK(r.parsed() == json::parse(R"({"m":0,"coeffs":["0","1"]})"));
  r = run({"hobson", "--group", "z2^2", "--p", "x1", "--radial", "2:1"});
  CHECK(r.parsed()["result"] == "4*x1^3 + 4*x1*x2^2");
  r = run({"intertwine", "--group", "z2^2", "--kappa", "1/2,1/2", "--poly", "x1"});
  CHECK(r.parsed()["result"] == "1/2*x1");
  r = run({"funk-hecke", "--group", "b2", "--kappa", "1/2,3/2", "--phi", "t^3", "--q", "x1"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["holds"] == true);
  CHECK(r.parsed()["a"] == "1/40");
  r = run({"kernel", "--group", "z2^3", "--n", "1"});
  CHECK(r.parsed()["result"] == "3*x1*x4 + 3*x2*x5 + 3*x3*x6");
  r = run({"mc", "--group", "z2^2", "--poly", "x1^2", "--samples", "20000", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["mean"].is_number());
  CHECK(r.parsed()["stderr"].is_number());
}

TEST_CASE("cli: output is byte-deterministic") {
  const std::vector<std::string> args = {"mc", "--group", "b2", "--kappa", "1/2,3/2", "--poly", "x1^2*x2^2", "--samples", "30000", "--seed", "11"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> ver = {"verify", "--max-degree", "3", "--families", "z2", "--samples", "20000"};
  CHECK(run(ver).out == run(ver).out);
}

TEST_CASE("cli: errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"pair", "--p", "x1 +", "--q", "x1"}).code == 2);
  CHECK(run({"pair", "--group", "z2^2", "--kappa", "-1,0", "--p", "x1", "--q", "x1"}).code == 2);
  CHECK(run({"pair", "--group", "z2^2", "--kappa", "1", "--p", "x1", "--q", "x1"}).code == 2);
  CHECK(run({"pair", "--group", "q7", "--p", "x1", "--q", "x1"}).code == 2);
  CHECK(run({"apply", "--xi", "e3", "--poly", "x1"}).code == 2);
  CHECK(run({"pizzetti", "--q", "x1^2", "--f", "x1", "--N", "1"}).code == 2);
  CHECK(run({"kernel", "--group", "z2^2", "--n", "1"}).code == 2);
  CHECK(run({"verify", "--max-degree", "1"}).code == 2);
  CHECK(run({"verify", "--families", "e8"}).code == 2);
  const auto r = run({"pair", "--p", "x1 +", "--q", "x1"});
  CHECK(r.err.find("position") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("verify: default corpus") {
  const auto corpus = default_corpus();
  REQUIRE(corpus.size() == 8);
  CHECK(corpus[0].label == "z2^2 kappa=(1/2,1/2)");
  CHECK(corpus[1].ctx.kappa_is_zero());
  CHECK(corpus[4].ctx.group().name() == "a2");
  CHECK(parse_families("z2,b").size() == 2);
  CHECK_THROWS_AS(parse_families("z2,q"), std::invalid_argument);
}

TEST_CASE("verify: family filter and report file") {
  const std::string path = "verify_report_test.json";
  const auto r = run({"verify", "--max-degree", "3", "--families", "z2", "--samples", "20000", "--out", path});
  CHECK(r.code == 0);
  const auto j = r.parsed();
  std::set<std::string> groups;
  for (const auto& c : j["checks"]) groups.insert(c["group"].get<std::string>());
  CHECK(groups == std::set<std::string>{"z2^2", "z2^3"});
  std::ifstream file(path);
  REQUIRE(file);
  CHECK(json::parse(file) == j);
  std::remove(path.c_str());
}

TEST_CASE("verify: injected fault is reported with a counterexample") {
  VerifyOptions options;
  options.max_degree = 4;
  options.families = {GroupFamily::B};
  options.mc_samples = 20000;
  options.fault = FaultInjection::ProjSignFlip;
  const auto report = run_verification(options);
  CHECK_FALSE(report.all_passed());
  bool seen = false;
  for (const auto& c : report.checks)
    if (c.name == "harmonic.reconstruction") {
      CHECK_FALSE(c.passed);
      CHECK(c.counterexample.find("reconstructed") != std::string::npos);
      seen = true;
    }
  CHECK(seen);

  options.fault = FaultInjection::None;
  CHECK(run_verification(options).all_passed());
}
