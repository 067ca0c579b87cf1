#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

#include "cli.hpp"
#include "cimset/io.hpp"

using namespace cimset;
using testing_support::fixture;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("cimset_test_" + name)).string();
}

}  // namespace

TEST_CASE("verify on P_{2,2} passes every check") {
  const auto r = run({"verify", "--family", fixture("diag_2_2.json"), "--checks", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("16 vertices") != std::string::npos);
  CHECK(r.out.find("dimension 6") != std::string::npos);
  CHECK(r.out.find("6 neighbors per vertex") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const auto j = run({"--format", "json", "verify", "--family", fixture("diag_2_2.json"), "--checks", "dimension"});
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out)["passed"] == true);
}

TEST_CASE("verify writes replayable certificates") {
  const auto path = temp_path("certs.jsonl");
  const auto r = run({"verify", "--family", fixture("diag_2_1.json"), "--checks", "adjacency,facets", "--certificates", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line); ++count) {
    const auto j = Json::parse(line);
    CHECK(j["verified"] == true);
  }
  CHECK(count == 6 + 4);
  std::remove(path.c_str());
}

TEST_CASE("verify sampling is reproducible") {
  const std::vector<std::string> args{"verify", "--family", fixture("diag_3_1.json"), "--checks", "adjacency",
                                      "--sample", "20", "--seed", "4"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("imset output") {
  const auto empty = run({"imset", "--graph", fixture("p21_empty.json"), "--family", fixture("diag_2_1.json")});
  CHECK(empty.code == 0);
  CHECK(empty.out == "b1 a1 0\nb1 a2 0\nb1 a1,a2 0\n");
  const auto full = run({"imset", "--graph", fixture("p21_a1a2.json"), "--full"});
  CHECK(full.code == 0);
  CHECK(full.out == "a1,a2 0\na1,b1 1\na2,b1 1\na1,a2,b1 1\n");
  const auto j = run({"--format", "json", "imset", "--graph", fixture("p21_a1.json"), "--family", fixture("diag_2_1.json")});
  CHECK(Json::parse(j.out)["imset"][0]["value"] == 1);
}

TEST_CASE("facets output") {
  const auto r = run({"facets", "--family", fixture("diag_2_1.json"), "--child", "b1"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1 -{a1} -{a2} +{a1,a2} >= 0", "0 +{a1} -{a1,a2} >= 0",
                                                 "0 +{a2} -{a1,a2} >= 0", "0 +{a1,a2} >= 0"});
  const auto one = run({"facets", "--family", fixture("diag_2_1.json"), "--child", "b1", "--row", "a2"});
  CHECK(one.out == "0 +{a2} -{a1,a2} >= 0\n");
  CHECK(run({"facets", "--family", fixture("diag_2_1.json"), "--child", "zz"}).code == 1);
}

TEST_CASE("neighbors and enumerate emit JSON lines") {
  const auto r = run({"--format", "json", "neighbors", "--family", fixture("diag_2_1.json"), "--graph", fixture("p21_a1.json")});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  const auto spec = load_family(fixture("diag_2_1.json"));
  for (const auto& l : ls) CHECK(family_contains(spec, graph_from_json(Json::parse(l), spec.ordering_ptr())));

  const auto e = run({"enumerate", "--family", fixture("diag_2_2.json"), "--count"});
  CHECK(e.out == "16\n");
  const auto all = run({"--format", "json", "enumerate", "--family", fixture("ordered_4.json")});
  CHECK(lines(all.out).size() == 64);
  CHECK(run({"enumerate", "--family", fixture("diag_2_2.json"), "--limit", "3"}).code == 1);
}

TEST_CASE("compare-k2 on the worked example") {
  const auto r = run({"--format", "json", "compare-k2", "--scores", fixture("k2_forward.json")});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["exact"]["graph"]["parents"][3] == Json({"a1", "a3"}));
  CHECK(j["k2-forward"]["graph"]["parents"][3] == Json({"a2", "a3"}));
  CHECK(j["k2-forward"]["gap"] == 5.0);
}

TEST_CASE("learn from data") {
  const auto out_path = temp_path("learned.json");
  const auto r = run({"--format", "json", "--threads", "2", "learn", "--data", fixture("small.csv"), "--family",
                      fixture("diag_2_1.json"), "--criterion", "ll", "--method", "all", "--rational", "--out", out_path});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.contains("exact"));
  CHECK(j.contains("k2-backward"));
  CHECK(j["exact"]["exact_score"].is_string());
  // Log-likelihood never prefers fewer parents.
  CHECK(j["exact"]["graph"]["parents"][2] == Json({"a1", "a2"}));
  const auto written = load_graph(out_path);
  CHECK(written.parents(2) == 0b11);
  std::remove(out_path.c_str());

  const auto capped = run({"--format", "json", "learn", "--data", fixture("small.csv"), "--family", fixture("diag_2_1.json"),
                           "--criterion", "ll", "--max-parents", "1"});
  REQUIRE(capped.code == 0);
  CHECK(Json::parse(capped.out)["graph"]["parents"][2].size() == 1);
  CHECK(run({"learn", "--data", fixture("small.csv"), "--family", fixture("diag_2_1.json"), "--max-parents", "1",
             "--rational"})
            .code == 1);
}

TEST_CASE("errors map to exit code 1 with a message on stderr") {
  CHECK(run({}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  const auto unknown = run({"enumerate", "--family", fixture("diag_2_1.json"), "--bogus"});
  CHECK(unknown.code == 1);
  CHECK_FALSE(unknown.err.empty());
  const auto missing = run({"learn", "--family", fixture("diag_2_1.json")});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("error:") != std::string::npos);
  const auto wrong = run({"imset", "--graph", fixture("p21_a1.json"), "--family", fixture("diag_2_2.json")});
  CHECK(wrong.code == 1);
  CHECK(run({"verify", "--family", fixture("diag_2_1.json"), "--checks", "volume"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON outputs round-trip through the loaders") {
  const auto spec = load_family(fixture("fixed_forbidden.json"));
  CHECK(family_from_json(family_to_json(spec)) == spec);
  for (const auto& g : enumerate_family(spec)) CHECK(graph_from_json(graph_to_json(g), spec.ordering_ptr()) == g);
  const auto other = make_ordering({"q"});
  CHECK_THROWS(graph_from_json(graph_to_json(ParentMap::empty(spec.ordering_ptr())), other));
}
