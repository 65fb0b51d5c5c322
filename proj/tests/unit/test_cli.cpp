#include "doctest.h"

#include <sstream>

#include <json.hpp>

#include "spancat/cli/cli.hpp"

using spancat::cli::run_cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SPANCAT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("suite reports") {
  const Run r = run({"suite", "spans", "--instance", "pinj", "--max-size", "3", "--samples", "20"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["suite"] == "spans");
  CHECK(j["instance"] == "pinj");
  CHECK(j["totals"]["failed"] == 0);

  SUBCASE("same seed, same bytes") {
    const std::vector<std::string> args{"suite", "rrr", "--instance", "finab", "--samples", "20", "--seed", "11"};
    CHECK(run(args).out == run(args).out);
  }
  SUBCASE("suite flag form") {
    CHECK(run({"suite", "--suite", "bipullback", "--instance", "pinj", "--max-size", "2", "--samples", "5"}).code == 0);
  }
  SUBCASE("text format") {
    const Run t = run({"suite", "goursat", "--samples", "10", "--format", "text"});
    CHECK(t.code == 0);
    CHECK(t.out.find("goursat-roundtrip") != std::string::npos);
  }
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"suite", "nonsense"}).code == 2);
  CHECK(run({"suite", "goursat", "--instance", "pinj"}).code == 2);
  CHECK(run({"suite", "spans", "--instance", "nope"}).code == 2);
  CHECK(run({"suite", "spans", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"fake-pullback", data("missing.json")}).code == 2);
}

TEST_CASE("fake pullback from a file") {
  const Run r = run({"fake-pullback", data("finab_cospan.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& [name, ok] : j["certificate"].items()) CHECK_MESSAGE(ok == true, name);
  CHECK(j["grid"]["objects"]["Q"] == nlohmann::json{{"orders", {2}}});

  SUBCASE("dot") {
    const Run d = run({"fake-pullback", data("identity_cospan.json"), "--format", "dot"});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("digraph", 0) == 0);
  }
  SUBCASE("malformed json reports the position") {
    const Run m = run({"fake-pullback", data("malformed.json")});
    CHECK(m.code == 2);
    CHECK(m.err.find("line") != std::string::npos);
  }
  SUBCASE("instance tag mismatch") {
    CHECK(run({"fake-pullback", data("finab_cospan.json"), "--instance", "pinj"}).code == 2);
  }
}

TEST_CASE("compose from a file") {
  const Run r = run({"compose", data("identity_relations.json")});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["subgroup"]["order"] == 2);

  const Run p = run({"compose", data("pinj_relations.json"), "--instance", "pinj"});
  CHECK(p.code == 0);
}

TEST_CASE("groupoid from a table file") {
  const Run r = run({"suite", "associativity", "--instance", "groupoid:" + data("z2_table.json"), "--samples", "10"});
  CHECK(r.code == 0);
  CHECK(run({"check-axioms", "--instance", "groupoid:" + data("missing.json")}).code == 2);
}

TEST_SUITE_END();
