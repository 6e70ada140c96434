#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace kr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(KRMF_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("euler and bracket") {
  const std::string circle = write_temp("circle3.moy", "n 3\narc x1 x2\nglue x2 x1\n");
  Run r = run({"euler", circle});
  CHECK(r.code == 0);
  CHECK(r.out == "q^-2 + 1 + q^2\n");
  const std::string dcircle = write_temp("dcircle4.moy", "n 4\ndline d1 d2\nglue d1 d2\n");
  r = run({"bracket", dcircle});
  CHECK(r.code == 0);
  CHECK(r.out == "q^-4 + q^-2 + 2 + q^2 + q^4\n");
}

TEST_CASE("json matches text") {
  const std::string theta =
      write_temp("theta4.moy", "n 4\nvin x1 x2 d1\nvout d2 x3 x4\nglue d1 d2\nglue x3 x1\nglue x4 x2\n");
  const Run text = run({"euler", theta});
  const Run json = run({"euler", theta, "--json"});
  REQUIRE(json.code == 0);
  const cli::ResultDocument doc = cli::from_json(nlohmann::json::parse(json.out));
  CHECK(doc.n == 4);
  CHECK(doc.euler.to_string() + "\n" == text.out);
  CHECK(doc.euler == doc.poincare0 + doc.poincare1);
  CHECK(cli::from_json(cli::to_json(doc)) == doc);

  const Run sign = run({"euler", theta, "--signed-euler"});
  CHECK(sign.out == (doc.poincare0 - doc.poincare1).to_string() + "\n");

  const Run br = run({"bracket", theta, "--json"});
  const auto j = nlohmann::json::parse(br.out);
  CHECK(cli::laurent_from_json(j.at("bracket")) == doc.euler);
}

TEST_CASE("documents round trip") {
  cli::ResultDocument doc;
  doc.n = 5;
  doc.euler = LaurentPoly::monomial(-7, 3) + LaurentPoly(2);
  doc.poincare1 = doc.euler;
  doc.bracket = LaurentPoly::monomial(4, -1);
  doc.steps = 9;
  const auto j = cli::to_json(doc);
  CHECK(j.at("euler").contains("-7"));
  CHECK(cli::from_json(nlohmann::json::parse(j.dump())) == doc);
}

TEST_CASE("reduce shows rows and rules") {
  const std::string bubble = write_temp("bubble3.moy", "n 3\nvout d2 x3 x4\nvin x5 x6 d1\nglue x3 x5\nglue x4 x6\n");
  const Run r = run({"reduce", bubble, "--show-rows"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summand 1") != std::string::npos);
  CHECK(r.out.find("(") != std::string::npos);
  const Run b = run({"build", bubble});
  CHECK(b.code == 0);
  CHECK(b.out.find("potential") != std::string::npos);
  const std::string circle = write_temp("circle4.moy", "n 4\narc x1 x2\nglue x2 x1\n");
  const Run c = run({"reduce", circle, "--show-rows"});
  CHECK(c.out.find("rule x2^4 = 0") != std::string::npos);
  const Run h = run({"homology", circle});
  CHECK(h.out.find("H1 q^-3 + q^-1 + q^1 + q^3") != std::string::npos);
}

TEST_CASE("exit codes") {
  Run r = run({"euler", "missing.moy"});
  CHECK(r.code == 1);
  CHECK(r.err.find("missing.moy") != std::string::npos);
  const std::string bad = write_temp("bad.moy", "n 3\narc x1 x1\n");
  r = run({"euler", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  const std::string open = write_temp("open.moy", "n 3\narc x1 x2\n");
  CHECK(run({"euler", open}).code == 1);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"euler"}).code == 2);
  CHECK(run({"selftest", "--n-max", "nope"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest is deterministic") {
  const Run a = run({"selftest", "--n-max", "3", "--json"});
  const Run b = run({"selftest", "--n-max", "3", "--json"});
  REQUIRE(a.code == 0);
  auto strip = [](nlohmann::json j) {
    for (auto& r : j) r.erase("seconds");
    return j;
  };
  CHECK(strip(nlohmann::json::parse(a.out)) == strip(nlohmann::json::parse(b.out)));
  CHECK(nlohmann::json::parse(a.out).size() == 11);
}
