#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/diagram.hpp"
#include "kr/errors.hpp"
#include "kr/moybracket.hpp"

using namespace kr;

namespace {

LaurentPoly br(int n, const std::string& body) { return bracket(parse_diagram("n " + std::to_string(n) + "\n" + body)); }

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(quantum_integer(0).is_zero());
  CHECK(quantum_integer(1) == LaurentPoly(1));
  CHECK(quantum_integer(2).to_string() == "q^-1 + q^1");
  CHECK(quantum_integer(3).to_string() == "q^-2 + 1 + q^2");
  CHECK(double_loop_value(4).to_string() == "q^-4 + q^-2 + 2 + q^2 + q^4");
}

TEST_CASE("loops") {
  for (int n = 2; n <= 6; ++n) CHECK(br(n, "arc x1 x2\nglue x1 x2\n") == quantum_integer(n));
  for (int n = 3; n <= 6; ++n) CHECK(br(n, "dline d1 d2\nglue d1 d2\n") == double_loop_value(n));
  CHECK(br(3, "arc x1 x2\narc x3 x4\nglue x1 x2\nglue x3 x4\n") == quantum_integer(3) * quantum_integer(3));
}

TEST_CASE("theta along every path") {
  for (int n = 3; n <= 6; ++n) {
    const auto graphs = moy_graphs(parse_diagram("n " + std::to_string(n) +
                                                 "\nvin x1 x2 d1\nvout d2 x3 x4\nglue d1 d2\nglue x3 x1\nglue x4 x2\n"));
    REQUIRE(graphs.size() == 1);
    const auto rules = applicable_rules(graphs[0]);
    CHECK(rules.size() >= 2);
    bool digon = false, bigon = false;
    for (const auto& m : rules) {
      digon = digon || m.rule == MoyRule::Digon;
      bigon = bigon || m.rule == MoyRule::Bigon;
    }
    CHECK(digon);
    CHECK(bigon);
    const auto values = bracket_all_paths(graphs[0]);
    REQUIRE(values.size() == 1);
    CHECK(values[0] == quantum_integer(n) * quantum_integer(n - 1));
  }
}

TEST_CASE("square relation") {
  // Two wide edges stacked and closed up: [2]^2 [n][n-1]/[2].
  const std::string two_wides = "wide x1 x2 x3 x4\nwide x5 x6 x7 x8\nglue x3 x5\nglue x4 x6\nglue x7 x1\nglue x8 x2\n";
  for (int n = 3; n <= 5; ++n) {
    const LaurentPoly q2 = quantum_integer(2);
    CHECK(br(n, two_wides) == q2 * q2 * double_loop_value(n));
  }
}

TEST_CASE("crossings") {
  for (int n = 2; n <= 4; ++n) {
    // A kink and a Reidemeister II pair evaluate like plain loops.
    CHECK(br(n, "xplus x1 x2 x3 x4\nglue x1 x3\nglue x2 x4\n") == quantum_integer(n));
    CHECK(br(n, "xminus x1 x2 x3 x4\nglue x1 x3\nglue x2 x4\n") == quantum_integer(n));
  }
}

TEST_CASE("open diagrams are rejected") {
  CHECK_THROWS_AS(br(3, "arc x1 x2\n"), Error);
}
