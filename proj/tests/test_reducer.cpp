#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/diagram.hpp"
#include "kr/errors.hpp"
#include "kr/reducer.hpp"

using namespace kr;

namespace {

Poly X(int i) { return Poly::var(VarId::x(i)); }
Poly Y(int i) { return Poly::var(VarId::y(i)); }
Poly Z(int i) { return Poly::var(VarId::z(i)); }

Diagram parse(int n, const std::string& body) { return parse_diagram("n " + std::to_string(n) + "\n" + body); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ValidationError;
}

}  // namespace

TEST_CASE("row scaling") {
  const KoszulMF m = koszul_new(2 * Y(1), Z(1));
  CHECK(scale_row(m, 0, 1) == m);
  const KoszulMF s = scale_row(m, 0, mpq_class(1, 2));
  CHECK(s.rows[0].a == Y(1));
  CHECK(s.rows[0].b == 2 * Z(1));
  CHECK(potential(s) == potential(m));
  CHECK(kind_of([&] { scale_row(m, 0, 0); }) == ErrorKind::ZeroScalar);
}

TEST_CASE("exclusion of a variable") {
  CHECK(kind_of([] { exclude_variable(koszul_new(X(1), X(1)), 0, VarId::x(1)); }) == ErrorKind::VariableInPotential);

  // Marked double line: glue keeps d4 in place of d3, and the two rows in y4, z4 go away.
  const KoszulMF glued = glue(parse(3, "dline d1 d3\ndline d4 d2\nglue d3 d4\n"));
  CHECK(glued.rows.size() == 4);
  KoszulMF m = glued;
  int excluded = 0;
  for (VarId v : {VarId::y(4), VarId::z(4)}) {
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
      try {
        m = exclude_variable(m, i, v);
        ++excluded;
        break;
      } catch (const Error&) {
      }
    }
  }
  CHECK(excluded == 2);
  CHECK(m.rows.size() == 2);
  CHECK(potential(m) == potential(glued));
}

TEST_CASE("trivalent pair becomes the wide edge") {
  for (int n = 3; n <= 4; ++n) {
    const KoszulMF glued = glue(parse(n, "vin x3 x4 d5\nvout d6 x1 x2\nglue d5 d6\n"));
    CHECK(glued.rows.size() == 4);
    CHECK(glued.shift == -1);
    const Reduction r = auto_reduce(glued);
    REQUIRE(r.result.size() == 1);
    const KoszulMF got = canonical_form(std::get<KoszulMF>(r.result.summands[0]));
    const KoszulMF wide = canonical_form(build_wide(n, VarId::x(1), VarId::x(2), VarId::x(3), VarId::x(4)));
    CHECK(got == wide);
    CHECK(got.shift == -1);
  }
}

TEST_CASE("contractible summands") {
  const Poly w = X(1).pow(4);
  CHECK_FALSE(eliminate_contractible(koszul_new(Poly(1), w)).has_value());
  CHECK_FALSE(eliminate_contractible(koszul_new(w, Poly(1))).has_value());
  CHECK_FALSE(eliminate_contractible(tensor(koszul_new(X(2), X(3)), koszul_new(Poly(3), w))).has_value());
  const KoszulMF plain = koszul_new(X(1), X(2));
  REQUIRE(eliminate_contractible(plain).has_value());
  CHECK(*eliminate_contractible(plain) == plain);
}

TEST_CASE("splitting over free variables") {
  // x1 -> x2 is linear: one summand, no shift.
  KoszulMF m = koszul_new(X(2), X(3));
  m.base = m.base.with_ambient({VarId::x(1)}).with_rule(VarId::x(1), 1, X(2));
  const MFSum one = split_free_module(m, VarId::x(1));
  REQUIRE(one.size() == 1);
  CHECK(std::get<KoszulMF>(one.summands[0]).shift == 0);

  KoszulMF q = koszul_new(X(2), X(3));
  q.base = q.base.with_ambient({VarId::x(1), VarId::y(2)}).with_rule(VarId::x(1), 2, X(1) * Y(2));
  CHECK(variable_is_free(q, VarId::x(1)));
  const MFSum two = split_free_module(q, VarId::x(1));
  REQUIRE(two.size() == 2);
  // Basis {1, x1} of degrees 0 and 2.
  CHECK(std::get<KoszulMF>(two.summands[0]).shift == 0);
  CHECK(std::get<KoszulMF>(two.summands[1]).shift == 2);

  KoszulMF r = koszul_new(X(1) * X(2), X(3));
  r.base = r.base.with_rule(VarId::x(1), 2, Poly());
  CHECK_FALSE(variable_is_free(r, VarId::x(1)));
  CHECK(kind_of([&] { split_free_module(r, VarId::x(1)); }) == ErrorKind::ResidualVariable);
}

TEST_CASE("loops reduce to their rings") {
  for (int n = 2; n <= 5; ++n) {
    const Reduction r = auto_reduce(glue(parse(n, "arc x1 x2\nglue x1 x2\n")));
    REQUIRE(r.result.size() == 1);
    const auto& m = std::get<KoszulMF>(r.result.summands[0]);
    CHECK(m.rows.empty());
    CHECK(m.shift == 1 - n);
    CHECK(m.parity == 1);
    REQUIRE(m.base.rules().size() == 1);
    CHECK(m.base.rules()[0].power == static_cast<unsigned>(n));
  }
  for (int n = 3; n <= 5; ++n) {
    const Reduction r = auto_reduce(glue(parse(n, "dline d1 d2\nglue d1 d2\n")));
    REQUIRE(r.result.size() == 1);
    const auto& m = std::get<KoszulMF>(r.result.summands[0]);
    CHECK(m.rows.empty());
    CHECK(m.shift == 4 - 2 * n);
    CHECK(m.parity == 0);
    CHECK(m.base.same_ideal(jacobi_algebra(n)));
  }
}

TEST_CASE("replaying a trace gives the same result") {
  const KoszulMF glued = glue(parse(3, "vout d2 x3 x4\nvin x5 x6 d1\nglue x3 x5\nglue x4 x6\n"));
  const Reduction r = auto_reduce(glued);
  const MFSum again = replay(glued, r.trace);
  REQUIRE(again.size() == r.result.size());
  for (std::size_t i = 0; i < again.size(); ++i)
    CHECK(std::get<KoszulMF>(again.summands[i]) == std::get<KoszulMF>(r.result.summands[i]));
  CHECK_FALSE(r.trace.steps.empty());
  CHECK(r.trace.steps[0].to_string().find("exclude") != std::string::npos);
}

TEST_CASE("canonical forms") {
  const KoszulMF m = tensor(koszul_new(2 * X(1), X(2) * mpq_class(1, 2)), koszul_new(X(3), 3 * X(4)));
  const KoszulMF c = canonical_form(m);
  CHECK(canonical_form(c) == c);
  for (const auto& row : c.rows) CHECK(row.b.leading_coefficient() == 1);
  // b made monic, rows sorted by the text of a: "3*x3" before "x1".
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0].a == 3 * X(3));
  CHECK(c.rows[0].b == X(4));
  CHECK(c.rows[1].a == X(1));
  CHECK(c.rows[1].b == X(2));
  CHECK(potential(c) == potential(m));
  const KoszulMF swapped = tensor(koszul_new(X(3), 3 * X(4)), koszul_new(2 * X(1), X(2) * mpq_class(1, 2)));
  CHECK(canonical_form(swapped) == c);
}
