#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/diagram.hpp"
#include "kr/errors.hpp"

using namespace kr;

namespace {

Poly X(int i) { return Poly::var(VarId::x(i)); }
Poly Y(int i) { return Poly::var(VarId::y(i)); }
Poly Z(int i) { return Poly::var(VarId::z(i)); }

std::pair<ErrorKind, std::string> error_of(const std::string& text) {
  try {
    parse_diagram(text);
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  FAIL("parsed without error: " << text);
  return {ErrorKind::ValidationError, ""};
}

}  // namespace

TEST_CASE("parsing") {
  const Diagram c = parse_diagram("n 3\narc x1 x2\nglue x1 x2");
  CHECK(c.n == 3);
  REQUIRE(c.pieces.size() == 1);
  CHECK(c.pieces[0].kind == PieceKind::Arc);
  CHECK(is_closed(c));
  CHECK_FALSE(has_crossings(c));
  const Diagram d = parse_diagram("n 4\ndline d1 d2\nglue d1 d2\n");
  CHECK(d.pieces[0].params[0].is_double);
  CHECK(is_closed(d));
  const Diagram again = parse_diagram(to_dsl(d));
  CHECK(to_dsl(again) == to_dsl(d));
  CHECK(has_crossings(parse_diagram("n 3\nxplus x1 x2 x3 x4\n")));
  CHECK(parse_diagram("# a comment\nn 3\n\narc x1 x2   # trailing\n").pieces.size() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_of("n 3\narc x1 x1\n").first == ErrorKind::DuplicateUse);
  const auto [kind, message] = error_of("n 3\narc x1\n");
  CHECK(kind == ErrorKind::ArityMismatch);
  CHECK(message.find("line 2") != std::string::npos);
  CHECK(error_of("n 3\nfoo x1 x2\n").first == ErrorKind::SyntaxError);
  CHECK(error_of("arc x1 x2\n").first == ErrorKind::SyntaxError);
  CHECK(error_of("n 3\narc x1 d2\n").first == ErrorKind::KindMismatch);
  CHECK(error_of("n 3\narc x1 x2\nglue x1 x3\n").first == ErrorKind::UnknownParameter);
  CHECK(error_of("n 3\narc x1 x2\narc x3 x4\nglue x1 x3\n").first == ErrorKind::OrientationMismatch);
  CHECK(error_of("n 2\ndline d1 d2\n").first == ErrorKind::UnsupportedN);
  CHECK(error_of("n 1\narc x1 x2\n").first == ErrorKind::UnsupportedN);
}

TEST_CASE("primitive factorizations") {
  const KoszulMF arc = build_arc(2, VarId::x(2), VarId::x(1));
  REQUIRE(arc.rows.size() == 1);
  CHECK(arc.rows[0].a == X(1) * X(1) + X(1) * X(2) + X(2) * X(2));
  CHECK(arc.rows[0].b == X(1) - X(2));

  for (int n = 3; n <= 5; ++n) {
    const KoszulMF dl = build_dline(n, ParamName{true, 1}, ParamName{true, 2});
    REQUIRE(dl.rows.size() == 2);
    const Poly f = power_sum_expand(n);
    auto f_at = [&](int yi, int zi) { return f.substitute({{VarId::y(1), Y(yi)}, {VarId::z(1), Z(zi)}}); };
    CHECK(dl.rows[0].b == Y(1) - Y(2));
    CHECK(dl.rows[0].a == exact_div(f_at(1, 1) - f_at(2, 1), Y(1) - Y(2)));
    CHECK(dl.rows[1].b == Z(1) - Z(2));
    CHECK(dl.rows[1].a == exact_div(f_at(2, 1) - f_at(2, 2), Z(1) - Z(2)));

    CHECK(build_vin(n, VarId::x(1), VarId::x(2), ParamName{true, 3}).shift == 0);
    CHECK(build_vout(n, ParamName{true, 3}, VarId::x(1), VarId::x(2)).shift == -1);
    CHECK(build_wide(n, VarId::x(1), VarId::x(2), VarId::x(3), VarId::x(4)).shift == -1);
  }
}

TEST_CASE("gluing") {
  for (int n = 2; n <= 4; ++n) {
    const KoszulMF loop = glue(parse_diagram("n " + std::to_string(n) + "\narc x1 x2\nglue x1 x2\n"));
    REQUIRE(loop.rows.size() == 1);
    CHECK(loop.rows[0].b.is_zero());
    CHECK(potential(loop).is_zero());
  }
  const Diagram open = parse_diagram("n 3\narc x1 x2\narc x3 x4\nglue x2 x3\n");
  CHECK_FALSE(is_closed(open));
  const KoszulMF g = glue(open);
  CHECK(potential(g) == boundary_potential(open));
  CHECK(boundary_potential(open) == X(4).pow(4) - X(1).pow(4));
  CHECK_THROWS_AS(glue(parse_diagram("n 3\nxplus x1 x2 x3 x4\n")), Error);
}

TEST_CASE("crossing complexes") {
  const std::array<ParamName, 4> ps = {ParamName{false, 1}, ParamName{false, 2}, ParamName{false, 3}, ParamName{false, 4}};
  const CrossingComplex pos = crossing_complex(1, 3, ps);
  REQUIRE(pos.objects.count(-1) == 1);
  REQUIRE(pos.objects.count(0) == 1);
  CHECK(pos.objects.at(-1).applied_shift == 3);
  CHECK(pos.objects.at(0).applied_shift == 2);
  CHECK(pos.objects.at(-1).mf.rows.size() == 2);
  const CrossingComplex neg = crossing_complex(-1, 3, ps);
  CHECK(neg.objects.at(0).applied_shift == -2);
  CHECK(neg.objects.at(1).applied_shift == -3);
  for (const auto* cc : {&pos, &neg}) {
    const Poly w0 = potential(cc->objects.begin()->second.mf);
    const Poly w1 = potential(cc->objects.rbegin()->second.mf);
    CHECK(w0 == w1);
    for (const auto& [pos_, obj] : cc->objects) CHECK(obj.mf.parity == 1);
  }
}

TEST_CASE("random diagrams are valid and factor") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Diagram d = random_diagram(rng, 3, 3);
    CHECK_NOTHROW(validate(d));
    CHECK(parse_diagram(to_dsl(d)).pieces.size() == d.pieces.size());
    const KoszulMF m = glue(d);
    CHECK(verify_factorization(to_explicit(m)) == boundary_potential(d));
  }
}
