#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/errors.hpp"
#include "kr/polyring.hpp"

using namespace kr;

namespace {

Poly X(int i) { return Poly::var(VarId::x(i)); }
Poly Y(int i) { return Poly::var(VarId::y(i)); }
Poly Z(int i) { return Poly::var(VarId::z(i)); }

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

TEST_CASE("monomial order is graded, then earliest variable") {
  const Monomial x1 = Monomial::of(VarId::x(1)), x2 = Monomial::of(VarId::x(2)), z1 = Monomial::of(VarId::z(1));
  CHECK(monomial_greater(z1, x1));
  CHECK(monomial_greater(x1, x2));
  CHECK(monomial_greater(x1 * x2, x2 * x2));
  CHECK_FALSE(monomial_greater(x1, x1));
  CHECK((x1 * x1 * x2).degree() == 6);
  CHECK((x1 * x1 * x2).quotient(x1).degree() == 4);
  CHECK((x1 * z1).without(VarId::z(1)) == x1);
}

TEST_CASE("arithmetic and text") {
  const Poly p = X(1) * X(1) + mpq_class(3, 2) * (X(1) * X(2)) - Z(1);
  CHECK(p.to_string() == "x1^2 + 3/2*x1*x2 - z1");
  CHECK((p - p).is_zero());
  CHECK(((X(1) + X(2)) * (X(1) - X(2))) == X(1) * X(1) - X(2) * X(2));
  CHECK(Poly(0).is_zero());
  CHECK((X(1) + 1).is_homogeneous() == false);
  CHECK((X(1) * X(2) + Y(1) * Y(1)).z_degree() == 4);
  CHECK(X(1).pow(3).degree_in(VarId::x(1)) == 3);
}

TEST_CASE("long sums merge like single term additions") {
  Poly a, b;
  for (int i = 0; i < 12; ++i) {
    a += mpq_class(i + 1) * X(1).pow(i) * X(2).pow(11 - i);
    b -= mpq_class(i % 3) * X(1).pow(11 - i) * X(2).pow(i);
  }
  Poly slow = a;
  for (const auto& [m, c] : b.terms()) slow.add_term(m, c);
  CHECK(a + b == slow);
  CHECK((a + b) - b == a);
}

TEST_CASE("exact division") {
  CHECK(exact_div(X(1) * X(1) - X(2) * X(2), X(1) - X(2)) == X(1) + X(2));
  CHECK(exact_div(X(1).pow(3) - X(2).pow(3), X(1) - X(2)) == X(1) * X(1) + X(1) * X(2) + X(2) * X(2));
  CHECK(kind_of([] { exact_div(X(1) * X(1) + X(2), X(1)); }) == ErrorKind::NonExactDivision);
}

TEST_CASE("power sums in s1 = y1, s2 = z1") {
  const Poly s1 = Y(1), s2 = Z(1);
  CHECK(power_sum_expand(1) == s1 * s1 - 2 * s2);
  CHECK(power_sum_expand(2) == s1.pow(3) - 3 * (s1 * s2));
  CHECK(power_sum_expand(3) == s1.pow(4) - 4 * (s1 * s1 * s2) + 2 * (s2 * s2));
  for (int n = 1; n <= 8; ++n) CHECK(power_sum_at(n, X(1) + X(2), X(1) * X(2)) == X(1).pow(n + 1) + X(2).pow(n + 1));
}

TEST_CASE("pi polynomials") {
  CHECK(pi_poly(1) == X(1) + X(2));
  CHECK(pi_poly(2) == X(1) * X(1) + X(1) * X(2) + X(2) * X(2));
  CHECK(pi_poly(3) == exact_div(X(1).pow(4) - X(2).pow(4), X(1) - X(2)));
  CHECK(pi_poly(2, VarId::x(3), VarId::x(5)) * (X(3) - X(5)) == X(3).pow(3) - X(5).pow(3));
}

TEST_CASE("wide edge difference quotients") {
  const UV uv1 = uv_polys(1);
  CHECK(uv1.u == X(1) + X(2) + X(3) + X(4));
  CHECK(uv1.v == Poly(-2));
  const UV uv2 = uv_polys(2);
  const Poly s = X(1) + X(2), t = X(3) + X(4);
  CHECK(uv2.u == s * s + s * t + t * t - 3 * (X(1) * X(2)));
  CHECK(uv2.v == -3 * t);
  for (int n = 1; n <= 8; ++n) {
    const UV uv = uv_polys(n);
    CHECK(uv.u * (X(1) + X(2) - X(3) - X(4)) + uv.v * (X(1) * X(2) - X(3) * X(4)) ==
          X(1).pow(n + 1) + X(2).pow(n + 1) - X(3).pow(n + 1) - X(4).pow(n + 1));
  }
}

TEST_CASE("partial derivatives") {
  CHECK((Y(1).pow(3) * Z(1)).partial_derivative(VarId::y(1)) == 3 * (Y(1) * Y(1) * Z(1)));
  CHECK(Poly(7).partial_derivative(VarId::x(1)).is_zero());
  CHECK(power_sum_expand(3).partial_derivative(VarId::y(1)) == 4 * Y(1).pow(3) - 8 * (Y(1) * Z(1)));
}

TEST_CASE("normal forms by rewriting") {
  const QuotientRing r = QuotientRing({VarId::y(1)}).with_rule(VarId::y(1), 2, Poly());
  CHECK(r.normal_form(Y(1).pow(3)).is_zero());
  const QuotientRing r2 = QuotientRing({VarId::y(1), VarId::y(2)}).with_rule(VarId::y(1), 2, Y(2) * Y(2));
  CHECK(r2.normal_form(Y(1).pow(3)) == Y(1) * Y(2) * Y(2));
  const QuotientRing r3 =
      QuotientRing({VarId::x(4), VarId::y(1), VarId::z(1)}).with_rule(VarId::x(4), 2, Y(1) * X(4) - Z(1));
  CHECK(r3.normal_form(X(4) * X(4)) == Y(1) * X(4) - Z(1));
  CHECK(r3.normal_form(X(4).pow(3)) == r3.normal_form(X(4) * (Y(1) * X(4) - Z(1))));
  CHECK(r3.to_string() == "Q[x4,y1,z1]/<x4^2 = x4*y1 - z1>");
}

TEST_CASE("rules are validated") {
  const QuotientRing base({VarId::y(1), VarId::y(2)});
  CHECK(kind_of([&] { base.with_rule(VarId::y(1), 2, Poly(3)); }) == ErrorKind::TriangularityViolation);
  CHECK(kind_of([&] { base.with_rule(VarId::y(1), 1, Y(1)); }) == ErrorKind::TriangularityViolation);
  const QuotientRing r = base.with_rule(VarId::y(1), 2, Poly());
  CHECK(kind_of([&] { r.with_rule(VarId::y(1), 3, Poly()); }) == ErrorKind::TriangularityViolation);
  CHECK(kind_of([&] { base.with_monic_element(Y(2) * Y(1) + Y(2) * Y(2), VarId::y(1)); }) ==
        ErrorKind::NotMonicInVariable);
  const QuotientRing m = base.with_monic_element(2 * Y(1) * Y(1) - 4 * Y(2) * Y(2), VarId::y(1));
  CHECK(m.rule_for(VarId::y(1))->replacement == 2 * (Y(2) * Y(2)));
}

TEST_CASE("cyclic rules fall back to linear algebra") {
  // y1^2 -> y1 y2 and y2^2 -> y1^2 refer to each other.
  const QuotientRing r = QuotientRing({VarId::y(1), VarId::y(2)})
                             .with_rule(VarId::y(1), 3, Poly())
                             .with_rule(VarId::y(2), 2, Y(1) * Y(1));
  CHECK(r.normal_form(Y(2) * Y(2)) == Y(1) * Y(1));
  CHECK(r.normal_form(Y(2).pow(3)) == r.normal_form(Y(1) * Y(1) * Y(2)));
  CHECK(r.verify_basis(12));
}

TEST_CASE("graded dimensions") {
  const QuotientRing x2 = QuotientRing({VarId::x(1)}).with_rule(VarId::x(1), 2, Poly());
  CHECK(x2.graded_dimension(-1).to_string() == "q^-1 + q^1");
  const QuotientRing x3 = QuotientRing({VarId::x(1)}).with_rule(VarId::x(1), 3, Poly());
  CHECK(x3.graded_dimension(-2).to_string() == "q^-2 + 1 + q^2");
  const QuotientRing yz = QuotientRing({VarId::y(1), VarId::z(1)})
                              .with_rule(VarId::y(1), 3, Poly())
                              .with_rule(VarId::z(1), 2, Poly());
  CHECK(yz.graded_dimension(-4).to_string() == "q^-4 + q^-2 + 2 + q^2 + q^4");
  CHECK(kind_of([] { QuotientRing({VarId::x(1)}).standard_basis(); }) == ErrorKind::InfiniteDimension);
}

TEST_CASE("Jacobi algebras") {
  const QuotientRing j3 = jacobi_algebra(3);
  CHECK(j3.graded_dimension() == LaurentPoly(1) + LaurentPoly::monomial(2) + LaurentPoly::monomial(4));
  const QuotientRing j4 = jacobi_algebra(4);
  CHECK(j4.graded_dimension() ==
        (LaurentPoly(1) + LaurentPoly::monomial(2) + LaurentPoly::monomial(4)) * (LaurentPoly(1) + LaurentPoly::monomial(4)));
  for (int n = 3; n <= 8; ++n) {
    const QuotientRing j = jacobi_algebra(n);
    CHECK(j.graded_dimension().total() == n * (n - 1) / 2);
    CHECK(j.normal_form(power_sum_expand(n).partial_derivative(VarId::y(1))).is_zero());
    CHECK(j.normal_form(power_sum_expand(n).partial_derivative(VarId::z(1))).is_zero());
  }
  // Same ideal, different generators.
  const Poly f = power_sum_expand(4);
  const QuotientRing alt = QuotientRing({VarId::y(1), VarId::z(1)})
                               .with_monic_element(f.partial_derivative(VarId::z(1)), VarId::y(1));
  CHECK(j4.same_ideal(j4));
  CHECK_FALSE(j4.same_ideal(alt));
}

TEST_CASE("monomials of a degree") {
  CHECK(monomials_of_degree({VarId::y(1), VarId::z(1)}, 8).size() == 3);
  CHECK(monomials_of_degree({VarId::x(1), VarId::x(2)}, 6).size() == 4);
  CHECK(monomials_of_degree({VarId::z(1)}, 2).empty());
}
