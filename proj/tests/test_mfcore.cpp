#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kr/diagram.hpp"
#include "kr/errors.hpp"
#include "kr/mfcore.hpp"

using namespace kr;

namespace {

Poly X(int i) { return Poly::var(VarId::x(i)); }

PolyMatrix mat(std::vector<std::vector<Poly>> rows) {
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  return m;
}

std::vector<int> degrees(const std::vector<Generator>& g) {
  std::vector<int> out;
  for (const auto& x : g) out.push_back(x.degree);
  return out;
}

}  // namespace

TEST_CASE("Koszul rows and internal shifts") {
  const KoszulMF arc = koszul_new(pi_poly(2), X(1) - X(2));
  CHECK(arc.rows.front().internal_shift == -1);
  CHECK(potential(arc) == X(1).pow(3) - X(2).pow(3));
  CHECK(potential(koszul_new(Poly(), Poly())).is_zero());
  const KoszulMF k = koszul_new(X(1), X(1).pow(3));
  CHECK(k.rows.front().internal_shift == 2);
  CHECK(potential(k) == X(1).pow(4));
  CHECK(koszul_internal_shift(Poly(), X(1)) == 0);
  CHECK_THROWS_AS(koszul_new_with_degrees(Poly(), X(1), 2, 4, QuotientRing()), Error);
  CHECK(koszul_new_with_degrees(Poly(), X(1), 0, 2, QuotientRing()).rows.front().internal_shift == 1);
}

TEST_CASE("tensor products") {
  const Poly a = X(1), b = X(2), c = X(3), d = X(4);
  const KoszulMF ab = koszul_new(a, b), cd = koszul_new(c, d);
  CHECK(potential(tensor(ab, cd)) == a * b + c * d);
  const ExplicitMF e = to_explicit(tensor(ab, cd));
  CHECK(e.d0 == mat({{a, -d}, {c, b}}));
  CHECK(e.d1 == mat({{b, d}, {-c, a}}));
  CHECK(verify_factorization(e) == a * b + c * d);

  const ExplicitMF unit_first = tensor(unit_explicit(), to_explicit(ab));
  CHECK(unit_first.d0 == to_explicit(ab).d0);
  CHECK(unit_first.d1 == to_explicit(ab).d1);
  CHECK(potential(unit_koszul()).is_zero());
}

TEST_CASE("three rows give the expected 4x4 blocks") {
  const Poly l0 = X(1), l1 = X(2), m0 = X(3), m1 = X(4), n0 = X(5), n1 = X(6);
  const ExplicitMF e = to_explicit(tensor(tensor(koszul_new(l0, l1), koszul_new(m0, m1)), koszul_new(n0, n1)));
  CHECK(e.d0 == mat({{l0, -m1, -n1, 0}, {m0, l1, 0, -n1}, {n0, 0, l1, m1}, {0, n0, -m0, l0}}));
  CHECK(verify_factorization(e) == l0 * l1 + m0 * m1 + n0 * n1);
  CHECK(e.basis0.size() == 4);
  CHECK(e.basis0[1].label == "110");
}

TEST_CASE("translation") {
  const KoszulMF k = tensor(koszul_new(X(1) * X(1), X(2)), koszul_new(X(3), X(4).pow(3)));
  CHECK(translate(translate(k)) == k);
  const ExplicitMF e = to_explicit(k);
  CHECK(translate(translate(e)) == e);
  CHECK(potential(translate(k)) == potential(k));
  CHECK(verify_factorization(translate(e)) == potential(k));

  // K(a;b)<1> matches K(-b;-a){(deg b - deg a)/2} up to labels.
  const Poly a = X(1).pow(3), b = X(2);
  const ExplicitMF lhs = to_explicit(translate(koszul_new(a, b)));
  const ExplicitMF rhs = to_explicit(shift(koszul_new(-b, -a), -2));
  CHECK(lhs.d0 == rhs.d0);
  CHECK(lhs.d1 == rhs.d1);
  CHECK(degrees(lhs.basis0) == degrees(rhs.basis0));
  CHECK(degrees(lhs.basis1) == degrees(rhs.basis1));

  const KoszulMF tr = translate_row(k, 1);
  CHECK(tr.rows[1].a == -X(4).pow(3));
  CHECK(tr.parity == 1);
  CHECK(verify_factorization(to_explicit(tr)) == potential(k));
}

TEST_CASE("grading shifts") {
  const KoszulMF m = koszul_new(X(1), X(2)), n = koszul_new(X(3) * X(3), X(4));
  CHECK(shift(m, 0) == m);
  CHECK(shift(shift(m, 2), -5) == shift(m, -3));
  CHECK(to_explicit(shift(tensor(m, n), 3)) == to_explicit(tensor(shift(m, 3), n)));
  CHECK(to_explicit(shift(tensor(m, n), 3)) == to_explicit(tensor(m, shift(n, 3))));
}

TEST_CASE("potentials of the basic pieces") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(potential(build_arc(n, VarId::x(2), VarId::x(1))) == X(1).pow(n + 1) - X(2).pow(n + 1));
  }
  const Poly f1 = power_sum_at(3, Poly::var(VarId::y(1)), Poly::var(VarId::z(1)));
  const Poly f2 = power_sum_at(3, Poly::var(VarId::y(2)), Poly::var(VarId::z(2)));
  CHECK(potential(build_dline(3, ParamName{true, 1}, ParamName{true, 2})) == f1 - f2);
}

TEST_CASE("factorization check") {
  const KoszulMF wide = build_wide(3, VarId::x(1), VarId::x(2), VarId::x(3), VarId::x(4));
  const KoszulMF arc = build_arc(3, VarId::x(6), VarId::x(5));
  CHECK(verify_factorization(tensor(to_explicit(wide), to_explicit(arc))) == potential(wide) + potential(arc));
  CHECK(verify_factorization_serial(to_explicit(wide)) == potential(wide));

  ExplicitMF bad = to_explicit(wide);
  bad.d1.set(0, 0, -bad.d1.at(0, 0));
  try {
    verify_factorization(bad);
    FAIL("corrupted matrix accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFactorization);
    CHECK(std::string(e.what()).find("entry") != std::string::npos);
  }
}

TEST_CASE("entry degrees") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(half_potential_degree(to_explicit(build_arc(n, VarId::x(2), VarId::x(1)))) == n + 1);
    CHECK(half_potential_degree(to_explicit(build_wide(n, VarId::x(1), VarId::x(2), VarId::x(3), VarId::x(4)))) == n + 1);
  }
  CHECK_FALSE(half_potential_degree(unit_explicit()).has_value());
}

TEST_CASE("bases merge or conflict") {
  const QuotientRing r1 = QuotientRing({VarId::x(1)}).with_rule(VarId::x(1), 2, Poly());
  const QuotientRing r2 = QuotientRing({VarId::x(1)}).with_rule(VarId::x(1), 3, Poly());
  CHECK(merge_bases(r1, r1) == r1);
  CHECK(merge_bases(r1, QuotientRing({VarId::x(2)})).ambient().size() == 2);
  CHECK_THROWS_AS(merge_bases(r1, r2), Error);
}
