#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kr/linalg.hpp"
#include "kr/matrix.hpp"

using namespace kr;

namespace {

Poly X(int i) { return Poly::var(VarId::x(i)); }

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 3 == 0) m.set(i, j, X(1 + static_cast<int>(rng() % 3)) * mpq_class(static_cast<long>(rng() % 5) - 2));
  return m;
}

}  // namespace

TEST_CASE("sparse storage") {
  PolyMatrix m(2, 3);
  m.set(0, 1, X(1));
  m.set(1, 2, Poly());
  CHECK(m.nonzeros() == 1);
  m.add(0, 1, -X(1));
  CHECK(m.nonzeros() == 0);
  CHECK(PolyMatrix::identity(3).nonzeros() == 3);
}

TEST_CASE("serial and parallel products agree") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const PolyMatrix a = random_matrix(rng, 6, 5), b = random_matrix(rng, 5, 7);
    CHECK(multiply(a, b) == multiply_serial(a, b));
  }
}

TEST_CASE("products of repeated entries") {
  // Every entry the same polynomial; each product is formed once but summed per position.
  PolyMatrix a(3, 3), b(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      a.set(i, j, X(1) + X(2));
      b.set(i, j, X(1) - X(2));
    }
  const PolyMatrix p = multiply(a, b);
  CHECK(p.at(2, 1) == 3 * (X(1) * X(1) - X(2) * X(2)));
  CHECK(multiply(PolyMatrix::identity(3), a) == a);
}

TEST_CASE("kronecker and blocks") {
  PolyMatrix a(1, 2), b(2, 1);
  a.set(0, 0, X(1));
  a.set(0, 1, X(2));
  b.set(0, 0, Poly(1));
  b.set(1, 0, X(3));
  const PolyMatrix k = a.kronecker(b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k.at(1, 1) == X(2) * X(3));
  const PolyMatrix blk = block2x2(PolyMatrix::identity(1), PolyMatrix(1, 2), PolyMatrix(2, 1), PolyMatrix::identity(2, X(1)));
  CHECK(blk.at(2, 2) == X(1));
  CHECK(blk.nonzeros() == 3);
  CHECK_THROWS(block2x2(PolyMatrix(1, 1), PolyMatrix(2, 1), PolyMatrix(1, 1), PolyMatrix(1, 1)));
  CHECK_THROWS(multiply(PolyMatrix(1, 2), PolyMatrix(3, 1)));
}

TEST_CASE("reduction modulo a ring") {
  const QuotientRing r = QuotientRing({VarId::x(1)}).with_rule(VarId::x(1), 2, Poly());
  PolyMatrix m(1, 1);
  m.set(0, 0, X(1) * X(1) + X(1));
  CHECK(m.reduced(r).at(0, 0) == X(1));
}

TEST_CASE("rational rank") {
  RationalMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = static_cast<long>(i + j);
  CHECK(m.rank() == 2);
  RationalMatrix id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = mpq_class(1, 3);
  CHECK(id.rank() == 2);
}
