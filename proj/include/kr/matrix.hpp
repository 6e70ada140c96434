#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kr/polyring.hpp"

namespace kr {

/// Row-sparse matrix of polynomials. Zero entries are never stored.
class PolyMatrix {
 public:
  using Row = std::map<std::size_t, Poly>;

  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static PolyMatrix identity(std::size_t size, const Poly& scalar = Poly(1));

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const;

  Poly at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Poly& value);
  void add(std::size_t r, std::size_t c, const Poly& value);

  PolyMatrix negated() const;
  PolyMatrix reduced(const QuotientRing& ring) const;
  /// A (x) B with index (i, j) -> i * B.rows() + j.
  PolyMatrix kronecker(const PolyMatrix& other) const;
  /// Places `block` with its top-left corner at (r0, c0).
  void paste(const PolyMatrix& block, std::size_t r0, std::size_t c0);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

/// Reference product, one row after another.
PolyMatrix multiply_serial(const PolyMatrix& a, const PolyMatrix& b);
/// Same product with output rows distributed over OpenMP threads. Each row is
/// computed independently, so the result is identical to multiply_serial.
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// [[a, b], [c, d]] from four blocks with matching shapes.
PolyMatrix block2x2(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d);

}  // namespace kr
