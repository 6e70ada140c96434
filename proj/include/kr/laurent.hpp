#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace kr {

/// Integer Laurent polynomial in q. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t constant);

  static LaurentPoly monomial(int exponent, std::int64_t coefficient = 1);
  /// [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0.
  static LaurentPoly quantum_integer(int n);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  /// Value at q = 1.
  std::int64_t total() const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// "q^-2 + 1 + q^2": increasing exponent, unit coefficients elided.
  std::string to_string() const;

 private:
  void add_term(int exponent, std::int64_t coefficient);
  Terms terms_;
};

/// Exact quotient; throws Error(NonExactDivision) when the remainder is nonzero.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace kr
