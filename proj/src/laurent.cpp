#include "kr/laurent.hpp"

#include <cstdlib>
#include <sstream>

#include "kr/errors.hpp"

namespace kr {

LaurentPoly::LaurentPoly(std::int64_t constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coefficient) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::quantum_integer(int n) {
  LaurentPoly p;
  for (int k = 0; k < n; ++k) p.add_term(n - 1 - 2 * k, 1);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::total() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

int LaurentPoly::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

void LaurentPoly::add_term(int exponent, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::int64_t mag = std::llabs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "q^" << e;
    }
  }
  return out.str();
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::NonExactDivision, "division by the zero Laurent polynomial");
  LaurentPoly rem = num;
  LaurentPoly quot;
  const int lead_e = den.max_exponent();
  const std::int64_t lead_c = den.coefficient(lead_e);
  while (!rem.is_zero()) {
    const int e = rem.max_exponent();
    const std::int64_t c = rem.coefficient(e);
    if (e - lead_e < num.min_exponent() - den.min_exponent() || c % lead_c != 0) {
      throw Error(ErrorKind::NonExactDivision, num.to_string() + " by " + den.to_string());
    }
    const LaurentPoly step = LaurentPoly::monomial(e - lead_e, c / lead_c);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

}  // namespace kr
