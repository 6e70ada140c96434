#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kr/laurent.hpp"

namespace kr {

enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// A polynomial variable. x and y carry Z-degree 2, z carries 4.
struct VarId {
  VarKind kind = VarKind::X;
  int index = 1;

  static VarId x(int i) { return {VarKind::X, i}; }
  static VarId y(int i) { return {VarKind::Y, i}; }
  static VarId z(int i) { return {VarKind::Z, i}; }

  int degree() const { return kind == VarKind::Z ? 4 : 2; }
  std::string to_string() const;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Sparse exponent vector, sorted by VarId, no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Monomial() = default;
  static Monomial of(VarId v, unsigned e = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(VarId v) const;
  int degree() const { return degree_; }
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;
  Monomial without(VarId v) const;

  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
  int degree_ = 0;
};

/// Graded lex: higher Z-degree first, then the earliest variable in (kind, index)
/// order with a larger exponent wins. Returns true when a is strictly larger.
bool monomial_greater(const Monomial& a, const Monomial& b);

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_greater(a, b); }
};

/// Sparse multivariate polynomial over Q, terms iterated from the leading term down.
class Poly {
 public:
  using Terms = std::map<Monomial, mpq_class, MonomialDescending>;

  Poly() = default;
  Poly(const mpq_class& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(mpq_class(constant)) {}  // NOLINT
  Poly(int constant) : Poly(mpq_class(constant)) {}   // NOLINT

  static Poly var(VarId v);
  static Poly term(const Monomial& m, const mpq_class& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const;
  const mpq_class& leading_coefficient() const;

  std::set<VarId> variables() const;
  bool contains(VarId v) const;
  unsigned degree_in(VarId v) const;
  /// Coefficient of v^e as a polynomial in the remaining variables.
  Poly coefficient_of(VarId v, unsigned e) const;

  bool is_homogeneous() const;
  /// Z-degree of a homogeneous nonzero polynomial; throws otherwise.
  int z_degree() const;
  std::map<int, Poly> homogeneous_components() const;

  Poly pow(unsigned e) const;
  /// Simultaneous substitution of variables by polynomials.
  Poly substitute(const std::map<VarId, Poly>& images) const;
  Poly partial_derivative(VarId v) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const mpq_class& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& c) { return a *= c; }
  friend Poly operator*(const mpq_class& c, Poly a) { return a *= c; }
  friend Poly operator*(int c, Poly a) { return a *= mpq_class(c); }
  friend Poly operator*(Poly a, int c) { return a *= mpq_class(c); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  void add_term(const Monomial& m, const mpq_class& c);

  /// Canonical text, e.g. "x1^2 + 3/2*x1*x2 - z1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// q with q * den == num; throws Error(NonExactDivision) on a nonzero remainder.
Poly exact_div(const Poly& num, const Poly& den);

/// f(s1, s2) with f(x + y, xy) = x^{n+1} + y^{n+1}. s1 is stored as y1, s2 as z1,
/// which gives f the double-line grading (y: 2, z: 4).
Poly power_sum_expand(int n);
/// f(s1, s2) with s1, s2 replaced by arbitrary polynomials.
Poly power_sum_at(int n, const Poly& s1, const Poly& s2);

/// sum_{k=0}^{n} head^k tail^{n-k}; defaults to x1, x2.
Poly pi_poly(int n, VarId head = VarId::x(1), VarId tail = VarId::x(2));

struct UV {
  Poly u;
  Poly v;
};
/// Difference quotients of the wide edge on (x1, x2 | x3, x4) by default.
UV uv_polys(int n, VarId x1 = VarId::x(1), VarId x2 = VarId::x(2), VarId x3 = VarId::x(3),
            VarId x4 = VarId::x(4));

/// A rewrite rule leader^power -> replacement.
struct Rule {
  VarId leader;
  unsigned power = 1;
  Poly replacement;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct NormalFormCache;

/// Q[ambient] / <leader_k^power_k - replacement_k>. Every rule is homogeneous,
/// each leader is distinct, and each replacement is already reduced against the
/// rules before it, so the monomials with every leader below its power span the
/// ring. When no rule's replacement mentions a later leader in a cycle the rules
/// are a Groebner basis for an elimination order and reduction is plain
/// rewriting; otherwise normal forms are computed degree by degree with exact
/// linear algebra.
class QuotientRing {
 public:
  QuotientRing();
  explicit QuotientRing(std::set<VarId> ambient);

  const std::set<VarId>& ambient() const { return ambient_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* rule_for(VarId v) const;
  bool is_leader(VarId v) const { return rule_for(v) != nullptr; }
  bool is_finite() const;

  /// New ring with v^power -> replacement appended. Throws TriangularityViolation.
  QuotientRing with_rule(VarId v, unsigned power, const Poly& replacement) const;
  /// Rule derived from an element c*v^d + p with deg_v p < d: v^d -> -p/c.
  /// Throws NotMonicInVariable when the top v-coefficient is not a rational constant.
  QuotientRing with_monic_element(const Poly& element, VarId v) const;
  QuotientRing without_rule(VarId v) const;
  QuotientRing with_ambient(const std::set<VarId>& more) const;
  QuotientRing without_variable(VarId v) const;

  Poly normal_form(const Poly& p) const;
  bool is_standard(const Monomial& m) const;

  /// Standard monomials of a finite ring grouped by degree.
  std::map<int, std::vector<Monomial>> standard_basis() const;
  LaurentPoly graded_dimension(int shift = 0) const;

  /// True when every rule of each ring lies in the ideal of the other.
  bool same_ideal(const QuotientRing& other) const;
  /// Checks that standard monomials are a basis in every degree up to max_degree.
  bool verify_basis(int max_degree) const;

  std::string to_string() const;
  friend bool operator==(const QuotientRing& a, const QuotientRing& b) {
    return a.ambient_ == b.ambient_ && a.rules_ == b.rules_;
  }

 private:
  bool rules_acyclic() const;
  Poly rewrite_normal_form(const Poly& p) const;
  Poly linear_normal_form(const Poly& p) const;

  std::set<VarId> ambient_;
  std::vector<Rule> rules_;
  bool acyclic_ = true;
  std::shared_ptr<NormalFormCache> cache_;
};

Poly normal_form(const Poly& p, const QuotientRing& ring);
LaurentPoly graded_dimension(const QuotientRing& ring, int shift);

/// Triangular presentation of Q[y1, z1] / <df/dy1, df/dz1> with f = power_sum_expand(n).
QuotientRing jacobi_algebra(int n);

/// Every monomial of Z-degree `degree` in the given variables.
std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree);

}  // namespace kr
