#include "kr/polyring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <tuple>

#include "kr/errors.hpp"
#include "kr/linalg.hpp"

namespace kr {

std::string VarId::to_string() const {
  const char* names = "xyz";
  return std::string(1, names[static_cast<int>(kind)]) + std::to_string(index);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, unsigned e) {
  Monomial m;
  if (e > 0) {
    m.factors_.emplace_back(v, e);
    m.degree_ = v.degree() * static_cast<int>(e);
  }
  return m;
}

unsigned Monomial::exponent(VarId v) const {
  for (const auto& [var, e] : factors_)
    if (var == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (const auto& [v, e] : factors_) {
    const unsigned d = divisor.exponent(v);
    if (e > d) {
      out.factors_.emplace_back(v, e - d);
      out.degree_ += v.degree() * static_cast<int>(e - d);
    }
  }
  return out;
}

Monomial Monomial::without(VarId v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  out.degree_ = degree_ - v.degree() * static_cast<int>(exponent(v));
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v.to_string();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool monomial_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (ia->first < ib->first) return true;
    if (ib->first < ia->first) return false;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != a.factors().end() && ib == b.factors().end();
}

// -------------------------------------------------------------------- Poly

Poly::Poly(const mpq_class& constant) {
  if (sgn(constant) != 0) terms_.emplace(Monomial{}, constant);
}

Poly Poly::var(VarId v) { return term(Monomial::of(v), 1); }

Poly Poly::term(const Monomial& m, const mpq_class& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::ValidationError, "leading monomial of zero");
  return terms_.begin()->first;
}

const mpq_class& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ValidationError, "leading coefficient of zero");
  return terms_.begin()->second;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return vars;
}

bool Poly::contains(VarId v) const { return degree_in(v) > 0; }

unsigned Poly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

Poly Poly::coefficient_of(VarId v, unsigned e) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == e) out.add_term(m.without(v), c);
  return out;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

int Poly::z_degree() const {
  if (terms_.empty()) throw Error(ErrorKind::ValidationError, "the zero polynomial has no degree");
  if (!is_homogeneous()) throw Error(ErrorKind::ValidationError, "not homogeneous: " + to_string());
  return terms_.begin()->first.degree();
}

std::map<int, Poly> Poly::homogeneous_components() const {
  std::map<int, Poly> parts;
  for (const auto& [m, c] : terms_) parts[m.degree()].terms_.emplace(m, c);
  return parts;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::substitute(const std::map<VarId, Poly>& images) const {
  std::map<std::pair<VarId, unsigned>, Poly> powers;
  auto power_of = [&](VarId v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = images.find(v);
    Poly value = img == images.end() ? term(Monomial::of(v, e), 1) : img->second.pow(e);
    return powers.emplace(key, std::move(value)).first->second;
  };
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m.factors()) t = t * power_of(v, e);
    out += t;
  }
  return out;
}

Poly Poly::partial_derivative(VarId v) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.without(v) * Monomial::of(v, e - 1), c * e);
  }
  return out;
}

void Poly::add_term(const Monomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

namespace {

// Linear merge of two term lists that are both sorted leading term first.
Poly::Terms merge_terms(const Poly::Terms& a, const Poly::Terms& b, int sign) {
  Poly::Terms out;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && monomial_greater(ia->first, ib->first))) {
      out.emplace_hint(out.end(), *ia++);
    } else if (ia == a.end() || monomial_greater(ib->first, ia->first)) {
      out.emplace_hint(out.end(), ib->first, sign > 0 ? ib->second : mpq_class(-ib->second));
      ++ib;
    } else {
      mpq_class c = sign > 0 ? mpq_class(ia->second + ib->second) : mpq_class(ia->second - ib->second);
      if (sgn(c) != 0) out.emplace_hint(out.end(), ia->first, std::move(c));
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.size() < 4) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
  } else {
    terms_ = merge_terms(terms_, other.terms_, 1);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.terms_.size() < 4) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
  } else {
    terms_ = merge_terms(terms_, other.terms_, -1);
  }
  return *this;
}

Poly& Poly::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const mpq_class mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << m.to_string();
    }
  }
  return out.str();
}

Poly exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::NonExactDivision, "division by zero");
  const Monomial& lead = den.leading_monomial();
  const mpq_class& lead_c = den.leading_coefficient();
  Poly rem = num;
  Poly quot;
  while (!rem.is_zero()) {
    const Monomial m = rem.leading_monomial();
    const mpq_class c = rem.leading_coefficient();
    if (!lead.divides(m)) {
      throw Error(ErrorKind::NonExactDivision,
                  "(" + num.to_string() + ") / (" + den.to_string() + ") leaves remainder term " + m.to_string());
    }
    const Poly step = Poly::term(m.quotient(lead), c / lead_c);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

// ------------------------------------------------------------ power sums

Poly power_sum_expand(int n) {
  if (n < 1) throw Error(ErrorKind::UnsupportedN, "power_sum_expand needs n >= 1");
  const Poly s1 = Poly::var(VarId::y(1));
  const Poly s2 = Poly::var(VarId::z(1));
  // Newton: p_k = s1 p_{k-1} - s2 p_{k-2}, p_0 = 2, p_1 = s1.
  Poly prev(2);
  Poly cur = s1;
  for (int k = 2; k <= n + 1; ++k) {
    Poly next = s1 * cur - s2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly power_sum_at(int n, const Poly& s1, const Poly& s2) {
  return power_sum_expand(n).substitute({{VarId::y(1), s1}, {VarId::z(1), s2}});
}

Poly pi_poly(int n, VarId head, VarId tail) {
  if (n < 1) throw Error(ErrorKind::UnsupportedN, "pi_poly needs n >= 1");
  Poly out;
  for (int k = 0; k <= n; ++k)
    out.add_term(Monomial::of(head, k) * Monomial::of(tail, n - k), 1);
  return out;
}

UV uv_polys(int n, VarId x1, VarId x2, VarId x3, VarId x4) {
  const Poly s1_top = Poly::var(x1) + Poly::var(x2);
  const Poly s2_top = Poly::var(x1) * Poly::var(x2);
  const Poly s1_bot = Poly::var(x3) + Poly::var(x4);
  const Poly s2_bot = Poly::var(x3) * Poly::var(x4);
  UV out;
  out.u = exact_div(power_sum_at(n, s1_top, s2_top) - power_sum_at(n, s1_bot, s2_top), s1_top - s1_bot);
  out.v = exact_div(power_sum_at(n, s1_bot, s2_top) - power_sum_at(n, s1_bot, s2_bot), s2_top - s2_bot);
  return out;
}

std::vector<Monomial> monomials_of_degree(const std::vector<VarId>& vars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t i, int left, Monomial acc) {
    if (i == vars.size()) {
      if (left == 0) out.push_back(std::move(acc));
      return;
    }
    const int w = vars[i].degree();
    for (int e = 0; e * w <= left; ++e) rec(i + 1, left - e * w, acc * Monomial::of(vars[i], e));
  };
  rec(0, degree, Monomial{});
  std::sort(out.begin(), out.end(), monomial_greater);
  return out;
}

// ----------------------------------------------------------- QuotientRing

namespace {

// Pivot rows of the degree-D slice of the ideal, columns ordered with
// non-standard monomials first.
struct DegreeSlice {
  std::vector<Monomial> columns;
  std::map<Monomial, std::size_t, MonomialDescending> index;
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t nonstandard = 0;
  bool basis_ok = true;
};

}  // namespace

struct NormalFormCache {
  std::mutex mutex;
  std::map<std::pair<int, std::vector<VarId>>, std::shared_ptr<const DegreeSlice>> slices;
};

QuotientRing::QuotientRing() : cache_(std::make_shared<NormalFormCache>()) {}

QuotientRing::QuotientRing(std::set<VarId> ambient)
    : ambient_(std::move(ambient)), cache_(std::make_shared<NormalFormCache>()) {}

const Rule* QuotientRing::rule_for(VarId v) const {
  for (const auto& r : rules_)
    if (r.leader == v) return &r;
  return nullptr;
}

bool QuotientRing::is_finite() const {
  return std::all_of(ambient_.begin(), ambient_.end(), [this](VarId v) { return is_leader(v); });
}

bool QuotientRing::is_standard(const Monomial& m) const {
  for (const auto& r : rules_)
    if (m.exponent(r.leader) >= r.power) return false;
  return true;
}

QuotientRing QuotientRing::with_rule(VarId v, unsigned power, const Poly& replacement) const {
  auto violation = [&](const std::string& why) {
    return Error(ErrorKind::TriangularityViolation,
                 v.to_string() + "^" + std::to_string(power) + " -> " + replacement.to_string() + ": " + why);
  };
  if (power == 0) throw violation("leader power must be positive");
  if (is_leader(v)) throw violation("variable already has a rule");
  if (!replacement.is_homogeneous()) throw violation("replacement is not homogeneous");
  if (!replacement.is_zero() && replacement.z_degree() != static_cast<int>(power) * v.degree())
    throw violation("replacement degree differs from the leader degree");
  if (replacement.degree_in(v) >= power) throw violation("replacement is not below the leader power");
  for (const auto& [m, c] : replacement.terms())
    if (!is_standard(m)) throw violation("replacement is not reduced by the earlier rules");

  QuotientRing out(*this);
  out.cache_ = std::make_shared<NormalFormCache>();
  out.ambient_.insert(v);
  for (VarId w : replacement.variables()) out.ambient_.insert(w);
  out.rules_.push_back({v, power, replacement});
  out.acyclic_ = out.rules_acyclic();
  return out;
}

QuotientRing QuotientRing::with_monic_element(const Poly& element, VarId v) const {
  const Poly e = normal_form(element);
  const unsigned d = e.degree_in(v);
  if (d == 0) throw Error(ErrorKind::NotMonicInVariable, e.to_string() + " does not involve " + v.to_string());
  const Poly top = e.coefficient_of(v, d);
  if (!top.is_constant()) {
    throw Error(ErrorKind::NotMonicInVariable,
                "top coefficient of " + v.to_string() + " in " + e.to_string() + " is " + top.to_string());
  }
  const mpq_class c = top.constant_term();
  Poly rest = e - Poly::term(Monomial::of(v, d), c);
  rest *= mpq_class(-1) / c;
  return with_rule(v, d, rest);
}

QuotientRing QuotientRing::without_rule(VarId v) const {
  QuotientRing out(*this);
  out.cache_ = std::make_shared<NormalFormCache>();
  std::erase_if(out.rules_, [v](const Rule& r) { return r.leader == v; });
  out.acyclic_ = out.rules_acyclic();
  return out;
}

QuotientRing QuotientRing::with_ambient(const std::set<VarId>& more) const {
  QuotientRing out(*this);
  out.ambient_.insert(more.begin(), more.end());
  out.cache_ = std::make_shared<NormalFormCache>();
  return out;
}

QuotientRing QuotientRing::without_variable(VarId v) const {
  QuotientRing out = without_rule(v);
  out.ambient_.erase(v);
  return out;
}

bool QuotientRing::rules_acyclic() const {
  const std::size_t k = rules_.size();
  std::vector<std::vector<std::size_t>> edges(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && rules_[i].replacement.contains(rules_[j].leader)) edges[i].push_back(j);
  std::vector<int> state(k, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
    state[i] = 1;
    for (std::size_t j : edges[i]) {
      if (state[j] == 1) return false;
      if (state[j] == 0 && !dfs(j)) return false;
    }
    state[i] = 2;
    return true;
  };
  for (std::size_t i = 0; i < k; ++i)
    if (state[i] == 0 && !dfs(i)) return false;
  return true;
}

Poly QuotientRing::rewrite_normal_form(const Poly& p) const {
  Poly work = p;
  Poly result;
  while (!work.is_zero()) {
    const Monomial m = work.leading_monomial();
    const mpq_class c = work.leading_coefficient();
    work.add_term(m, -c);
    const Rule* hit = nullptr;
    for (const auto& r : rules_) {
      if (m.exponent(r.leader) >= r.power) {
        hit = &r;
        break;
      }
    }
    if (hit == nullptr) {
      result.add_term(m, c);
      continue;
    }
    const Monomial rest = m.quotient(Monomial::of(hit->leader, hit->power));
    work += Poly::term(rest, c) * hit->replacement;
  }
  return result;
}

namespace {

std::vector<VarId> slice_variables(const Poly& p, const std::vector<Rule>& rules) {
  std::set<VarId> vars = p.variables();
  for (const auto& r : rules) {
    vars.insert(r.leader);
    for (VarId v : r.replacement.variables()) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

std::shared_ptr<const DegreeSlice> build_slice(int degree, const std::vector<VarId>& vars,
                                               const std::vector<Rule>& rules,
                                               const std::function<bool(const Monomial&)>& is_standard) {
  auto slice = std::make_shared<DegreeSlice>();
  std::vector<Monomial> all = monomials_of_degree(vars, degree);
  for (const auto& m : all)
    if (!is_standard(m)) slice->columns.push_back(m);
  slice->nonstandard = slice->columns.size();
  for (const auto& m : all)
    if (is_standard(m)) slice->columns.push_back(m);
  for (std::size_t i = 0; i < slice->columns.size(); ++i) slice->index.emplace(slice->columns[i], i);

  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> gens;
  for (const auto& r : rules) {
    const Poly g = Poly::term(Monomial::of(r.leader, r.power), 1) - r.replacement;
    const int gdeg = static_cast<int>(r.power) * r.leader.degree();
    for (const auto& mult : monomials_of_degree(vars, degree - gdeg)) {
      std::vector<std::pair<std::size_t, mpq_class>> row;
      for (const auto& [m, c] : g.terms()) row.emplace_back(slice->index.at(m * mult), c);
      gens.push_back(std::move(row));
    }
  }
  RationalMatrix mat(gens.size(), slice->columns.size());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (const auto& [col, c] : gens[r]) mat.at(r, col) += c;
  slice->pivot_cols = mat.rref();
  for (std::size_t r = 0; r < slice->pivot_cols.size(); ++r) {
    std::vector<std::pair<std::size_t, mpq_class>> row;
    for (std::size_t c = 0; c < mat.cols(); ++c)
      if (sgn(mat.at(r, c)) != 0) row.emplace_back(c, mat.at(r, c));
    slice->pivot_rows.push_back(std::move(row));
  }
  slice->basis_ok = slice->pivot_cols.size() == slice->nonstandard &&
                    std::all_of(slice->pivot_cols.begin(), slice->pivot_cols.end(),
                                [&](std::size_t c) { return c < slice->nonstandard; });
  return slice;
}

}  // namespace

Poly QuotientRing::linear_normal_form(const Poly& p) const {
  Poly result;
  const auto standard = [this](const Monomial& m) { return is_standard(m); };
  for (const auto& [degree, part] : p.homogeneous_components()) {
    std::vector<VarId> vars = slice_variables(part, rules_);
    std::shared_ptr<const DegreeSlice> slice;
    {
      std::lock_guard lock(cache_->mutex);
      auto key = std::make_pair(degree, vars);
      auto it = cache_->slices.find(key);
      if (it == cache_->slices.end()) {
        it = cache_->slices.emplace(key, build_slice(degree, vars, rules_, standard)).first;
      }
      slice = it->second;
    }
    if (!slice->basis_ok) {
      throw Error(ErrorKind::ReductionFailed,
                  "standard monomials are not a basis in degree " + std::to_string(degree) + " of " + to_string());
    }
    std::vector<mpq_class> vec(slice->columns.size());
    for (const auto& [m, c] : part.terms()) vec[slice->index.at(m)] += c;
    for (std::size_t r = 0; r < slice->pivot_rows.size(); ++r) {
      const mpq_class factor = vec[slice->pivot_cols[r]];
      if (sgn(factor) == 0) continue;
      for (const auto& [col, c] : slice->pivot_rows[r]) vec[col] -= factor * c;
    }
    for (std::size_t c = 0; c < slice->columns.size(); ++c) {
      if (sgn(vec[c]) == 0) continue;
      if (c < slice->nonstandard) throw Error(ErrorKind::ReductionFailed, "normal form did not reach the standard basis");
      result.add_term(slice->columns[c], vec[c]);
    }
  }
  return result;
}

Poly QuotientRing::normal_form(const Poly& p) const {
  if (rules_.empty() || p.is_zero()) return p;
  bool touched = false;
  for (const auto& [m, c] : p.terms()) {
    if (!is_standard(m)) {
      touched = true;
      break;
    }
  }
  if (!touched) return p;
  return acyclic_ ? rewrite_normal_form(p) : linear_normal_form(p);
}

std::map<int, std::vector<Monomial>> QuotientRing::standard_basis() const {
  if (!is_finite()) {
    throw Error(ErrorKind::InfiniteDimension, to_string() + " has an unbounded variable");
  }
  std::map<int, std::vector<Monomial>> basis;
  std::function<void(std::size_t, Monomial)> rec = [&](std::size_t i, Monomial acc) {
    if (i == rules_.size()) {
      basis[acc.degree()].push_back(std::move(acc));
      return;
    }
    for (unsigned e = 0; e < rules_[i].power; ++e) rec(i + 1, acc * Monomial::of(rules_[i].leader, e));
  };
  rec(0, Monomial{});
  for (auto& [d, ms] : basis) std::sort(ms.begin(), ms.end(), monomial_greater);
  return basis;
}

LaurentPoly QuotientRing::graded_dimension(int shift) const {
  LaurentPoly out;
  for (const auto& [d, ms] : standard_basis())
    out += LaurentPoly::monomial(d + shift, static_cast<std::int64_t>(ms.size()));
  return out;
}

bool QuotientRing::same_ideal(const QuotientRing& other) const {
  auto contained = [](const QuotientRing& from, const QuotientRing& in) {
    for (const auto& r : from.rules_) {
      const Poly g = Poly::term(Monomial::of(r.leader, r.power), 1) - r.replacement;
      if (!in.normal_form(g).is_zero()) return false;
    }
    return true;
  };
  return contained(*this, other) && contained(other, *this);
}

bool QuotientRing::verify_basis(int max_degree) const {
  const std::vector<VarId> vars(ambient_.begin(), ambient_.end());
  const auto standard = [this](const Monomial& m) { return is_standard(m); };
  for (int d = 0; d <= max_degree; d += 2) {
    if (!build_slice(d, vars, rules_, standard)->basis_ok) return false;
  }
  return true;
}

std::string QuotientRing::to_string() const {
  std::string s = "Q[";
  bool first = true;
  for (VarId v : ambient_) {
    if (!first) s += ",";
    s += v.to_string();
    first = false;
  }
  s += "]";
  if (!rules_.empty()) {
    s += "/<";
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (i > 0) s += "; ";
      s += Monomial::of(rules_[i].leader, rules_[i].power).to_string() + " = " + rules_[i].replacement.to_string();
    }
    s += ">";
  }
  return s;
}

Poly normal_form(const Poly& p, const QuotientRing& ring) { return ring.normal_form(p); }

LaurentPoly graded_dimension(const QuotientRing& ring, int shift) { return ring.graded_dimension(shift); }

QuotientRing jacobi_algebra(int n) {
  if (n < 3) throw Error(ErrorKind::UnsupportedN, "jacobi_algebra needs n >= 3");
  const VarId y = VarId::y(1);
  const VarId z = VarId::z(1);
  const Poly f = power_sum_expand(n);
  const Poly fy = f.partial_derivative(y);
  const Poly fz = f.partial_derivative(z);
  // Even n: df/dz is monic in y (degree n-1), then df/dy becomes monic in z.
  // Odd n: df/dy is monic in y (degree n), then df/dz becomes monic in z.
  const Poly& first = (n % 2 == 0) ? fz : fy;
  const Poly& second = (n % 2 == 0) ? fy : fz;
  try {
    const QuotientRing base({y, z});
    return base.with_monic_element(first, y).with_monic_element(second, z);
  } catch (const Error& e) {
    throw Error(ErrorKind::ReductionFailed, std::string("jacobi_algebra: ") + e.what());
  }
}

}  // namespace kr
