#include "kr/mfcore.hpp"

#include <sstream>

#include "kr/errors.hpp"

namespace kr {

int koszul_internal_shift(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int diff = b.z_degree() - a.z_degree();
  if (diff % 2 != 0) {
    throw Error(ErrorKind::OddShift, "deg(" + b.to_string() + ") - deg(" + a.to_string() + ") is odd");
  }
  return diff / 2;
}

KoszulMF koszul_new(const Poly& a, const Poly& b, const QuotientRing& base) {
  KoszulMF m;
  std::set<VarId> vars = a.variables();
  for (VarId v : b.variables()) vars.insert(v);
  m.base = base.with_ambient(vars);
  m.rows.push_back({m.base.normal_form(a), m.base.normal_form(b), koszul_internal_shift(a, b)});
  return m;
}

KoszulMF koszul_new(const Poly& a, const Poly& b) { return koszul_new(a, b, QuotientRing()); }

KoszulMF koszul_new_with_degrees(const Poly& a, const Poly& b, int deg_a, int deg_b, const QuotientRing& base) {
  if ((!a.is_zero() && a.z_degree() != deg_a) || (!b.is_zero() && b.z_degree() != deg_b)) {
    throw Error(ErrorKind::ValidationError, "entry degree differs from the declared degree");
  }
  if ((deg_b - deg_a) % 2 != 0) throw Error(ErrorKind::OddShift, "declared degrees differ by an odd number");
  KoszulMF m = koszul_new(a, b, base);
  m.rows.front().internal_shift = (deg_b - deg_a) / 2;
  return m;
}

QuotientRing merge_bases(const QuotientRing& a, const QuotientRing& b) {
  QuotientRing out = a.with_ambient(b.ambient());
  for (const Rule& r : b.rules()) {
    if (const Rule* mine = a.rule_for(r.leader)) {
      if (!(*mine == r)) {
        throw Error(ErrorKind::IncompatibleBase, "conflicting rules for " + r.leader.to_string());
      }
      continue;
    }
    try {
      out = out.with_rule(r.leader, r.power, r.replacement);
    } catch (const Error& e) {
      throw Error(ErrorKind::IncompatibleBase, e.what());
    }
  }
  return out;
}

KoszulMF tensor(const KoszulMF& m, const KoszulMF& n) {
  KoszulMF out;
  out.base = merge_bases(m.base, n.base);
  out.rows = m.rows;
  out.rows.insert(out.rows.end(), n.rows.begin(), n.rows.end());
  out.shift = m.shift + n.shift;
  out.parity = m.parity ^ n.parity;
  return out;
}

namespace {

std::vector<Generator> product_basis(const std::vector<Generator>& left, const std::vector<Generator>& right) {
  std::vector<Generator> out;
  out.reserve(left.size() * right.size());
  for (const auto& l : left)
    for (const auto& r : right) out.push_back({l.label + r.label, l.degree + r.degree});
  return out;
}

}  // namespace

ExplicitMF tensor(const ExplicitMF& m, const ExplicitMF& n) {
  ExplicitMF out;
  out.base = merge_bases(m.base, n.base);
  const std::size_t m0 = m.basis0.size(), m1 = m.basis1.size();
  const std::size_t n0 = n.basis0.size(), n1 = n.basis1.size();

  out.basis0 = product_basis(m.basis0, n.basis0);
  for (auto& g : product_basis(m.basis1, n.basis1)) out.basis0.push_back(std::move(g));
  out.basis1 = product_basis(m.basis1, n.basis0);
  for (auto& g : product_basis(m.basis0, n.basis1)) out.basis1.push_back(std::move(g));

  const PolyMatrix i_m0 = PolyMatrix::identity(m0), i_m1 = PolyMatrix::identity(m1);
  const PolyMatrix i_n0 = PolyMatrix::identity(n0), i_n1 = PolyMatrix::identity(n1);
  // Slots (M0N0, M1N1) and (M1N0, M0N1); the sign sits on d(N1) in d0 and on d(N0) in d1.
  out.d0 = block2x2(m.d0.kronecker(i_n0), i_m1.kronecker(n.d1).negated(),  //
                    i_m0.kronecker(n.d0), m.d1.kronecker(i_n1));
  out.d1 = block2x2(m.d1.kronecker(i_n0), i_m0.kronecker(n.d1),  //
                    i_m1.kronecker(n.d0).negated(), m.d0.kronecker(i_n1));
  out.d0 = out.d0.reduced(out.base);
  out.d1 = out.d1.reduced(out.base);
  return out;
}

KoszulMF translate(const KoszulMF& m) {
  KoszulMF out = m;
  out.parity ^= 1;
  return out;
}

ExplicitMF translate(const ExplicitMF& m) {
  ExplicitMF out;
  out.base = m.base;
  out.basis0 = m.basis1;
  out.basis1 = m.basis0;
  out.d0 = m.d1.negated();
  out.d1 = m.d0.negated();
  return out;
}

KoszulMF translate_row(const KoszulMF& m, std::size_t i) {
  KoszulMF out = m;
  KoszulRow& row = out.rows.at(i);
  const int s = row.internal_shift;
  row = {-m.rows[i].b, -m.rows[i].a, -s};
  out.shift += s;
  out.parity ^= 1;
  return out;
}

KoszulMF shift(const KoszulMF& m, int by) {
  KoszulMF out = m;
  out.shift += by;
  return out;
}

ExplicitMF shift(const ExplicitMF& m, int by) {
  ExplicitMF out = m;
  for (auto& g : out.basis0) g.degree += by;
  for (auto& g : out.basis1) g.degree += by;
  return out;
}

Poly potential(const KoszulMF& m) {
  Poly w;
  for (const auto& r : m.rows) w += r.a * r.b;
  return m.base.normal_form(w);
}

Poly potential(const ExplicitMF& m) { return verify_factorization(m); }

Poly potential(const MFObject& m) {
  return std::visit([](const auto& x) { return potential(x); }, m);
}

ExplicitMF unit_explicit(const QuotientRing& base) {
  ExplicitMF u;
  u.base = base;
  u.basis0 = {{"", 0}};
  u.d0 = PolyMatrix(0, 1);
  u.d1 = PolyMatrix(1, 0);
  return u;
}

KoszulMF unit_koszul(const QuotientRing& base) {
  KoszulMF u;
  u.base = base;
  return u;
}

ExplicitMF to_explicit(const KoszulMF& m) {
  ExplicitMF out = unit_explicit(m.base);
  bool first = true;
  for (const auto& row : m.rows) {
    ExplicitMF k;
    k.base = m.base;
    k.basis0 = {{"0", 0}};
    k.basis1 = {{"1", row.internal_shift}};
    k.d0 = PolyMatrix(1, 1);
    k.d0.set(0, 0, row.a);
    k.d1 = PolyMatrix(1, 1);
    k.d1.set(0, 0, row.b);
    out = first ? k : tensor(out, k);
    first = false;
  }
  out = shift(out, m.shift);
  if (m.parity != 0) out = translate(out);
  return out;
}

namespace {

Poly check_scalar(const PolyMatrix& prod, const QuotientRing& base, const char* name, const Poly* expected) {
  const PolyMatrix r = prod.reduced(base);
  Poly w = expected != nullptr ? *expected : (r.rows() > 0 ? r.at(0, 0) : Poly());
  auto mismatch = [&](std::size_t i, std::size_t j, const Poly& entry, const Poly& want) {
    return Error(ErrorKind::NotAFactorization, std::string(name) + " entry (" + std::to_string(i) + ", " +
                                                   std::to_string(j) + ") is " + entry.to_string() + ", expected " +
                                                   want.to_string());
  };
  // Rows are sparse and hold no zero entries, so only stored entries need looking at.
  for (std::size_t i = 0; i < r.rows(); ++i) {
    const auto& row = r.row(i);
    for (const auto& [j, entry] : row) {
      const Poly want = i == j ? w : Poly();
      if (!(entry == want)) throw mismatch(i, j, entry, want);
    }
    if (!w.is_zero() && i < r.cols() && row.find(i) == row.end()) throw mismatch(i, i, Poly(), w);
  }
  return w;
}

template <typename Mul>
Poly verify_with(const ExplicitMF& m, Mul mul) {
  if (m.d0.rows() != m.basis1.size() || m.d0.cols() != m.basis0.size() || m.d1.rows() != m.basis0.size() ||
      m.d1.cols() != m.basis1.size()) {
    throw Error(ErrorKind::NotAFactorization, "differential shapes do not match the bases");
  }
  const Poly w = check_scalar(mul(m.d1, m.d0), m.base, "d1*d0", nullptr);
  const bool have_w = !m.basis0.empty();
  const Poly w2 = check_scalar(mul(m.d0, m.d1), m.base, "d0*d1", have_w ? &w : nullptr);
  return have_w ? w : w2;
}

}  // namespace

Poly verify_factorization(const ExplicitMF& m) {
  return verify_with(m, [](const PolyMatrix& a, const PolyMatrix& b) { return multiply(a, b); });
}

Poly verify_factorization_serial(const ExplicitMF& m) {
  return verify_with(m, [](const PolyMatrix& a, const PolyMatrix& b) { return multiply_serial(a, b); });
}

std::optional<int> half_potential_degree(const ExplicitMF& m) {
  std::optional<int> c;
  auto scan = [&c](const PolyMatrix& d, const std::vector<Generator>& src, const std::vector<Generator>& tgt) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (const auto& [col, p] : d.row(r)) {
        const int here = p.z_degree() - src[col].degree + tgt[r].degree;
        if (c && *c != here) {
          throw Error(ErrorKind::ValidationError, "differential entry " + p.to_string() + " has inconsistent degree");
        }
        c = here;
      }
    }
  };
  scan(m.d0, m.basis0, m.basis1);
  scan(m.d1, m.basis1, m.basis0);
  return c;
}

std::string describe(const KoszulMF& m) {
  std::ostringstream out;
  out << "K over " << m.base.to_string() << " shift {" << m.shift << "} parity " << m.parity << "\n";
  for (const auto& r : m.rows) {
    out << "  (" << r.a.to_string() << " ; " << r.b.to_string() << ") s=" << r.internal_shift << "\n";
  }
  return out.str();
}

}  // namespace kr
