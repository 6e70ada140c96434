#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kr/matrix.hpp"
#include "kr/polyring.hpp"

namespace kr {

/// One Koszul row K(a; b). internal_shift is (deg b - deg a) / 2 and is kept
/// as built, even when a later substitution turns an entry into zero.
struct KoszulRow {
  Poly a;
  Poly b;
  int internal_shift = 0;

  friend bool operator==(const KoszulRow&, const KoszulRow&) = default;
};

struct KoszulMF {
  std::vector<KoszulRow> rows;
  QuotientRing base;
  int shift = 0;
  int parity = 0;

  friend bool operator==(const KoszulMF&, const KoszulMF&) = default;
};

struct Generator {
  std::string label;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// (M0 --d0--> M1 --d1--> M0) with d0 of shape |basis1| x |basis0|.
struct ExplicitMF {
  std::vector<Generator> basis0;
  std::vector<Generator> basis1;
  PolyMatrix d0;
  PolyMatrix d1;
  QuotientRing base;

  friend bool operator==(const ExplicitMF&, const ExplicitMF&) = default;
};

using MFObject = std::variant<KoszulMF, ExplicitMF>;

/// Flat direct sum; nested sums are flattened on insertion.
struct MFSum {
  std::vector<MFObject> summands;

  void add(MFObject m) { summands.push_back(std::move(m)); }
  void add(const MFSum& other) { summands.insert(summands.end(), other.summands.begin(), other.summands.end()); }
  std::size_t size() const { return summands.size(); }
};

/// Half the degree difference, for a row whose entries may be zero. A zero
/// entry takes the degree of the other one.
int koszul_internal_shift(const Poly& a, const Poly& b);

/// Throws OddShift.
KoszulMF koszul_new(const Poly& a, const Poly& b, const QuotientRing& base);
KoszulMF koszul_new(const Poly& a, const Poly& b);
/// Variant with explicit entry degrees, for rows whose entries are zero.
KoszulMF koszul_new_with_degrees(const Poly& a, const Poly& b, int deg_a, int deg_b, const QuotientRing& base);

/// Base for a tensor product: union of ambient variables and rules.
/// Throws IncompatibleBase when a shared leader carries different rules.
QuotientRing merge_bases(const QuotientRing& a, const QuotientRing& b);

KoszulMF tensor(const KoszulMF& m, const KoszulMF& n);
ExplicitMF tensor(const ExplicitMF& m, const ExplicitMF& n);

KoszulMF translate(const KoszulMF& m);
ExplicitMF translate(const ExplicitMF& m);
/// Rewrites row i as K(-b; -a){s} and compensates with a parity flip. The
/// factorization is unchanged up to isomorphism.
KoszulMF translate_row(const KoszulMF& m, std::size_t i);

KoszulMF shift(const KoszulMF& m, int by);
ExplicitMF shift(const ExplicitMF& m, int by);

/// Sum of a_i b_i in normal form.
Poly potential(const KoszulMF& m);
/// Throws NotAFactorization.
Poly potential(const ExplicitMF& m);
Poly potential(const MFObject& m);

/// (R -> 0 -> R) over the given base.
ExplicitMF unit_explicit(const QuotientRing& base = QuotientRing());
KoszulMF unit_koszul(const QuotientRing& base = QuotientRing());

ExplicitMF to_explicit(const KoszulMF& m);

/// Returns the potential after checking d1 d0 = w Id and d0 d1 = w Id modulo
/// the base. Throws NotAFactorization naming the failing entry.
Poly verify_factorization(const ExplicitMF& m);
/// Same check through the serial matrix product.
Poly verify_factorization_serial(const ExplicitMF& m);

/// The constant c with deg(entry) = deg(source) - deg(target) + c for every
/// nonzero entry of d0 and d1; nullopt when both matrices vanish. Throws
/// ValidationError on inhomogeneous or inconsistent entries.
std::optional<int> half_potential_degree(const ExplicitMF& m);

std::string describe(const KoszulMF& m);

}  // namespace kr
