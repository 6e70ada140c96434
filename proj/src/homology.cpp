#include "kr/homology.hpp"

#include <set>
#include <vector>

#include "kr/errors.hpp"
#include "kr/linalg.hpp"

namespace kr {

namespace {

struct Cell {
  std::size_t gen;
  Monomial mono;
};

struct CellLess {
  bool operator()(const std::pair<std::size_t, Monomial>& a, const std::pair<std::size_t, Monomial>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return monomial_greater(a.second, b.second);
  }
};

// Chain groups C0, C1 split by Z-degree: element (generator g, standard monomial m)
// sits in degree deg(g) + deg(m).
struct Graded {
  std::map<int, std::vector<Cell>> cells;
  std::map<int, std::map<std::pair<std::size_t, Monomial>, std::size_t, CellLess>> index;
};

Graded grade(const std::vector<Generator>& basis, const std::map<int, std::vector<Monomial>>& std_basis) {
  Graded g;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& [d, monos] : std_basis) {
      for (const auto& m : monos) {
        const int deg = basis[i].degree + d;
        auto& list = g.cells[deg];
        g.index[deg].emplace(std::make_pair(i, m), list.size());
        list.push_back({i, m});
      }
    }
  }
  return g;
}

// Rank of d restricted to source degree j, landing in target degree j + c.
std::size_t block_rank(const PolyMatrix& d, const QuotientRing& base, const Graded& src, const Graded& tgt, int j, int c) {
  auto s = src.cells.find(j);
  auto t = tgt.cells.find(j + c);
  if (s == src.cells.end() || t == tgt.cells.end()) return 0;
  const auto& tindex = tgt.index.at(j + c);
  RationalMatrix mat(s->second.size(), t->second.size());
  // Transposed: one row per source cell, so rank is unaffected.
  for (std::size_t r = 0; r < s->second.size(); ++r) {
    const Cell& cell = s->second[r];
    for (std::size_t row = 0; row < d.rows(); ++row) {
      auto it = d.row(row).find(cell.gen);
      if (it == d.row(row).end()) continue;
      const Poly image = base.normal_form(it->second * Poly::term(cell.mono, 1));
      for (const auto& [m, coeff] : image.terms()) {
        auto hit = tindex.find({row, m});
        if (hit == tindex.end()) {
          throw Error(ErrorKind::ValidationError, "differential entry leaves its degree: " + it->second.to_string());
        }
        mat.at(r, hit->second) += coeff;
      }
    }
  }
  return mat.rank();
}

struct Setup {
  Graded c0, c1;
  int c = 0;
  std::vector<int> degrees;
};

Setup prepare(const ExplicitMF& m) {
  const Poly w = verify_factorization(m);
  if (!w.is_zero()) throw Error(ErrorKind::NonzeroPotential, "potential is " + w.to_string());
  const auto std_basis = m.base.standard_basis();  // throws InfiniteDimension
  Setup s;
  s.c = half_potential_degree(m).value_or(0);
  s.c0 = grade(m.basis0, std_basis);
  s.c1 = grade(m.basis1, std_basis);
  std::set<int> degs;
  for (const auto& [d, cells] : s.c0.cells) degs.insert(d);
  for (const auto& [d, cells] : s.c1.cells) degs.insert(d);
  s.degrees.assign(degs.begin(), degs.end());
  return s;
}

HomologyResult assemble(const Setup& s, const std::vector<std::size_t>& rank0, const std::vector<std::size_t>& rank1) {
  // rank0[k] = rank of d0 out of degree k, rank1[k] = rank of d1 out of degree k.
  std::map<int, std::size_t> r0, r1;
  for (std::size_t k = 0; k < s.degrees.size(); ++k) {
    r0[s.degrees[k]] = rank0[k];
    r1[s.degrees[k]] = rank1[k];
  }
  auto lookup = [](const std::map<int, std::size_t>& r, int j) {
    auto it = r.find(j);
    return it == r.end() ? std::size_t{0} : it->second;
  };
  HomologyResult h;
  for (int j : s.degrees) {
    auto dim = [j](const Graded& g) {
      auto it = g.cells.find(j);
      return it == g.cells.end() ? std::size_t{0} : it->second.size();
    };
    const auto h0 = static_cast<std::int64_t>(dim(s.c0) - lookup(r0, j) - lookup(r1, j - s.c));
    const auto h1 = static_cast<std::int64_t>(dim(s.c1) - lookup(r1, j) - lookup(r0, j - s.c));
    h.poincare0 += LaurentPoly::monomial(j, h0);
    h.poincare1 += LaurentPoly::monomial(j, h1);
  }
  return h;
}

}  // namespace

HomologyResult graded_homology_serial(const ExplicitMF& m) {
  const Setup s = prepare(m);
  std::vector<std::size_t> rank0(s.degrees.size()), rank1(s.degrees.size());
  for (std::size_t k = 0; k < s.degrees.size(); ++k) {
    rank0[k] = block_rank(m.d0, m.base, s.c0, s.c1, s.degrees[k], s.c);
    rank1[k] = block_rank(m.d1, m.base, s.c1, s.c0, s.degrees[k], s.c);
  }
  return assemble(s, rank0, rank1);
}

HomologyResult graded_homology(const ExplicitMF& m) {
  const Setup s = prepare(m);
  const auto count = static_cast<long>(s.degrees.size());
  std::vector<std::size_t> rank0(s.degrees.size()), rank1(s.degrees.size());
  bool failed = false;
  std::string message;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < 2 * count; ++k) {
    try {
      const std::size_t at = static_cast<std::size_t>(k % count);
      if (k < count) {
        rank0[at] = block_rank(m.d0, m.base, s.c0, s.c1, s.degrees[at], s.c);
      } else {
        rank1[at] = block_rank(m.d1, m.base, s.c1, s.c0, s.degrees[at], s.c);
      }
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        message = e.what();
      }
    }
  }
  if (failed) throw Error(ErrorKind::ValidationError, message);
  return assemble(s, rank0, rank1);
}

HomologyResult graded_homology(const KoszulMF& m) { return graded_homology(to_explicit(m)); }

namespace {

template <typename F>
HomologyResult sum_over(const MFSum& s, F f) {
  HomologyResult total;
  for (const auto& summand : s.summands) {
    const ExplicitMF e = std::visit(
        [](const auto& x) -> ExplicitMF {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, KoszulMF>) {
            return to_explicit(x);
          } else {
            return x;
          }
        },
        summand);
    const HomologyResult h = f(e);
    total.poincare0 += h.poincare0;
    total.poincare1 += h.poincare1;
  }
  return total;
}

}  // namespace

HomologyResult graded_homology(const MFSum& s) {
  return sum_over(s, [](const ExplicitMF& e) { return graded_homology(e); });
}

HomologyResult graded_homology_serial(const MFSum& s) {
  return sum_over(s, [](const ExplicitMF& e) { return graded_homology_serial(e); });
}

LaurentPoly euler_characteristic(const HomologyResult& h) { return h.poincare0 + h.poincare1; }

LaurentPoly signed_euler_characteristic(const HomologyResult& h) { return h.poincare0 - h.poincare1; }

}  // namespace kr
