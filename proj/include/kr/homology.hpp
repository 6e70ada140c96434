#pragma once

#include "kr/laurent.hpp"
#include "kr/mfcore.hpp"

namespace kr {

/// Graded dimensions of H at parity 0 and parity 1.
struct HomologyResult {
  LaurentPoly poincare0;
  LaurentPoly poincare1;

  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// Homology of a potential-zero factorization over a finite-dimensional base,
/// computed degree by degree with exact rank computations. The per-degree
/// ranks run on OpenMP threads. Throws NonzeroPotential, InfiniteDimension.
HomologyResult graded_homology(const ExplicitMF& m);
HomologyResult graded_homology(const KoszulMF& m);
HomologyResult graded_homology(const MFSum& s);

/// Single-threaded reference with the same results.
HomologyResult graded_homology_serial(const ExplicitMF& m);
HomologyResult graded_homology_serial(const MFSum& s);

/// poincare0 + poincare1 (no sign over the Z/2 grading).
LaurentPoly euler_characteristic(const HomologyResult& h);
/// poincare0 - poincare1.
LaurentPoly signed_euler_characteristic(const HomologyResult& h);

}  // namespace kr
