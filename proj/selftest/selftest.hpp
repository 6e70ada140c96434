#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kr/diagram.hpp"
#include "kr/homology.hpp"
#include "kr/reducer.hpp"

namespace kr::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

struct Options {
  /// Overrides the upper end of every n range when positive.
  int n_max = 0;
  std::uint64_t seed = 20240611;
  int random_diagrams = 100;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});
std::string format_line(const CriterionResult& r);

// Fixture diagrams.
Diagram circle(int n);
Diagram double_circle(int n);
Diagram theta(int n);
/// Double line with a trivalent bubble: split into two singles and merge back.
Diagram bubble(int n);
/// Merge vertex followed by a split vertex along one double line.
Diagram vertex_pair(int n);
Diagram marked_double_line(int n);
Diagram marked_arc(int n);
Diagram marked_vin(int n);

// Oracles.
/// y^{n+1} + (n+1) sum_i (-1)^i / i * C(n-i, i-1) y^{n+1-2i} z^i in (y1, z1).
Poly power_sum_closed_form(int n);
/// Graded dimension of Q[y, z]/<y^a, z^b> with deg y = 2, deg z = 4.
LaurentPoly monomial_quotient_dimension(int a, int b);

/// Runs the full pipeline: glue, auto_reduce, homology.
HomologyResult pipeline_homology(const Diagram& d);

}  // namespace kr::selftest
