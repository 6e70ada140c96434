#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kr/mfcore.hpp"

namespace kr {

enum class Side { B, A };

enum class StepKind {
  Contractible,  // summand dropped: some row has a nonzero constant entry
  Exclude,       // row removed, rule added to the base
  Split,         // summand replaced by copies over a smaller base
  DropLinear,    // unreferenced linear rule and its variable removed
};

struct ReductionStep {
  StepKind kind = StepKind::Exclude;
  std::size_t summand = 0;  // position in the working list of summands
  std::size_t row = 0;
  VarId var;
  Side side = Side::B;
  std::optional<Rule> rule;  // inserted (Exclude) or removed (Split, DropLinear)

  std::string to_string() const;
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct Reduction {
  MFSum result;
  ReductionTrace trace;
};

/// Throws ZeroScalar.
KoszulMF scale_row(const KoszulMF& m, std::size_t i, const mpq_class& c);

/// Removes row i using its b entry (or, with Side::A, its a entry) as a rule
/// monic in v. Throws VariableInPotential, NotMonicInVariable, TriangularityViolation.
KoszulMF exclude_variable(const KoszulMF& m, std::size_t i, VarId v, Side side = Side::B);

/// A row with a nonzero constant entry makes the whole Koszul factorization
/// contractible, so the summand vanishes: returns nullopt in that case and m otherwise.
std::optional<KoszulMF> eliminate_contractible(const KoszulMF& m);

/// Splits the base as a free module over the ring without v's rule.
/// Throws ResidualVariable if a row or another rule still mentions v.
MFSum split_free_module(const KoszulMF& m, VarId v);

/// Drops an unreferenced rule v -> p of power 1 together with v.
KoszulMF drop_linear_rule(const KoszulMF& m, VarId v);

struct ReduceOptions {
  /// Upper bound on exclusion states visited while searching for the
  /// presentation with the fewest rows.
  std::size_t node_budget = 20000;
};

/// Deterministic reduction to a direct sum of Koszul factorizations that admit no
/// further exclusion. Candidates are tried by row, then variable, b side before
/// a side; when that order runs into a dead end with rows left, other orders are
/// searched and the first result with the fewest rows wins.
Reduction auto_reduce(const KoszulMF& m, const ReduceOptions& options = {});

/// Applies a recorded trace to m and returns the resulting sum.
MFSum replay(const KoszulMF& m, const ReductionTrace& trace);

/// Rows scaled so b (or a when b = 0) has leading coefficient 1, sorted by text;
/// unreferenced linear rules and their variables are dropped.
KoszulMF canonical_form(const KoszulMF& m);

/// True when no row and no rule other than v's own mentions v.
bool variable_is_free(const KoszulMF& m, VarId v);

}  // namespace kr
