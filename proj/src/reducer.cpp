#include "kr/reducer.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "kr/errors.hpp"

namespace kr {

std::string ReductionStep::to_string() const {
  std::ostringstream out;
  out << "[" << summand << "] ";
  switch (kind) {
    case StepKind::Contractible:
      out << "contractible";
      break;
    case StepKind::Exclude:
      out << "exclude " << var.to_string() << " from row " << row << (side == Side::A ? " (a side)" : "");
      break;
    case StepKind::Split:
      out << "split over " << var.to_string();
      break;
    case StepKind::DropLinear:
      out << "drop " << var.to_string();
      break;
  }
  if (rule) out << ": " << Monomial::of(rule->leader, rule->power).to_string() << " -> " << rule->replacement.to_string();
  return out.str();
}

KoszulMF scale_row(const KoszulMF& m, std::size_t i, const mpq_class& c) {
  if (sgn(c) == 0) throw Error(ErrorKind::ZeroScalar, "scale_row by 0");
  KoszulMF out = m;
  KoszulRow& row = out.rows.at(i);
  row.a *= c;
  row.b *= mpq_class(1) / c;
  return out;
}

namespace {

KoszulMF exclude_b_side(const KoszulMF& m, std::size_t i, VarId v) {
  if (i >= m.rows.size()) throw Error(ErrorKind::ValidationError, "row index out of range");
  if (potential(m).contains(v)) {
    throw Error(ErrorKind::VariableInPotential, v.to_string() + " occurs in the potential");
  }
  const Poly b = m.base.normal_form(m.rows[i].b);
  const unsigned d = b.degree_in(v);
  if (d == 0 || !b.coefficient_of(v, d).is_constant()) {
    throw Error(ErrorKind::NotMonicInVariable, b.to_string() + " is not monic in " + v.to_string());
  }
  KoszulMF out;
  out.base = m.base.with_monic_element(b, v);
  out.shift = m.shift;
  out.parity = m.parity;
  for (std::size_t k = 0; k < m.rows.size(); ++k) {
    if (k == i) continue;
    const KoszulRow& r = m.rows[k];
    out.rows.push_back({out.base.normal_form(r.a), out.base.normal_form(r.b), r.internal_shift});
  }
  return out;
}

bool has_constant_entry(const KoszulRow& r) {
  return (!r.a.is_zero() && r.a.is_constant()) || (!r.b.is_zero() && r.b.is_constant());
}

}  // namespace

KoszulMF exclude_variable(const KoszulMF& m, std::size_t i, VarId v, Side side) {
  if (side == Side::A) {
    if (i >= m.rows.size()) throw Error(ErrorKind::ValidationError, "row index out of range");
    return exclude_b_side(translate_row(m, i), i, v);
  }
  return exclude_b_side(m, i, v);
}

std::optional<KoszulMF> eliminate_contractible(const KoszulMF& m) {
  for (const auto& r : m.rows) {
    if (has_constant_entry({m.base.normal_form(r.a), m.base.normal_form(r.b), 0})) return std::nullopt;
  }
  return m;
}

bool variable_is_free(const KoszulMF& m, VarId v) {
  for (const auto& r : m.rows)
    if (r.a.contains(v) || r.b.contains(v)) return false;
  for (const auto& rule : m.base.rules())
    if (rule.leader != v && rule.replacement.contains(v)) return false;
  return true;
}

MFSum split_free_module(const KoszulMF& m, VarId v) {
  const Rule* rule = m.base.rule_for(v);
  if (rule == nullptr) throw Error(ErrorKind::ValidationError, v.to_string() + " has no rule to split over");
  if (!variable_is_free(m, v)) {
    throw Error(ErrorKind::ResidualVariable, v.to_string() + " still occurs in a row or another rule");
  }
  MFSum out;
  const QuotientRing smaller = m.base.without_variable(v);
  for (unsigned k = 0; k < rule->power; ++k) {
    KoszulMF copy = m;
    copy.base = smaller;
    copy.shift += static_cast<int>(k) * v.degree();
    out.add(std::move(copy));
  }
  return out;
}

KoszulMF drop_linear_rule(const KoszulMF& m, VarId v) {
  const Rule* rule = m.base.rule_for(v);
  if (rule == nullptr || rule->power != 1) {
    throw Error(ErrorKind::ValidationError, v.to_string() + " has no linear rule");
  }
  if (!variable_is_free(m, v)) {
    throw Error(ErrorKind::ResidualVariable, v.to_string() + " still occurs in a row or another rule");
  }
  KoszulMF out = m;
  out.base = m.base.without_variable(v);
  return out;
}

namespace {

struct Candidate {
  std::size_t row;
  VarId var;
  Side side;
};

bool monic_in(const Poly& p, VarId v) {
  const unsigned d = p.degree_in(v);
  return d > 0 && p.coefficient_of(v, d).is_constant();
}

std::vector<Candidate> candidates(const KoszulMF& m) {
  const std::set<VarId> in_potential = potential(m).variables();
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    std::set<VarId> vars = m.rows[i].a.variables();
    for (VarId v : m.rows[i].b.variables()) vars.insert(v);
    for (VarId v : vars) {
      if (in_potential.count(v) != 0 || m.base.is_leader(v)) continue;
      if (monic_in(m.rows[i].b, v)) out.push_back({i, v, Side::B});
      if (monic_in(m.rows[i].a, v)) out.push_back({i, v, Side::A});
    }
  }
  return out;
}

struct SearchResult {
  bool found = false;
  bool contractible = false;
  std::size_t rows = 0;
  std::vector<ReductionStep> path;
  KoszulMF state;
};

class ExclusionSearch {
 public:
  ExclusionSearch(std::size_t budget, std::size_t summand) : budget_(budget), summand_(summand) {}

  SearchResult run(const KoszulMF& m) {
    std::vector<ReductionStep> path;
    visit(m, path);
    return best_;
  }

 private:
  bool done() const { return (best_.found && (best_.contractible || best_.rows == 0)) || nodes_ >= budget_; }

  void offer(const KoszulMF& m, const std::vector<ReductionStep>& path, bool contractible) {
    const std::size_t rows = contractible ? 0 : m.rows.size();
    if (best_.found && !(contractible && !best_.contractible) && rows >= best_.rows) return;
    best_ = {true, contractible, rows, path, m};
  }

  void visit(const KoszulMF& m, std::vector<ReductionStep>& path) {
    ++nodes_;
    if (!seen_.insert(describe(m)).second) return;
    if (!eliminate_contractible(m)) {
      path.push_back({StepKind::Contractible, summand_, 0, VarId{}, Side::B, std::nullopt});
      offer(m, path, true);
      path.pop_back();
      return;
    }
    bool any = false;
    for (const Candidate& c : candidates(m)) {
      if (done()) return;
      KoszulMF next;
      try {
        next = exclude_variable(m, c.row, c.var, c.side);
      } catch (const Error&) {
        continue;
      }
      any = true;
      const Rule* rule = next.base.rule_for(c.var);
      path.push_back({StepKind::Exclude, summand_, c.row, c.var, c.side, *rule});
      visit(next, path);
      path.pop_back();
    }
    if (!any) offer(m, path, false);
  }

  std::size_t budget_;
  std::size_t summand_;
  std::size_t nodes_ = 0;
  std::unordered_set<std::string> seen_;
  SearchResult best_;
};

std::optional<VarId> next_free_leader(const KoszulMF& m, bool allow_split) {
  std::vector<VarId> leaders;
  for (const auto& r : m.base.rules()) leaders.push_back(r.leader);
  std::sort(leaders.begin(), leaders.end());
  for (VarId v : leaders) {
    if (!variable_is_free(m, v)) continue;
    const unsigned power = m.base.rule_for(v)->power;
    if (power == 1 || allow_split) return v;
  }
  return std::nullopt;
}

}  // namespace

Reduction auto_reduce(const KoszulMF& m, const ReduceOptions& options) {
  Reduction out;
  std::vector<KoszulMF> work{m};
  std::size_t pos = 0;
  while (pos < work.size()) {
    ExclusionSearch search(options.node_budget, pos);
    SearchResult best = search.run(work[pos]);
    for (const auto& step : best.path) out.trace.steps.push_back(step);
    if (best.contractible) {
      work.erase(work.begin() + static_cast<long>(pos));
      continue;
    }
    KoszulMF current = best.state;
    bool split = false;
    // Splitting a zero-row summand would only rewrite its base as a sum of
    // copies, so quotient rings with higher rules are kept whole there.
    while (auto v = next_free_leader(current, !current.rows.empty())) {
      const Rule rule = *current.base.rule_for(*v);
      if (rule.power == 1) {
        out.trace.steps.push_back({StepKind::DropLinear, pos, 0, *v, Side::B, rule});
        current = drop_linear_rule(current, *v);
        continue;
      }
      out.trace.steps.push_back({StepKind::Split, pos, 0, *v, Side::B, rule});
      MFSum copies = split_free_module(current, *v);
      work.erase(work.begin() + static_cast<long>(pos));
      for (std::size_t k = 0; k < copies.size(); ++k) {
        work.insert(work.begin() + static_cast<long>(pos + k), std::get<KoszulMF>(copies.summands[k]));
      }
      split = true;
      break;
    }
    if (split) continue;
    work[pos] = current;
    ++pos;
  }
  for (auto& k : work) out.result.add(std::move(k));
  return out;
}

MFSum replay(const KoszulMF& m, const ReductionTrace& trace) {
  std::vector<KoszulMF> work{m};
  for (const auto& step : trace.steps) {
    if (step.summand >= work.size()) throw Error(ErrorKind::ValidationError, "trace refers to a missing summand");
    KoszulMF& target = work[step.summand];
    switch (step.kind) {
      case StepKind::Contractible:
        work.erase(work.begin() + static_cast<long>(step.summand));
        break;
      case StepKind::Exclude:
        target = exclude_variable(target, step.row, step.var, step.side);
        break;
      case StepKind::DropLinear:
        target = drop_linear_rule(target, step.var);
        break;
      case StepKind::Split: {
        MFSum copies = split_free_module(target, step.var);
        const std::size_t at = step.summand;
        work.erase(work.begin() + static_cast<long>(at));
        for (std::size_t k = 0; k < copies.size(); ++k) {
          work.insert(work.begin() + static_cast<long>(at + k), std::get<KoszulMF>(copies.summands[k]));
        }
        break;
      }
    }
  }
  MFSum out;
  for (auto& k : work) out.add(std::move(k));
  return out;
}

KoszulMF canonical_form(const KoszulMF& m) {
  KoszulMF out = m;
  for (auto& r : out.rows) {
    r.a = out.base.normal_form(r.a);
    r.b = out.base.normal_form(r.b);
    if (!r.b.is_zero()) {
      const mpq_class c = r.b.leading_coefficient();
      r.a *= c;
      r.b *= mpq_class(1) / c;
    } else if (!r.a.is_zero()) {
      r.a *= mpq_class(1) / r.a.leading_coefficient();
    }
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const KoszulRow& x, const KoszulRow& y) {
    return std::make_tuple(x.a.to_string(), x.b.to_string(), x.internal_shift) <
           std::make_tuple(y.a.to_string(), y.b.to_string(), y.internal_shift);
  });
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& rule : out.base.rules()) {
      if (rule.power == 1 && variable_is_free(out, rule.leader)) {
        out.base = out.base.without_variable(rule.leader);
        changed = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace kr
