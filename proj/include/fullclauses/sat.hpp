#pragma once

// Decision kernel: exact SAT/UNSAT on desk-scale instances, plus the
// minimal-unsatisfiability and UHIT-membership tests built on it.  Small
// variable counts go through exhaustive bitmask enumeration; larger ones
// use plain DPLL with unit propagation.  Every verdict is exact -- when a
// budget runs out the kernel says so instead of guessing.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullclauses/clause_set.hpp"
#include "fullclauses/witness.hpp"

namespace fc {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Default node budget, overridable via the environment.
inline std::uint64_t default_kernel_budget() {
  if (const char* env = std::getenv("FULLCLAUSES_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw std::invalid_argument("FULLCLAUSES_BUDGET must be a positive integer");
    return v;
  }
  return std::uint64_t{1} << 26;
}

struct KernelBudget {
  std::uint64_t max_nodes = default_kernel_budget();
};

struct Assignment {
  std::map<Var, bool> values;

  bool satisfies(const Clause& cl) const {
    for (Lit x : cl.literals()) {
      const auto it = values.find(var_of(x));
      if (it != values.end() && it->second == positive(x)) return true;
    }
    return false;
  }

  bool satisfies(const ClauseSet& f) const {
    for (const Clause& cl : f.clauses())
      if (!satisfies(cl)) return false;
    return true;
  }
};

enum class SolveStatus { satisfiable, unsatisfiable, budget_exceeded };

struct SolveResult {
  SolveStatus status = SolveStatus::budget_exceeded;
  std::optional<Assignment> model;  // present iff satisfiable
  std::uint64_t nodes = 0;
};

namespace detail {

// Bitmask assignment a (bit i = value of vars()[i]) taken from the packed
// representation; a clause is falsified iff ((a ^ sign) & mask) == 0.
inline SolveResult solve_exhaustive(const ClauseSet& f, std::uint64_t max_nodes) {
  const auto packed = pack(f);
  const auto& vars = f.vars();
  const std::uint64_t total = std::uint64_t{1} << f.n();
  SolveResult res;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (++res.nodes > max_nodes) return res;  // status stays budget_exceeded
    bool falsified = false;
    for (const PackedClause& p : packed)
      if (((a ^ p.sign) & p.mask) == 0) {
        falsified = true;
        break;
      }
    if (!falsified) {
      Assignment model;
      for (std::size_t i = 0; i < vars.size(); ++i)
        model.values[vars[i]] = (a >> i) & 1;
      res.status = SolveStatus::satisfiable;
      res.model = std::move(model);
      return res;
    }
  }
  res.status = SolveStatus::unsatisfiable;
  return res;
}

// DPLL with unit propagation.  Variables are indexed; values are -1
// (unset), 0, 1.  One node = one decision or propagation pass entry.
class Dpll {
 public:
  Dpll(const ClauseSet& f, std::uint64_t max_nodes)
      : vars_(f.vars()), max_nodes_(max_nodes) {
    clauses_.reserve(f.c());
    for (const Clause& cl : f.clauses()) {
      std::vector<int> idxlits;
      idxlits.reserve(cl.size());
      for (Lit x : cl.literals()) {
        const int idx = static_cast<int>(
            std::lower_bound(vars_.begin(), vars_.end(), var_of(x)) - vars_.begin());
        idxlits.push_back(positive(x) ? idx + 1 : -(idx + 1));
      }
      clauses_.push_back(std::move(idxlits));
    }
  }

  SolveResult run() {
    SolveResult res;
    std::vector<int> values(vars_.size(), -1);
    const int verdict = search(values, res.nodes);
    if (verdict < 0) return res;  // budget_exceeded
    if (verdict == 0) {
      res.status = SolveStatus::unsatisfiable;
      return res;
    }
    Assignment model;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      model.values[vars_[i]] = values_at_sat_[i] == 1;
    res.status = SolveStatus::satisfiable;
    res.model = std::move(model);
    return res;
  }

 private:
  // Returns 1 = SAT, 0 = UNSAT, -1 = budget exceeded.
  int search(std::vector<int>& values, std::uint64_t& nodes) {
    if (++nodes > max_nodes_) return -1;

    // Unit propagation to fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& cl : clauses_) {
        int unassigned = 0;
        int unit = 0;
        bool satisfied = false;
        for (int l : cl) {
          const int idx = std::abs(l) - 1;
          if (values[idx] == -1) {
            ++unassigned;
            unit = l;
          } else if (values[idx] == (l > 0 ? 1 : 0)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return 0;  // falsified clause
        if (unassigned == 1) {
          values[std::abs(unit) - 1] = unit > 0 ? 1 : 0;
          changed = true;
        }
      }
    }

    int branch = -1;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == -1) {
        branch = static_cast<int>(i);
        break;
      }
    if (branch == -1) {
      values_at_sat_ = values;  // no clause falsified, all vars set
      return 1;
    }

    for (int phase : {0, 1}) {
      std::vector<int> child = values;
      child[branch] = phase;
      const int verdict = search(child, nodes);
      if (verdict != 0) return verdict;  // SAT or budget
    }
    return 0;
  }

  std::vector<Var> vars_;
  std::vector<std::vector<int>> clauses_;  // literals as +-(index+1)
  std::vector<int> values_at_sat_;
  std::uint64_t max_nodes_ = 0;
};

}  // namespace detail

inline SolveResult solve(const ClauseSet& f, KernelBudget budget = {}) {
  if (f.empty()) {
    SolveResult res;
    res.status = SolveStatus::satisfiable;
    res.model = Assignment{};
    return res;
  }
  if (f.contains(Clause{})) {
    SolveResult res;
    res.status = SolveStatus::unsatisfiable;
    return res;
  }

  SolveResult res;
  if (f.n() <= 25 && (std::uint64_t{1} << f.n()) <= budget.max_nodes)
    res = detail::solve_exhaustive(f, budget.max_nodes);
  else
    res = detail::Dpll(f, budget.max_nodes).run();

  // The kernel is the trust root: models are re-verified before return.
  if (res.status == SolveStatus::satisfiable) {
    for (Var v : f.vars())
      if (!res.model->values.count(v))
        throw std::logic_error("solver model does not cover all variables");
    if (!res.model->satisfies(f))
      throw std::logic_error("solver produced an invalid model");
  }
  return res;
}

inline bool is_satisfiable(const ClauseSet& f, KernelBudget budget = {}) {
  const SolveResult res = solve(f, budget);
  if (res.status == SolveStatus::budget_exceeded)
    throw BudgetExceeded("satisfiability undecided within node budget");
  return res.status == SolveStatus::satisfiable;
}

inline bool is_unsatisfiable(const ClauseSet& f, KernelBudget budget = {}) {
  return !is_satisfiable(f, budget);
}

// Minimally unsatisfiable: UNSAT, and removing any single clause gives SAT
// (single removals suffice since satisfiability is monotone under removal).
inline bool is_mu(const ClauseSet& f, KernelBudget budget = {}) {
  if (!is_unsatisfiable(f, budget)) return false;
  for (const Clause& cl : f.clauses())
    if (!is_satisfiable(f.without_clause(cl), budget)) return false;
  return true;
}

// Hitting clause-sets with this many variables or fewer are cross-checked
// against the solver: for hitting F, weight one must coincide with UNSAT.
inline constexpr std::size_t kUhitCrossCheckMaxVars = 12;

// UHIT membership: hitting and total weight 1.  For small hitting sets the
// equivalence with unsatisfiability is re-verified through the solver; a
// disagreement would mean a broken kernel and is treated as such.
inline bool is_uhit(const ClauseSet& f, KernelBudget budget = {}) {
  const bool hitting = f.is_hitting();
  const bool weight_one = f.weight_sum_is_one();
  if (hitting && f.n() <= kUhitCrossCheckMaxVars) {
    const SolveResult res = solve(f, budget);
    if (res.status != SolveStatus::budget_exceeded) {
      const bool unsat = res.status == SolveStatus::unsatisfiable;
      if (unsat != weight_one)
        throw std::logic_error(
            "hitting clause-set where weight-one and unsatisfiability disagree");
    }
  }
  return hitting && weight_one;
}

// Full report: structural measures always, kernel verdicts where the
// budget allows (absent fields mean "undecided within budget").
inline WitnessReport inspect(const ClauseSet& f, KernelBudget budget = {}) {
  WitnessReport r = basic_report(f);
  r.is_uhit = is_uhit(f, budget);
  const SolveResult res = solve(f, budget);
  if (res.status != SolveStatus::budget_exceeded) {
    r.is_unsat = res.status == SolveStatus::unsatisfiable;
    if (!*r.is_unsat) {
      r.is_mu = false;
    } else {
      try {
        r.is_mu = is_mu(f, budget);
      } catch (const BudgetExceeded&) {
        // leave is_mu unset
      }
    }
  }
  return r;
}

}  // namespace fc
