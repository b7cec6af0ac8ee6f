#pragma once

// Witness builders: the F_k family that realises nfc = s2(k) at deficiency
// k, two fixed deficiency-7 clause-sets, and the resolution chain that
// walks A_4 down through deficiencies 11..8.  Everything built here is
// re-verified through the decision kernel before being handed out.

#include <stdexcept>
#include <string>
#include <vector>

#include "fullclauses/clause_set.hpp"
#include "fullclauses/sat.hpp"
#include "fullclauses/sequences.hpp"
#include "fullclauses/transforms.hpp"
#include "fullclauses/witness.hpp"

namespace fc {

inline ClauseSet make_F1() { return ClauseSet({Clause{1}, Clause{-1}}); }

struct ConstructionTrace {
  u64 k = 0;
  std::vector<u64> chain;          // k, i(k), i(i(k)), ..., 1
  std::vector<ExpansionStep> steps;  // applied bottom-up starting from F_1
  ClauseSet final;
  WitnessReport report;
};

// Replay recorded expansion steps from F_1; used to pin down determinism.
inline ClauseSet replay_steps(const std::vector<ExpansionStep>& steps) {
  ClauseSet cur = make_F1();
  for (const ExpansionStep& s : steps) {
    if (s.extension_var != cur.max_var() + 1)
      throw std::logic_error("replay: recorded extension variable is not the fresh one");
    cur = full_m_expansion(cur, s.m, s.selected_full_clauses,
                           /*check_uhit_preservation=*/false)
              .result;
  }
  return cur;
}

// F_1 = {{1},{-1}}; F_k = full a2(k)-expansion of F_{i(k)}.  Deficiency
// grows to exactly k and the full-clause count lands on s2(k).
inline ConstructionTrace build_Fk(u64 k, u64 cap = 64) {
  if (k == 0) throw std::invalid_argument("build_Fk: k must be positive");
  if (cap > 64) throw std::invalid_argument("build_Fk: cap must stay at or below 64");
  if (k > cap)
    throw std::invalid_argument("build_Fk: k exceeds the cap of " + std::to_string(cap));

  ConstructionTrace trace;
  trace.k = k;
  for (u64 j = k; j != 1; j = index_i(j)) trace.chain.push_back(j);
  trace.chain.push_back(1);

  ClauseSet cur = make_F1();
  for (auto it = trace.chain.rbegin() + 1; it != trace.chain.rend(); ++it) {
    const u64 m = a2(*it);
    ExpansionResult step =
        full_m_expansion(cur, m, std::nullopt, /*check_uhit_preservation=*/false);
    cur = std::move(step.result);
    trace.steps.push_back(std::move(step.step));
  }

  trace.report = inspect(cur);
  if (trace.report.deficiency != static_cast<long long>(k))
    throw std::logic_error("build_Fk: deficiency must equal k");
  if (trace.report.nfc != s2_direct(k))
    throw std::logic_error("build_Fk: full-clause count must equal s2(k)");
  if (!trace.report.is_uhit.value_or(false) || !is_uhit(cur))
    throw std::logic_error("build_Fk: result failed UHIT verification");
  trace.final = std::move(cur);
  return trace;
}

// Fixed deficiency-7 witness, minimally unsatisfiable but not hitting,
// with 9 full clauses.  Transcribed column-by-column from its 4-row
// variable-clause matrix form; each initializer below is one column.
inline ClauseSet witness_mu_def7() {
  return ClauseSet::from_literals({
      {-1, 2, 3, 4},
      {-1, 2, -3, 4},
      {1, -2, 3, 4},
      {1, -2, -3, 4},
      {-1, -2, 3, 4},
      {-1, -2, -3, 4},
      {1, 2},
      {-1, -2, 3, -4},
      {-1, 2, 3, -4},
      {1, -2, 3, -4},
      {-3, -4},
  });
}

// Fixed deficiency-7 witness in UHIT, variable-regular of degree 10.
// Transcribed column-by-column like witness_mu_def7.
inline ClauseSet witness_uhit_def7() {
  return ClauseSet::from_literals({
      {-3, -4},
      {1, -2, 3, -4},
      {-1, 2, 3, -4},
      {1, 2, 3, -4},
      {-1, -2, -3, 4},
      {1, -2, -3, 4},
      {-1, 2, -3, 4},
      {-1, -2, 3},
      {1, -2, 3, 4},
      {-1, 2, 3, 4},
      {1, 2, 4},
  });
}

struct ChainStep {
  ClauseSet set;
  WitnessReport report;
  Clause base;   // empty for the starting point
  Var pivot = 0; // 0 for the starting point
};

// Starting from A_4, four strict full subsumption resolutions with pivot
// variables 1,2,3,4.  Only the pivots are prescribed; the base clause for
// each step is fixed canonically as the lexicographically first legal one,
// which keeps the construction deterministic and lands on min-var-degrees
// 14,13,12,11 at deficiencies 11,10,9,8.
inline std::vector<ChainStep> a4_chain() {
  std::vector<ChainStep> out;
  ClauseSet cur = make_An(4);
  out.push_back({cur, inspect(cur), Clause{}, 0});

  for (Var pivot = 1; pivot <= 4; ++pivot) {
    // Candidate bases come from clauses mentioning the pivot; keep the
    // lexicographically least legal one.
    std::vector<Clause> candidates;
    for (const Clause& cl : cur.clauses()) {
      if (!cl.mentions(pivot)) continue;
      Clause base = cl.without_var(pivot);
      if (!cur.contains(base.with(pivot)) || !cur.contains(base.with(-pivot)))
        continue;
      if (cur.contains(base)) continue;
      candidates.push_back(std::move(base));
    }
    if (candidates.empty())
      throw std::logic_error("a4_chain: no legal resolution for pivot " +
                             std::to_string(pivot));
    const Clause base =
        *std::min_element(candidates.begin(), candidates.end(), &clause_less);

    const TransformResult step = full_subsumption_resolution(cur, base, pivot);
    if (step.strictness != Strictness::strict)
      throw std::logic_error("a4_chain: resolution on pivot " + std::to_string(pivot) +
                             " was not strict");
    cur = step.result;
    WitnessReport report = inspect(cur);
    if (!report.is_uhit.value_or(false))
      throw std::logic_error("a4_chain: intermediate set failed UHIT verification");
    out.push_back({cur, std::move(report), base, pivot});
  }
  return out;
}

}  // namespace fc
