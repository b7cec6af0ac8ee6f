#pragma once

// Clause-set surgery: full subsumption resolution and its inverse
// extension, the full m-expansion built from them, and DP variable
// elimination.  Each operation re-checks its measure bookkeeping on every
// call; a violation is an internal error, not an input error.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fullclauses/clause_set.hpp"
#include "fullclauses/sat.hpp"

namespace fc {

enum class Strictness { strict, non_strict };

struct TransformResult {
  ClauseSet result;
  Strictness strictness = Strictness::non_strict;
};

// Replace the two clauses C∪{v}, C∪{-v} by C.  Strict iff v still occurs
// in a third clause (then n stays, deficiency drops by 1); otherwise v
// disappears and the deficiency is unchanged.
inline TransformResult full_subsumption_resolution(const ClauseSet& f, const Clause& c,
                                                   Var v) {
  if (v <= 0)
    throw std::invalid_argument("resolution: variable must be positive");
  if (c.mentions(v))
    throw std::invalid_argument("resolution: base clause must not mention the pivot");
  const Clause pos = c.with(v);
  const Clause neg = c.with(-v);
  if (!f.contains(pos))
    throw std::invalid_argument("resolution: parent " + pos.to_string() +
                                " not in clause-set");
  if (!f.contains(neg))
    throw std::invalid_argument("resolution: parent " + neg.to_string() +
                                " not in clause-set");
  if (f.contains(c))
    throw std::invalid_argument("resolution: base clause " + c.to_string() +
                                " already in clause-set");

  TransformResult out;
  out.result = f.without_clause(pos).without_clause(neg).with_clause(c);
  out.strictness =
      out.result.has_var(v) ? Strictness::strict : Strictness::non_strict;

  if (out.result.c() != f.c() - 1)
    throw std::logic_error("resolution: clause count must drop by exactly 1");
  const bool strict = out.strictness == Strictness::strict;
  if (out.result.n() != f.n() - (strict ? 0 : 1))
    throw std::logic_error("resolution: variable count inconsistent with strictness");
  if (out.result.deficiency() != f.deficiency() - (strict ? 1 : 0))
    throw std::logic_error("resolution: deficiency inconsistent with strictness");
  return out;
}

// Replace the single clause C by C∪{v}, C∪{-v}.  Strict iff v already
// occurs in F.  For UHIT input the result is UHIT again; this is
// re-verified unless the caller opts out (bulk callers check endpoints).
inline TransformResult full_subsumption_extension(const ClauseSet& f, const Clause& c,
                                                  Var v,
                                                  bool check_uhit_preservation = true) {
  if (v <= 0)
    throw std::invalid_argument("extension: variable must be positive");
  if (c.mentions(v))
    throw std::invalid_argument("extension: clause already mentions the variable");
  if (!f.contains(c))
    throw std::invalid_argument("extension: clause " + c.to_string() +
                                " not in clause-set");
  const Clause pos = c.with(v);
  const Clause neg = c.with(-v);
  if (f.contains(pos) || f.contains(neg))
    throw std::invalid_argument("extension: would duplicate an existing clause");

  TransformResult out;
  out.result = f.without_clause(c).with_clause(pos).with_clause(neg);
  out.strictness = f.has_var(v) ? Strictness::strict : Strictness::non_strict;

  if (out.result.c() != f.c() + 1)
    throw std::logic_error("extension: clause count must grow by exactly 1");
  const bool strict = out.strictness == Strictness::strict;
  if (out.result.n() != f.n() + (strict ? 0 : 1))
    throw std::logic_error("extension: variable count inconsistent with strictness");
  if (out.result.deficiency() != f.deficiency() + (strict ? 1 : 0))
    throw std::logic_error("extension: deficiency inconsistent with strictness");

  if (check_uhit_preservation && is_uhit(f) && !is_uhit(out.result))
    throw std::logic_error("extension: UHIT input produced a non-UHIT result");
  return out;
}

struct ExpansionStep {
  std::vector<Clause> selected_full_clauses;
  Var extension_var = 0;
  std::size_t m = 0;
};

struct ExpansionResult {
  ClauseSet result;
  ExpansionStep step;
};

// Full m-expansion: pick m full clauses and split each along one shared
// fresh variable v = max(var(F)) + 1 -- one non-strict extension followed
// by m-1 strict ones.  Net effect: n+1, c+m, deficiency+m-1, and the full
// clauses of the result are exactly the 2m children.
inline ExpansionResult full_m_expansion(
    const ClauseSet& f, std::size_t m,
    std::optional<std::vector<Clause>> selection = std::nullopt,
    bool check_uhit_preservation = true) {
  if (m == 0) throw std::invalid_argument("expansion: m must be positive");

  std::vector<Clause> selected;
  if (selection) {
    selected = *selection;
    std::sort(selected.begin(), selected.end(), &clause_less);
    if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
      throw std::invalid_argument("expansion: selection contains duplicates");
    if (selected.size() != m)
      throw std::invalid_argument("expansion: selection size differs from m");
    for (const Clause& cl : selected)
      if (!f.contains(cl) || !f.is_full(cl))
        throw std::invalid_argument("expansion: selected clause " + cl.to_string() +
                                    " is not a full clause of the input");
  } else {
    for (const Clause& cl : f.clauses()) {
      if (selected.size() == m) break;
      if (f.is_full(cl)) selected.push_back(cl);
    }
    if (selected.size() < m)
      throw std::invalid_argument("expansion: m exceeds the full-clause count");
  }

  const Var v = f.max_var() + 1;
  const bool input_uhit = check_uhit_preservation && is_uhit(f);

  ClauseSet cur = f;
  for (std::size_t j = 0; j < selected.size(); ++j) {
    const TransformResult step = full_subsumption_extension(
        cur, selected[j], v, /*check_uhit_preservation=*/false);
    const Strictness expected = j == 0 ? Strictness::non_strict : Strictness::strict;
    if (step.strictness != expected)
      throw std::logic_error("expansion: unexpected strictness in step " +
                             std::to_string(j + 1));
    cur = step.result;
  }

  if (cur.n() != f.n() + 1 || cur.c() != f.c() + m ||
      cur.deficiency() != f.deficiency() + static_cast<long long>(m) - 1 ||
      cur.nfc() != 2 * m)
    throw std::logic_error("expansion: measure deltas violated");
  if (input_uhit && !is_uhit(cur))
    throw std::logic_error("expansion: UHIT input produced a non-UHIT result");

  ExpansionResult out;
  out.result = std::move(cur);
  out.step = ExpansionStep{std::move(selected), v, m};
  return out;
}

struct DpResult {
  ClauseSet result;
  // Pairs (C contains v, D contains -v) clashing on a second variable
  // admit no resolvent and contribute nothing; they are counted and the
  // first one kept for diagnostics.
  std::size_t skipped_pairs = 0;
  std::optional<std::pair<Clause, Clause>> first_skipped;
};

// DP-reduction: eliminate v by replacing all clauses on v with the
// resolvents of the pairs that clash only on v; duplicates merge.
inline DpResult dp_reduction(const ClauseSet& f, Var v) {
  if (!f.has_var(v))
    throw std::invalid_argument("dp_reduction: variable " + std::to_string(v) +
                                " does not occur");
  std::vector<Clause> pos, neg, keep;
  for (const Clause& cl : f.clauses()) {
    if (cl.contains(v))
      pos.push_back(cl.without_var(v));
    else if (cl.contains(-v))
      neg.push_back(cl.without_var(v));
    else
      keep.push_back(cl);
  }

  DpResult out;
  for (const Clause& a : pos)
    for (const Clause& b : neg) {
      if (a.clash_count(b) > 0) {
        if (out.skipped_pairs == 0) out.first_skipped = {a.with(v), b.with(-v)};
        ++out.skipped_pairs;
        continue;
      }
      std::vector<Lit> lits = a.literals();
      lits.insert(lits.end(), b.literals().begin(), b.literals().end());
      keep.emplace_back(std::move(lits));
    }
  out.result = ClauseSet(std::move(keep));
  return out;
}

}  // namespace fc
