#pragma once

// Clause-sets in canonical form, with the measures this library revolves
// around: deficiency c - n, the full-clause count nfc, variable degrees,
// the hitting test, and the exact dyadic clause weight sum.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fullclauses/clause.hpp"

namespace fc {

using u128 = unsigned __int128;

// Exact value of sum 2^(-|C|), stored as numerator / 2^log2_denominator.
// With the denominator pinned to 2^n(F) the numerator of a hitting
// clause-set counts exactly the assignments falsified by some clause, so
// "weight one" and "the subcubes tile the whole cube" are the same test.
struct DyadicWeight {
  u128 numerator = 0;
  unsigned log2_denominator = 0;

  bool is_one() const { return numerator == u128{1} << log2_denominator; }

  std::string to_string() const {
    // Numerators here fit comfortably in 64 bits once reduced; keep the
    // general digits loop anyway.
    u128 x = numerator;
    std::string digits;
    if (x == 0) digits = "0";
    while (x > 0) {
      digits += static_cast<char>('0' + static_cast<int>(x % 10));
      x /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits + "/2^" + std::to_string(log2_denominator);
  }

  friend bool operator==(const DyadicWeight&, const DyadicWeight&) = default;
};

class ClauseSet {
 public:
  ClauseSet() = default;

  explicit ClauseSet(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
    std::sort(clauses_.begin(), clauses_.end(), &clause_less);
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    for (const Clause& c : clauses_)
      for (Lit x : c.literals()) vars_.push_back(var_of(x));
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    degrees_.assign(vars_.size(), 0);
    for (const Clause& c : clauses_)
      for (Lit x : c.literals()) ++degrees_[var_index(var_of(x))];
  }

  static ClauseSet from_literals(const std::vector<std::vector<Lit>>& lits) {
    std::vector<Clause> cls;
    cls.reserve(lits.size());
    for (const auto& l : lits) cls.emplace_back(l);
    return ClauseSet(std::move(cls));
  }

  std::size_t c() const { return clauses_.size(); }
  std::size_t n() const { return vars_.size(); }
  long long deficiency() const {
    return static_cast<long long>(c()) - static_cast<long long>(n());
  }

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<Var>& vars() const { return vars_; }
  bool empty() const { return clauses_.empty(); }

  bool contains(const Clause& c) const {
    return std::binary_search(clauses_.begin(), clauses_.end(), c, &clause_less);
  }

  bool has_var(Var v) const {
    return std::binary_search(vars_.begin(), vars_.end(), v);
  }

  Var max_var() const { return vars_.empty() ? 0 : vars_.back(); }

  int var_degree(Var v) const {
    if (!has_var(v)) return 0;
    return degrees_[var_index(v)];
  }

  // Degrees aligned with vars().
  const std::vector<int>& degrees() const { return degrees_; }

  int min_var_degree() const {
    if (vars_.empty())
      throw std::invalid_argument("min_var_degree: clause-set has no variables");
    return *std::min_element(degrees_.begin(), degrees_.end());
  }

  std::vector<Var> min_degree_vars() const {
    const int m = min_var_degree();
    std::vector<Var> out;
    for (std::size_t j = 0; j < vars_.size(); ++j)
      if (degrees_[j] == m) out.push_back(vars_[j]);
    return out;
  }

  bool is_full(const Clause& cl) const { return cl.size() == n(); }

  std::vector<Clause> full_clauses() const {
    std::vector<Clause> out;
    for (const Clause& cl : clauses_)
      if (is_full(cl)) out.push_back(cl);
    return out;
  }

  std::size_t nfc() const {
    std::size_t count = 0;
    for (const Clause& cl : clauses_)
      if (is_full(cl)) ++count;
    return count;
  }

  // Every two distinct clauses share a clashing literal.
  bool is_hitting() const {
    for (std::size_t i = 0; i < clauses_.size(); ++i)
      for (std::size_t j = i + 1; j < clauses_.size(); ++j)
        if (!clauses_[i].clashes_with(clauses_[j])) return false;
    return true;
  }

  DyadicWeight weight_sum() const {
    if (n() > 96)
      throw std::invalid_argument("weight_sum: more than 96 variables unsupported");
    DyadicWeight w;
    w.log2_denominator = static_cast<unsigned>(n());
    for (const Clause& cl : clauses_) w.numerator += u128{1} << (n() - cl.size());
    return w;
  }

  bool weight_sum_is_one() const { return weight_sum().is_one(); }

  ClauseSet with_clause(const Clause& cl) const {
    std::vector<Clause> cls = clauses_;
    cls.push_back(cl);
    return ClauseSet(std::move(cls));
  }

  ClauseSet without_clause(const Clause& cl) const {
    std::vector<Clause> cls;
    cls.reserve(clauses_.size());
    for (const Clause& other : clauses_)
      if (!(other == cl)) cls.push_back(other);
    return ClauseSet(std::move(cls));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
      if (j) s += ",";
      s += clauses_[j].to_string();
    }
    return s + "}";
  }

  friend bool operator==(const ClauseSet&, const ClauseSet&) = default;

 private:
  std::size_t var_index(Var v) const {
    return static_cast<std::size_t>(
        std::lower_bound(vars_.begin(), vars_.end(), v) - vars_.begin());
  }

  std::vector<Clause> clauses_;  // sorted by clause_less, unique
  std::vector<Var> vars_;        // sorted union of clause variables
  std::vector<int> degrees_;     // aligned with vars_
};

// All 2^n full clauses over variables 1..n.
inline ClauseSet make_An(int n, int cap = 20) {
  if (n < 0) throw std::invalid_argument("make_An: n must be nonnegative");
  if (n > cap) throw std::invalid_argument("make_An: n exceeds the cap");
  std::vector<Clause> cls;
  cls.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<Lit> lits;
    lits.reserve(n);
    for (int v = 1; v <= n; ++v)
      lits.push_back((bits >> (v - 1)) & 1 ? v : -v);
    cls.emplace_back(std::move(lits));
  }
  return ClauseSet(std::move(cls));
}

// Assign v := value.  Clauses satisfied by the assignment disappear, the
// opposite literal is removed elsewhere; duplicates then merge.  A clause
// consisting only of the falsified literal becomes the empty clause.
inline ClauseSet instantiate(const ClauseSet& f, Var v, bool value) {
  if (v <= 0) throw std::invalid_argument("instantiate: variable must be positive");
  const Lit satisfied = value ? v : -v;
  std::vector<Clause> cls;
  for (const Clause& cl : f.clauses()) {
    if (cl.contains(satisfied)) continue;
    cls.push_back(cl.mentions(v) ? cl.without_var(v) : cl);
  }
  return ClauseSet(std::move(cls));
}

// Packed form for n <= 64: bit i of mask/sign corresponds to vars()[i],
// sign bit set means the literal is negative.  An assignment bitmask a
// (bit i = value of vars()[i]) falsifies the clause iff ((a ^ sign) & mask)
// == 0, so the falsifying assignments of a clause form a subcube with
// 2^(n-|C|) points.  Two clauses clash iff (m1 & m2 & (s1 ^ s2)) != 0.
struct PackedClause {
  std::uint64_t mask = 0;
  std::uint64_t sign = 0;
};

inline std::vector<PackedClause> pack(const ClauseSet& f) {
  if (f.n() > 64) throw std::invalid_argument("pack: more than 64 variables");
  std::vector<PackedClause> out;
  out.reserve(f.c());
  const auto& vars = f.vars();
  for (const Clause& cl : f.clauses()) {
    PackedClause p;
    for (Lit x : cl.literals()) {
      const auto idx = static_cast<std::size_t>(
          std::lower_bound(vars.begin(), vars.end(), var_of(x)) - vars.begin());
      p.mask |= std::uint64_t{1} << idx;
      if (!positive(x)) p.sign |= std::uint64_t{1} << idx;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace fc
