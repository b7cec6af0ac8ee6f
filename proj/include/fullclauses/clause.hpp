#pragma once

// Literals are nonzero ints (-v is the complement of v), clauses are
// clash-free literal sets kept sorted by variable with the negative phase
// first.  That order makes clash detection a linear merge and gives every
// clause-set a canonical form for free.

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

using Lit = int;
using Var = int;

inline Var var_of(Lit x) { return x < 0 ? -x : x; }
inline bool positive(Lit x) { return x > 0; }
inline Lit complement(Lit x) { return -x; }

inline bool lit_less(Lit a, Lit b) {
  const Var va = var_of(a), vb = var_of(b);
  return va != vb ? va < vb : a < b;
}

class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

  explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    for (Lit x : lits_)
      if (x == 0) throw std::invalid_argument("clause: literal 0 is not allowed");
    std::sort(lits_.begin(), lits_.end(), &lit_less);
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
    for (std::size_t j = 0; j + 1 < lits_.size(); ++j)
      if (var_of(lits_[j]) == var_of(lits_[j + 1]))
        throw std::invalid_argument("clause: clashing literals on variable " +
                                    std::to_string(var_of(lits_[j])));
  }

  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const std::vector<Lit>& literals() const { return lits_; }

  bool contains(Lit x) const {
    return std::binary_search(lits_.begin(), lits_.end(), x, &lit_less);
  }
  bool mentions(Var v) const { return contains(v) || contains(-v); }

  // The literal this clause carries on v, if any.
  std::optional<Lit> literal_on(Var v) const {
    if (contains(v)) return v;
    if (contains(-v)) return -v;
    return std::nullopt;
  }

  // True iff some variable occurs with opposite signs in the two clauses.
  bool clashes_with(const Clause& other) const {
    return clash_count(other) > 0;
  }

  // Number of variables occurring with opposite signs in the two clauses.
  std::size_t clash_count(const Clause& other) const {
    std::size_t clashes = 0;
    auto a = lits_.begin();
    auto b = other.lits_.begin();
    while (a != lits_.end() && b != other.lits_.end()) {
      if (var_of(*a) < var_of(*b)) {
        ++a;
      } else if (var_of(*b) < var_of(*a)) {
        ++b;
      } else {
        if (*a != *b) ++clashes;
        ++a;
        ++b;
      }
    }
    return clashes;
  }

  Clause with(Lit x) const {
    std::vector<Lit> lits = lits_;
    lits.push_back(x);
    return Clause(std::move(lits));
  }

  Clause without_var(Var v) const {
    std::vector<Lit> lits;
    lits.reserve(lits_.size());
    for (Lit x : lits_)
      if (var_of(x) != v) lits.push_back(x);
    return Clause(std::move(lits));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t j = 0; j < lits_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(lits_[j]);
    }
    return s + "}";
  }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Lit> lits_;  // sorted by lit_less, unique, clash-free
};

// Canonical clause order: lexicographic in the literal order (so a prefix
// precedes its extensions).
inline bool clause_less(const Clause& a, const Clause& b) {
  return std::lexicographical_compare(a.literals().begin(), a.literals().end(),
                                      b.literals().begin(), b.literals().end(),
                                      &lit_less);
}

}  // namespace fc
