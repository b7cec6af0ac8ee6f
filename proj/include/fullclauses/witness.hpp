#pragma once

// WitnessReport: the measured facts about a clause-set, with the solver
// verdicts left optional so a report can be produced without (or beyond)
// the decision kernel's budget.

#include <optional>
#include <string>

#include <json.hpp>

#include "fullclauses/clause_set.hpp"

namespace fc {

struct WitnessReport {
  std::size_t n = 0;
  std::size_t c = 0;
  long long deficiency = 0;
  std::size_t nfc = 0;
  std::optional<int> min_var_degree;  // absent for variable-free clause-sets
  bool is_hitting = false;
  bool weight_sum_is_one = false;
  std::string weight_sum;
  std::optional<bool> is_unsat;
  std::optional<bool> is_mu;
  std::optional<bool> is_uhit;
};

// Structural fields only; the kernel verdicts stay unset.
inline WitnessReport basic_report(const ClauseSet& f) {
  WitnessReport r;
  r.n = f.n();
  r.c = f.c();
  r.deficiency = f.deficiency();
  r.nfc = f.nfc();
  if (f.n() > 0) r.min_var_degree = f.min_var_degree();
  r.is_hitting = f.is_hitting();
  const DyadicWeight w = f.weight_sum();
  r.weight_sum_is_one = w.is_one();
  r.weight_sum = w.to_string();
  return r;
}

inline nlohmann::json report_to_json(const WitnessReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["c"] = r.c;
  j["deficiency"] = r.deficiency;
  j["nfc"] = r.nfc;
  j["min_var_degree"] =
      r.min_var_degree ? nlohmann::json(*r.min_var_degree) : nlohmann::json();
  j["is_hitting"] = r.is_hitting;
  j["weight_sum_is_one"] = r.weight_sum_is_one;
  j["weight_sum"] = r.weight_sum;
  j["is_unsat"] = r.is_unsat ? nlohmann::json(*r.is_unsat) : nlohmann::json();
  j["is_mu"] = r.is_mu ? nlohmann::json(*r.is_mu) : nlohmann::json();
  j["is_uhit"] = r.is_uhit ? nlohmann::json(*r.is_uhit) : nlohmann::json();
  return j;
}

}  // namespace fc
