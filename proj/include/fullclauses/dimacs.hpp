#pragma once

// DIMACS CNF and JSON round-tripping for clause-sets.  The writer emits
// canonical order, so equal clause-sets serialize byte-identically.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fullclauses/clause_set.hpp"

namespace fc {

inline void write_dimacs(std::ostream& out, const ClauseSet& f) {
  out << "p cnf " << f.max_var() << " " << f.c() << "\n";
  for (const Clause& cl : f.clauses()) {
    for (Lit x : cl.literals()) out << x << " ";
    out << "0\n";
  }
}

inline std::string to_dimacs(const ClauseSet& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

// Tolerant reader: 'c' comment lines are skipped, the 'p cnf' header is
// optional and its counts are not trusted, '%' ends the input (a common
// benchmark-file convention).  Every clause must be 0-terminated.
inline ClauseSet read_dimacs(std::istream& in) {
  std::vector<std::vector<Lit>> clauses;
  std::vector<Lit> current;
  std::string tok;
  bool done = false;
  while (!done && in >> tok) {
    if (tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "p") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (tok == "%") {
      done = true;
      continue;
    }
    long long value = 0;
    try {
      std::size_t pos = 0;
      value = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("dimacs: unexpected token '" + tok + "'");
    }
    if (value == 0) {
      clauses.push_back(current);
      current.clear();
    } else {
      if (value > (1 << 28) || value < -(1 << 28))
        throw std::invalid_argument("dimacs: literal out of range: " + tok);
      current.push_back(static_cast<Lit>(value));
    }
  }
  if (!current.empty())
    throw std::invalid_argument("dimacs: unterminated clause at end of input");
  return ClauseSet::from_literals(clauses);
}

inline ClauseSet read_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

// path "-" means standard input.
inline ClauseSet read_dimacs_file(const std::string& path) {
  if (path == "-") return read_dimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return read_dimacs(in);
}

// JSON form: array of arrays of integers, clauses in canonical order.
inline nlohmann::json clauses_to_json(const ClauseSet& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Clause& cl : f.clauses()) arr.push_back(cl.literals());
  return arr;
}

inline ClauseSet clauses_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("clause-set JSON must be an array");
  std::vector<std::vector<Lit>> clauses;
  for (const auto& item : j) {
    if (!item.is_array())
      throw std::invalid_argument("each clause in JSON must be an array");
    clauses.push_back(item.get<std::vector<Lit>>());
  }
  return ClauseSet::from_literals(clauses);
}

}  // namespace fc
