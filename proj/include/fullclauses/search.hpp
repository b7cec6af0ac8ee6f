#pragma once

// Brute-force oracles for the four extremal quantities at deficiency k:
// max full-clause count and max min-var-degree, each over the UHIT class
// (enumerated as subcube partitions of the n-cube) and over the MU class
// (enumerated as clause subsets with kernel filtering).  Certificates are
// re-verified independently of the search path before being returned.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fullclauses/clause_set.hpp"
#include "fullclauses/constructions.hpp"
#include "fullclauses/dimacs.hpp"
#include "fullclauses/sat.hpp"
#include "fullclauses/sequences.hpp"
#include "fullclauses/transforms.hpp"

namespace fc {

enum class Quantity { maxsmarh, maxsmar, minnonmerh, minnonmer };

inline bool quantity_over_uhit(Quantity q) {
  return q == Quantity::maxsmarh || q == Quantity::minnonmerh;
}
inline bool quantity_is_nfc(Quantity q) {
  return q == Quantity::maxsmarh || q == Quantity::maxsmar;
}

inline std::string quantity_name(Quantity q) {
  switch (q) {
    case Quantity::maxsmarh: return "max_full_clauses_hitting";
    case Quantity::maxsmar: return "max_full_clauses_mu";
    case Quantity::minnonmerh: return "max_min_var_degree_hitting";
    case Quantity::minnonmer: return "max_min_var_degree_mu";
  }
  throw std::logic_error("unknown quantity");
}

// Short CLI codes: fch/fc for the full-clause quantities over the hitting
// resp. MU class, vdh/vd for the min-var-degree ones.
inline std::string quantity_code(Quantity q) {
  switch (q) {
    case Quantity::maxsmarh: return "fch";
    case Quantity::maxsmar: return "fc";
    case Quantity::minnonmerh: return "vdh";
    case Quantity::minnonmer: return "vd";
  }
  throw std::logic_error("unknown quantity");
}

inline Quantity quantity_from_code(const std::string& code) {
  if (code == "fch") return Quantity::maxsmarh;
  if (code == "fc") return Quantity::maxsmar;
  if (code == "vdh") return Quantity::minnonmerh;
  if (code == "vd") return Quantity::minnonmer;
  throw std::invalid_argument("unknown quantity code: " + code);
}

// Raised when a search result would falsify a proven bound.  This never
// fires on correct code; it exists so that a broken build halts loudly
// instead of "discovering" impossible extremal values.
class ContradictionError : public std::logic_error {
 public:
  explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

// ---------------------------------------------------------------------------
// UHIT side: partitions of {0,1}^n into subcubes.
//
// A clause over vars 1..n corresponds to the subcube of assignments
// falsifying it; a clause-set is UHIT exactly when those subcubes
// partition the cube.  The scan enumerates partitions by repeatedly
// covering the lowest uncovered vertex, with one symmetry reduction: the
// cell covering the all-zeros vertex uses a lexicographic-prefix free set.
// Partitions leaving some variable unfixed everywhere correspond to
// clause-sets over fewer variables and are skipped here -- they are
// enumerated by the scan of that smaller dimension.

struct ScanEntry {
  u64 partitions = 0;
  int best_nfc = -1;
  ClauseSet nfc_witness;
  int best_min_vdeg = -1;
  ClauseSet vdeg_witness;
};

struct PartitionScan {
  int n = 0;
  bool complete = false;
  u64 nodes = 0;
  u64 partitions = 0;  // partitions using all n variables
  std::map<u64, ScanEntry> by_deficiency;
};

inline constexpr u64 kDefaultScanBudget = u64{1} << 25;

namespace detail {

struct SubcubeCell {
  std::uint32_t free = 0;    // bit i set: variable i+1 unfixed
  std::uint32_t base = 0;    // fixed bits' values (subset of ~free)
  std::uint64_t vertices = 0;  // membership mask over the 2^n cube points
};

inline Clause cell_to_clause(const SubcubeCell& cell, int n) {
  std::vector<Lit> lits;
  for (int i = 0; i < n; ++i) {
    if (cell.free >> i & 1) continue;
    lits.push_back(cell.base >> i & 1 ? -(i + 1) : i + 1);
  }
  return Clause(std::move(lits));
}

class PartitionEnumerator {
 public:
  PartitionEnumerator(int n, u64 node_budget) : n_(n), budget_(node_budget) {
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    for (std::uint32_t free = 0; free <= all; ++free) {
      // enumerate subsets of ~free as bases
      const std::uint32_t fixed = all & ~free;
      std::uint32_t base = 0;
      while (true) {
        SubcubeCell cell{free, base, 0};
        for (std::uint32_t a = 0; a <= all; ++a)
          if ((a & fixed) == base) cell.vertices |= std::uint64_t{1} << a;
        cells_.push_back(cell);
        if (base == fixed) break;
        base = (base - fixed) & fixed;  // next subset of fixed
      }
    }
    by_lowest_vertex_.resize(std::size_t{1} << n_);
    for (std::size_t id = 0; id < cells_.size(); ++id) {
      const int lowest = std::countr_zero(cells_[id].vertices);
      by_lowest_vertex_[lowest].push_back(id);
    }
  }

  PartitionScan run() {
    scan_.n = n_;
    chosen_.clear();
    aborted_ = false;
    dfs(0);
    scan_.complete = !aborted_;
    return scan_;
  }

 private:
  void dfs(std::uint64_t covered) {
    if (aborted_) return;
    const std::uint64_t full = (n_ == 6) ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << (1 << n_)) - 1;
    if (covered == full) {
      record_partition();
      return;
    }
    const int lowest = std::countr_zero(~covered);
    for (std::size_t id : by_lowest_vertex_[lowest]) {
      if (++scan_.nodes > budget_) {
        aborted_ = true;
        return;
      }
      const SubcubeCell& cell = cells_[id];
      if (cell.vertices & covered) continue;
      // Symmetry reduction: the cell on the all-zeros vertex is forced to
      // a lexicographic-prefix free set; any partition is a variable
      // permutation away from one of this shape.
      if (covered == 0) {
        const bool prefix = (cell.free & (cell.free + 1)) == 0;
        if (!prefix) continue;
      }
      chosen_.push_back(id);
      dfs(covered | cell.vertices);
      chosen_.pop_back();
      if (aborted_) return;
    }
  }

  void record_partition() {
    std::uint32_t vars_fixed_somewhere = 0;
    const std::uint32_t all = (std::uint32_t{1} << n_) - 1;
    for (std::size_t id : chosen_) vars_fixed_somewhere |= all & ~cells_[id].free;
    if (vars_fixed_somewhere != all) return;  // lives at a smaller dimension

    const std::size_t c = chosen_.size();
    const u64 delta = static_cast<u64>(c) - static_cast<u64>(n_);
    int nfc = 0;
    std::array<int, 6> degree{};
    for (std::size_t id : chosen_) {
      if (cells_[id].free == 0) ++nfc;
      for (int i = 0; i < n_; ++i)
        if (!(cells_[id].free >> i & 1)) ++degree[i];
    }
    int min_vdeg = degree[0];
    for (int i = 1; i < n_; ++i) min_vdeg = std::min(min_vdeg, degree[i]);

    ScanEntry& entry = scan_.by_deficiency[delta];
    ++entry.partitions;
    ++scan_.partitions;
    if (nfc >= entry.best_nfc)
      consider(entry.nfc_witness, entry.best_nfc, nfc);
    if (min_vdeg >= entry.best_min_vdeg)
      consider(entry.vdeg_witness, entry.best_min_vdeg, min_vdeg);
  }

  // Keep the lexicographically smallest witness among ties so that the
  // scan result does not depend on enumeration internals.
  void consider(ClauseSet& slot, int& best, int value) {
    std::vector<Clause> cls;
    cls.reserve(chosen_.size());
    for (std::size_t id : chosen_) cls.push_back(cell_to_clause(cells_[id], n_));
    ClauseSet candidate(std::move(cls));
    if (value > best || slot.empty() ||
        candidate.to_string() < slot.to_string()) {
      best = value;
      slot = std::move(candidate);
    }
  }

  int n_;
  u64 budget_;
  std::vector<SubcubeCell> cells_;
  std::vector<std::vector<std::size_t>> by_lowest_vertex_;
  std::vector<std::size_t> chosen_;
  PartitionScan scan_;
  bool aborted_ = false;
};

}  // namespace detail

inline PartitionScan scan_subcube_partitions(int n, u64 node_budget = kDefaultScanBudget) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("scan_subcube_partitions: n must be between 1 and 6");
  return detail::PartitionEnumerator(n, node_budget).run();
}

// ---------------------------------------------------------------------------
// Certificates.

struct ExtremalCertificate {
  u64 k = 0;
  int n_max = 0;
  Quantity quantity = Quantity::maxsmarh;
  u64 best_value = 0;
  ClauseSet witness;  // empty when nothing was found
  bool exhaustive_over_n_max = false;
  std::string note;
  u64 nodes = 0;
};

namespace detail {

// Independent re-verification of a certificate: class membership through
// the kernel, the claimed measures recomputed from scratch, and the proven
// upper bound nM1 enforced.  All four quantities sit below nM1(k), and a
// UHIT witness must carry an even number of full clauses.
inline void verify_certificate(const ExtremalCertificate& cert) {
  if (cert.witness.empty()) return;
  const ClauseSet& w = cert.witness;
  if (w.deficiency() != static_cast<long long>(cert.k))
    throw std::logic_error("certificate witness has the wrong deficiency");
  if (static_cast<int>(w.n()) > cert.n_max)
    throw std::logic_error("certificate witness exceeds n_max");
  if (quantity_over_uhit(cert.quantity)) {
    if (!is_uhit(w)) throw std::logic_error("certificate witness is not UHIT");
  } else {
    if (!is_mu(w)) throw std::logic_error("certificate witness is not MU");
  }
  const u64 attained =
      quantity_is_nfc(cert.quantity)
          ? static_cast<u64>(w.nfc())
          : static_cast<u64>(w.n() > 0 ? w.min_var_degree() : 0);
  if (attained != cert.best_value)
    throw std::logic_error("certificate witness does not attain the claimed value");
  if (cert.best_value > non_mersenne1(cert.k))
    throw ContradictionError(
        "search found " + quantity_name(cert.quantity) + "(" +
        std::to_string(cert.k) + ") = " + std::to_string(cert.best_value) +
        " above the proven bound " + std::to_string(non_mersenne1(cert.k)) +
        "; witness: " + w.to_string());
  if (quantity_is_nfc(cert.quantity) && quantity_over_uhit(cert.quantity) &&
      cert.best_value % 2 != 0)
    throw ContradictionError("UHIT witness with an odd full-clause count: " +
                             w.to_string());
}

// Randomized lower-bound sampling for dimensions beyond the exhaustive
// scan: grow random expansions from F_1 until the deficiency hits k,
// keeping the variable count within n_max.
inline void sample_uhit(ExtremalCertificate& cert, int n_max, u64 seed, u64 trials) {
  std::mt19937_64 rng(seed);
  for (u64 t = 0; t < trials; ++t) {
    ClauseSet cur = make_F1();
    u64 delta = 1;
    bool ok = true;
    while (delta < cert.k) {
      if (static_cast<int>(cur.n()) >= n_max) {
        ok = false;
        break;
      }
      const auto fulls = cur.full_clauses();
      const u64 debt = cert.k - delta;
      const u64 max_m = std::min<u64>(fulls.size(), debt + 1);
      std::uniform_int_distribution<u64> pick_m(1, max_m);
      const u64 m = pick_m(rng);
      std::vector<Clause> selection(fulls);
      std::shuffle(selection.begin(), selection.end(), rng);
      selection.resize(m);
      cur = full_m_expansion(cur, m, selection, /*check_uhit_preservation=*/false)
                .result;
      delta += m - 1;
      ++cert.nodes;
    }
    if (!ok || delta != cert.k) continue;
    const u64 value = quantity_is_nfc(cert.quantity)
                          ? static_cast<u64>(cur.nfc())
                          : static_cast<u64>(cur.min_var_degree());
    if (value > cert.best_value) {
      cert.best_value = value;
      cert.witness = cur;
    }
  }
}

}  // namespace detail

// Extremal search over UHIT at deficiency k: exhaustive subcube-partition
// scans for n within reach, randomized expansion sampling beyond.  The
// certificate is exhaustive only if every dimension up to n_max was fully
// enumerated.
inline ExtremalCertificate search_uhit(u64 k, int n_max, Quantity quantity,
                                       u64 node_budget = kDefaultScanBudget,
                                       u64 seed = 1) {
  if (k == 0) throw std::invalid_argument("search_uhit: k must be positive");
  if (n_max < 1) throw std::invalid_argument("search_uhit: n_max must be positive");
  if (!quantity_over_uhit(quantity))
    throw std::invalid_argument("search_uhit: quantity must range over the UHIT class");

  ExtremalCertificate cert;
  cert.k = k;
  cert.n_max = n_max;
  cert.quantity = quantity;

  bool all_complete = true;
  const int n_scan = std::min(n_max, 6);
  for (int n = 1; n <= n_scan; ++n) {
    const PartitionScan scan = scan_subcube_partitions(n, node_budget);
    cert.nodes += scan.nodes;
    if (!scan.complete) all_complete = false;
    const auto it = scan.by_deficiency.find(k);
    if (it == scan.by_deficiency.end()) continue;
    const bool use_nfc = quantity_is_nfc(quantity);
    const int value = use_nfc ? it->second.best_nfc : it->second.best_min_vdeg;
    const ClauseSet& witness = use_nfc ? it->second.nfc_witness : it->second.vdeg_witness;
    if (value >= 0 && static_cast<u64>(value) > cert.best_value) {
      cert.best_value = static_cast<u64>(value);
      cert.witness = witness;
    }
  }

  if (n_max > 6) {
    detail::sample_uhit(cert, n_max, seed, /*trials=*/2000);
    cert.exhaustive_over_n_max = false;
    cert.note = all_complete
                    ? "exhaustive through n=6; dimensions 7.." +
                          std::to_string(n_max) + " sampled randomly (lower bound)"
                    : "partition scan hit its node budget; value is a lower bound";
  } else {
    cert.exhaustive_over_n_max = all_complete;
    if (!all_complete)
      cert.note = "partition scan hit its node budget; value is a lower bound";
    else
      cert.note = "exhaustive over all unsatisfiable hitting clause-sets with n <= " +
                  std::to_string(n_max);
  }

  detail::verify_certificate(cert);
  return cert;
}

// ---------------------------------------------------------------------------
// MU side: bounded enumeration of clause subsets.

namespace detail {

struct MuPool {
  int n = 0;
  std::vector<Clause> clauses;        // canonical order, 3^n - 1 entries
  std::vector<std::uint64_t> falsify;  // falsifying-vertex masks
  std::vector<std::uint32_t> vars;     // variable masks
  std::vector<std::uint64_t> suffix_falsify;
  std::vector<std::uint32_t> suffix_vars;
};

inline MuPool build_mu_pool(int n) {
  MuPool pool;
  pool.n = n;
  // All nonempty clauses over variables 1..n: each variable absent,
  // positive, or negative.
  std::vector<Lit> current;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      if (!current.empty()) pool.clauses.emplace_back(current);
      return;
    }
    self(self, v + 1);
    current.push_back(v);
    self(self, v + 1);
    current.back() = -v;
    self(self, v + 1);
    current.pop_back();
  };
  rec(rec, 1);
  std::sort(pool.clauses.begin(), pool.clauses.end(), &clause_less);

  const std::uint32_t all_vertices_bits = 1u << n;
  for (const Clause& cl : pool.clauses) {
    std::uint64_t mask = 0;
    std::uint32_t vmask = 0;
    for (Lit x : cl.literals()) vmask |= 1u << (var_of(x) - 1);
    for (std::uint32_t a = 0; a < all_vertices_bits; ++a) {
      bool falsified = true;
      for (Lit x : cl.literals()) {
        const bool value = a >> (var_of(x) - 1) & 1;
        if (value == positive(x)) {
          falsified = false;
          break;
        }
      }
      if (falsified) mask |= std::uint64_t{1} << a;
    }
    pool.falsify.push_back(mask);
    pool.vars.push_back(vmask);
  }
  pool.suffix_falsify.assign(pool.clauses.size() + 1, 0);
  pool.suffix_vars.assign(pool.clauses.size() + 1, 0);
  for (std::size_t i = pool.clauses.size(); i-- > 0;) {
    pool.suffix_falsify[i] = pool.suffix_falsify[i + 1] | pool.falsify[i];
    pool.suffix_vars[i] = pool.suffix_vars[i + 1] | pool.vars[i];
  }
  return pool;
}

// Depth-first combination enumeration of minimally unsatisfiable subsets.
// A clause-set is unsatisfiable exactly when the falsifying subcubes cover
// the cube, and minimally so exactly when every clause keeps a private
// vertex -- one falsified by no other clause.  Both facts are incremental
// bitmask checks, so branches where some clause has lost all private
// vertices die early.  `on_mu` sees exactly the MU subsets using all n
// variables.
template <typename Callback>
inline bool enumerate_mu_subsets(const MuPool& pool, std::size_t count,
                                 u64& nodes, u64 node_budget, Callback&& on_mu,
                                 std::uint64_t covered0 = 0,
                                 std::uint32_t vars0 = 0,
                                 std::vector<std::uint64_t> privs0 = {}) {
  const std::uint64_t full =
      (pool.n == 6) ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << pool.n)) - 1;
  const std::uint32_t all_vars = (1u << pool.n) - 1;
  std::vector<std::size_t> chosen;
  bool complete = true;

  auto rec = [&](auto&& self, std::size_t next, std::uint64_t covered,
                 std::uint32_t vars_seen,
                 const std::vector<std::uint64_t>& privs) -> bool {
    if (chosen.size() == count) {
      if (covered == full && vars_seen == all_vars) return on_mu(chosen);
      return false;
    }
    const std::size_t need = count - chosen.size();
    if (pool.clauses.size() - next < need) return false;
    if ((covered | pool.suffix_falsify[next]) != full) return false;
    if ((vars_seen | pool.suffix_vars[next]) != all_vars) return false;
    for (std::size_t i = next; i < pool.clauses.size(); ++i) {
      if (++nodes > node_budget) {
        complete = false;
        return false;
      }
      const std::uint64_t m = pool.falsify[i];
      const std::uint64_t mine = m & ~covered;
      if (mine == 0) continue;  // redundant against earlier picks
      std::vector<std::uint64_t> next_privs(privs);
      bool dead = false;
      for (std::uint64_t& p : next_privs) {
        p &= ~m;
        if (p == 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;  // an earlier clause would turn redundant
      next_privs.push_back(mine);
      chosen.push_back(i);
      const bool stop = self(self, i + 1, covered | m,
                             vars_seen | pool.vars[i], next_privs);
      chosen.pop_back();
      if (stop || !complete) return stop;
    }
    return false;
  };
  rec(rec, 0, covered0, vars0, privs0);
  return complete;
}

}  // namespace detail

// Extremal search over MU at deficiency k by bounded enumeration of clause
// subsets over n <= n_max variables (n_max <= 4; beyond that the space is
// out of desk range).  For the full-clause quantity the enumeration walks
// the full-clause count downward and stops at the first witness, which is
// the maximum; the min-var-degree quantity scans everything within budget.
inline ExtremalCertificate search_mu(u64 k, int n_max, Quantity quantity,
                                     u64 node_budget = kDefaultScanBudget) {
  if (k == 0) throw std::invalid_argument("search_mu: k must be positive");
  if (n_max < 1 || n_max > 4)
    throw std::invalid_argument("search_mu: n_max must be between 1 and 4");
  if (quantity_over_uhit(quantity))
    throw std::invalid_argument("search_mu: quantity must range over the MU class");

  ExtremalCertificate cert;
  cert.k = k;
  cert.n_max = n_max;
  cert.quantity = quantity;
  bool complete = true;

  // The enumeration decides minimal unsatisfiability by bitmask logic; the
  // kernel re-checks every recorded witness, so a disagreement between the
  // two routes is an internal error, not a search result.
  auto kernel_check = [](const ClauseSet& candidate) {
    if (!is_mu(candidate))
      throw std::logic_error(
          "mask enumeration and kernel disagree on minimal unsatisfiability: " +
          candidate.to_string());
  };

  for (int n = 1; n <= n_max; ++n) {
    const detail::MuPool pool = detail::build_mu_pool(n);
    const std::size_t c_target = static_cast<std::size_t>(n) + k;
    if (c_target > pool.clauses.size()) continue;

    if (quantity_is_nfc(quantity)) {
      // Split the pool: full clauses (exactly the size-n ones) are chosen
      // first, by descending count; the first witness found is the maximum.
      detail::MuPool fulls, rest;
      fulls.n = rest.n = n;
      for (std::size_t i = 0; i < pool.clauses.size(); ++i) {
        detail::MuPool& side =
            pool.clauses[i].size() == static_cast<std::size_t>(n) ? fulls : rest;
        side.clauses.push_back(pool.clauses[i]);
        side.falsify.push_back(pool.falsify[i]);
        side.vars.push_back(pool.vars[i]);
      }
      for (detail::MuPool* side : {&fulls, &rest}) {
        side->suffix_falsify.assign(side->clauses.size() + 1, 0);
        side->suffix_vars.assign(side->clauses.size() + 1, 0);
        for (std::size_t i = side->clauses.size(); i-- > 0;) {
          side->suffix_falsify[i] = side->suffix_falsify[i + 1] | side->falsify[i];
          side->suffix_vars[i] = side->suffix_vars[i + 1] | side->vars[i];
        }
      }

      const std::size_t t_hi = std::min(c_target, fulls.clauses.size());
      for (std::size_t t = t_hi + 1; t-- > 0;) {
        if (static_cast<u64>(t) <= cert.best_value) break;  // cannot improve
        if (c_target - t > rest.clauses.size()) continue;
        std::vector<std::size_t> full_idx;
        auto rec_fulls = [&](auto&& self, std::size_t next, std::uint64_t covered,
                             std::uint32_t vars_seen) -> bool {
          if (full_idx.size() == t) {
            // distinct full clauses falsify distinct vertices, so each
            // one's private set is its own vertex at this point
            std::vector<std::uint64_t> privs;
            privs.reserve(t);
            for (std::size_t i : full_idx) privs.push_back(fulls.falsify[i]);
            bool stop = false;
            const bool sub_complete = detail::enumerate_mu_subsets(
                rest, c_target - t, cert.nodes, node_budget,
                [&](const std::vector<std::size_t>& rest_idx) {
                  std::vector<Clause> cls;
                  for (std::size_t i : full_idx) cls.push_back(fulls.clauses[i]);
                  for (std::size_t i : rest_idx) cls.push_back(rest.clauses[i]);
                  ClauseSet candidate(std::move(cls));
                  kernel_check(candidate);
                  cert.best_value = t;
                  cert.witness = candidate;
                  return true;
                },
                covered, vars_seen, privs);
            if (!sub_complete) complete = false;
            stop = cert.best_value == static_cast<u64>(t);
            return stop;
          }
          const std::size_t need = t - full_idx.size();
          if (fulls.clauses.size() - next < need) return false;
          for (std::size_t i = next; i < fulls.clauses.size(); ++i) {
            if (++cert.nodes > node_budget) {
              complete = false;
              return false;
            }
            full_idx.push_back(i);
            const bool stop = self(self, i + 1, covered | fulls.falsify[i],
                                   vars_seen | fulls.vars[i]);
            full_idx.pop_back();
            if (stop || !complete) return stop;
          }
          return false;
        };
        const bool found = rec_fulls(rec_fulls, 0, 0, 0);
        if (found) break;
        if (!complete) break;
      }
    } else {
      const bool sub_complete = detail::enumerate_mu_subsets(
          pool, c_target, cert.nodes, node_budget,
          [&](const std::vector<std::size_t>& idx) {
            std::vector<Clause> cls;
            cls.reserve(idx.size());
            for (std::size_t i : idx) cls.push_back(pool.clauses[i]);
            ClauseSet candidate(std::move(cls));
            const u64 value = static_cast<u64>(candidate.min_var_degree());
            if (value > cert.best_value || cert.witness.empty()) {
              kernel_check(candidate);
              cert.best_value = value;
              cert.witness = candidate;
            }
            return false;  // keep enumerating: looking for the maximum
          });
      if (!sub_complete) complete = false;
    }
    if (!complete) break;
  }

  cert.exhaustive_over_n_max = complete;
  cert.note = complete
                  ? "exhaustive over all minimally unsatisfiable clause-sets with n <= " +
                        std::to_string(n_max)
                  : "enumeration hit its node budget; value is a lower bound";
  detail::verify_certificate(cert);
  return cert;
}

// ---------------------------------------------------------------------------

struct SnmMembership {
  bool in_snm = false;    // s2(k) meets the non-Mersenne bound nM(k)
  bool in_snm1 = false;   // s2(k) meets the refined bound nM1(k)
};

// Where s2 touches its upper bounds, all four extremal quantities collapse
// onto s2; these memberships mark exactly those deficiencies.
inline SnmMembership snm_membership(u64 k) {
  if (k == 0) throw std::invalid_argument("snm_membership: k must be positive");
  const u64 s = s2_direct(k);
  return SnmMembership{s == non_mersenne(k), s == non_mersenne1(k)};
}

// ---------------------------------------------------------------------------
// Summary table for k = 1..13: computed rows for nM, nM1 and s2, stored
// reference values for the four extremal quantities, upgradeable to
// "certified" by search certificates.

enum class EntrySource { computed, reference, certified };

struct Table1Entry {
  u64 value = 0;
  EntrySource source = EntrySource::computed;
};

struct Table1 {
  u64 kmax = 0;
  std::vector<Table1Entry> nm, nm1, minnonmer, minnonmerh, maxsmar, maxsmarh, s2;
};

namespace detail {

inline const std::vector<u64>& stored_row(Quantity q) {
  static const std::vector<u64> maxsmarh_row{2, 4, 4, 6, 8, 8, 8, 10, 12, 12, 14, 16, 16};
  static const std::vector<u64> maxsmar_row{2, 4, 4, 6, 8, 8, 9, 10, 12, 12, 14, 16, 16};
  static const std::vector<u64> minnonmer_row{2, 4, 5, 6, 8, 8, 10, 11, 12, 13, 14, 16, 16};
  switch (q) {
    case Quantity::maxsmarh: return maxsmarh_row;
    case Quantity::maxsmar: return maxsmar_row;
    case Quantity::minnonmerh: return minnonmer_row;  // equal rows for k <= 13
    case Quantity::minnonmer: return minnonmer_row;
  }
  throw std::logic_error("unknown quantity");
}

}  // namespace detail

inline Table1 make_table1(u64 kmax,
                          const std::vector<ExtremalCertificate>& certs = {}) {
  if (kmax == 0 || kmax > 13)
    throw std::invalid_argument(
        "table1: kmax must be between 1 and 13 (reference values end there)");
  Table1 t;
  t.kmax = kmax;
  for (u64 k = 1; k <= kmax; ++k) {
    t.nm.push_back({non_mersenne(k), EntrySource::computed});
    t.nm1.push_back({non_mersenne1(k), EntrySource::computed});
    t.s2.push_back({s2_direct(k), EntrySource::computed});
    t.maxsmarh.push_back(
        {detail::stored_row(Quantity::maxsmarh)[k - 1], EntrySource::reference});
    t.maxsmar.push_back(
        {detail::stored_row(Quantity::maxsmar)[k - 1], EntrySource::reference});
    t.minnonmerh.push_back(
        {detail::stored_row(Quantity::minnonmerh)[k - 1], EntrySource::reference});
    t.minnonmer.push_back(
        {detail::stored_row(Quantity::minnonmer)[k - 1], EntrySource::reference});
  }
  for (const ExtremalCertificate& cert : certs) {
    if (cert.k == 0 || cert.k > kmax || cert.witness.empty()) continue;
    auto& row = cert.quantity == Quantity::maxsmarh   ? t.maxsmarh
                : cert.quantity == Quantity::maxsmar  ? t.maxsmar
                : cert.quantity == Quantity::minnonmerh ? t.minnonmerh
                                                        : t.minnonmer;
    Table1Entry& entry = row[cert.k - 1];
    if (cert.best_value > entry.value)
      throw ContradictionError("certificate exceeds the stored value for " +
                               quantity_name(cert.quantity) + "(" +
                               std::to_string(cert.k) + ")");
    if (cert.best_value == entry.value) entry.source = EntrySource::certified;
  }
  return t;
}

// Internal consistency of a rendered table; returns findings, empty = ok.
inline std::vector<std::string> validate_table1(const Table1& t) {
  std::vector<std::string> findings;
  for (u64 k = 1; k <= t.kmax; ++k) {
    const std::size_t i = k - 1;
    const u64 fch = t.maxsmarh[i].value, fc = t.maxsmar[i].value;
    const u64 vdh = t.minnonmerh[i].value, vd = t.minnonmer[i].value;
    const u64 s2v = t.s2[i].value, nm = t.nm[i].value, nm1 = t.nm1[i].value;
    auto fail = [&](const std::string& what) {
      findings.push_back(what + " at k=" + std::to_string(k));
    };
    if (!(fch <= fc && fc <= vd)) fail("chain fch <= fc <= vd broken");
    if (!(fch <= vdh && vdh <= vd)) fail("chain fch <= vdh <= vd broken");
    if (fch != s2v) fail("the hitting full-clause maximum must equal s2");
    if (!(vd <= nm1 && nm1 <= nm)) fail("upper bounds nm1 <= nm violated");
    if (!(k + 1 <= s2v && s2v <= nm)) fail("s2 outside [k+1, nm]");
  }
  return findings;
}

inline std::string render_table1_text(const Table1& t) {
  const std::vector<std::pair<std::string, const std::vector<Table1Entry>*>> rows{
      {"nM", &t.nm},         {"nM1", &t.nm1},
      {"vd", &t.minnonmer},  {"vdh", &t.minnonmerh},
      {"fc", &t.maxsmar},    {"fch", &t.maxsmarh},
      {"s2", &t.s2},
  };
  std::string out;
  auto pad = [](std::string s, std::size_t w) {
    while (s.size() < w) s.insert(s.begin(), ' ');
    return s;
  };
  out += pad("k", 4);
  for (u64 k = 1; k <= t.kmax; ++k) out += pad(std::to_string(k), 4);
  out += "\n";
  for (const auto& [name, row] : rows) {
    out += pad(name, 4);
    for (const Table1Entry& e : *row) out += pad(std::to_string(e.value), 4);
    out += "\n";
  }
  return out;
}

inline nlohmann::json table1_to_json(const Table1& t) {
  auto row_json = [](const std::vector<Table1Entry>& row) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Table1Entry& e : row) {
      const char* src = e.source == EntrySource::computed   ? "computed"
                        : e.source == EntrySource::reference    ? "reference"
                                                            : "certified";
      arr.push_back({{"value", e.value}, {"source", src}});
    }
    return arr;
  };
  nlohmann::json j;
  j["schema"] = 1;
  j["kmax"] = t.kmax;
  j["rows"] = {
      {"nm", row_json(t.nm)},
      {"nm1", row_json(t.nm1)},
      {"min_var_degree_mu", row_json(t.minnonmer)},
      {"min_var_degree_hitting", row_json(t.minnonmerh)},
      {"full_clauses_mu", row_json(t.maxsmar)},
      {"full_clauses_hitting", row_json(t.maxsmarh)},
      {"s2", row_json(t.s2)},
  };
  return j;
}

inline nlohmann::json certificate_to_json(const ExtremalCertificate& cert) {
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = cert.k;
  j["n_max"] = cert.n_max;
  j["quantity"] = quantity_code(cert.quantity);
  j["quantity_name"] = quantity_name(cert.quantity);
  j["best_value"] = cert.best_value;
  j["exhaustive_over_n_max"] = cert.exhaustive_over_n_max;
  j["note"] = cert.note;
  j["nodes"] = cert.nodes;
  j["witness"] = clauses_to_json(cert.witness);
  j["witness_dimacs"] = cert.witness.empty() ? "" : to_dimacs(cert.witness);
  return j;
}

}  // namespace fc
