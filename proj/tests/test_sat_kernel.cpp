#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "fullclauses/sat.hpp"

using fc::Clause;
using fc::ClauseSet;
using fc::KernelBudget;
using fc::Lit;
using fc::SolveStatus;

TEST_CASE("trivial solves") {
  const auto empty = fc::solve(ClauseSet{});
  CHECK(empty.status == SolveStatus::satisfiable);
  REQUIRE(empty.model.has_value());
  CHECK(empty.model->values.empty());

  const auto bot = fc::solve(ClauseSet::from_literals({{}}));
  CHECK(bot.status == SolveStatus::unsatisfiable);
  CHECK_FALSE(bot.model.has_value());

  const auto unit = fc::solve(ClauseSet::from_literals({{1}}));
  REQUIRE(unit.status == SolveStatus::satisfiable);
  CHECK(unit.model->values.at(1) == true);

  CHECK(fc::is_unsatisfiable(ClauseSet::from_literals({{1}, {-1}})));
}

TEST_CASE("models are complete and verified") {
  const ClauseSet f = ClauseSet::from_literals({{1, 2}, {-1, 3}, {-3, -2}});
  const auto res = fc::solve(f);
  REQUIRE(res.status == SolveStatus::satisfiable);
  for (fc::Var v : f.vars()) CHECK(res.model->values.count(v) == 1);
  CHECK(res.model->satisfies(f));
}

TEST_CASE("assignment satisfaction") {
  fc::Assignment a;
  a.values = {{1, true}, {2, false}};
  CHECK(a.satisfies(Clause({1})));
  CHECK(a.satisfies(Clause({-2})));
  CHECK_FALSE(a.satisfies(Clause({-1, 2})));
  CHECK_FALSE(a.satisfies(Clause({3})));  // unassigned counts as unsatisfied
  CHECK(a.satisfies(ClauseSet::from_literals({{1, 2}, {-2}})));
  CHECK_FALSE(a.satisfies(ClauseSet::from_literals({{1}, {2}})));
}

TEST_CASE("full hitting sets are unsatisfiable at every size") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(fc::is_unsatisfiable(fc::make_An(n)));
  }
}

TEST_CASE("unit propagation carries long chains without search") {
  // implication chain over 30 variables: out of exhaustive range, and a
  // plain backtracker would blow the tiny budget without propagation
  std::vector<std::vector<Lit>> lits{{1}};
  for (int v = 1; v < 30; ++v) lits.push_back({-v, v + 1});
  const ClauseSet chain = ClauseSet::from_literals(lits);

  const auto sat = fc::solve(chain, KernelBudget{64});
  REQUIRE(sat.status == SolveStatus::satisfiable);
  for (int v = 1; v <= 30; ++v) CHECK(sat.model->values.at(v) == true);

  auto closed = lits;
  closed.push_back({-30});
  const auto unsat = fc::solve(ClauseSet::from_literals(closed), KernelBudget{64});
  CHECK(unsat.status == SolveStatus::unsatisfiable);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
  const ClauseSet a10 = fc::make_An(10);
  const auto res = fc::solve(a10, KernelBudget{100});
  CHECK(res.status == SolveStatus::budget_exceeded);
  CHECK(res.nodes >= 100);
  CHECK_THROWS_AS(fc::is_satisfiable(a10, KernelBudget{100}), fc::BudgetExceeded);
  CHECK_THROWS_AS(fc::is_mu(a10, KernelBudget{100}), fc::BudgetExceeded);
}

TEST_CASE("budget environment override") {
  unsetenv("FULLCLAUSES_BUDGET");
  CHECK(fc::default_kernel_budget() == std::uint64_t{1} << 26);
  setenv("FULLCLAUSES_BUDGET", "12345", 1);
  CHECK(fc::default_kernel_budget() == 12345);
  setenv("FULLCLAUSES_BUDGET", "junk", 1);
  CHECK_THROWS_AS(fc::default_kernel_budget(), std::invalid_argument);
  setenv("FULLCLAUSES_BUDGET", "12x", 1);
  CHECK_THROWS_AS(fc::default_kernel_budget(), std::invalid_argument);
  setenv("FULLCLAUSES_BUDGET", "0", 1);
  CHECK_THROWS_AS(fc::default_kernel_budget(), std::invalid_argument);
  unsetenv("FULLCLAUSES_BUDGET");
  CHECK(fc::default_kernel_budget() == std::uint64_t{1} << 26);
}

TEST_CASE("minimal unsatisfiability") {
  CHECK(fc::is_mu(ClauseSet::from_literals({{1}, {-1}})));
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(fc::is_mu(fc::make_An(n)));
  }
  // redundant clause on top of an unsatisfiable core
  CHECK_FALSE(fc::is_mu(fc::make_An(2).with_clause(Clause({1}))));
  CHECK_FALSE(fc::is_mu(ClauseSet::from_literals({{1}, {-1}, {1, 2}})));
  // satisfiable input
  CHECK_FALSE(fc::is_mu(ClauseSet::from_literals({{1, 2}, {-1}})));
  // the empty-clause singleton is minimally unsatisfiable
  CHECK(fc::is_mu(ClauseSet::from_literals({{}})));
  CHECK_FALSE(fc::is_mu(ClauseSet{}));
}

TEST_CASE("every minimally unsatisfiable set has positive deficiency") {
  // all 2^8 subsets of the clauses over two variables
  std::vector<Clause> pool;
  for (const std::vector<Lit>& l : std::vector<std::vector<Lit>>{
           {1}, {-1}, {2}, {-2}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}})
    pool.push_back(Clause(l));

  int mu_count = 0;
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::vector<Clause> cls;
    for (int j = 0; j < 8; ++j)
      if (bits >> j & 1) cls.push_back(pool[j]);
    const ClauseSet f(std::move(cls));
    if (fc::is_mu(f)) {
      ++mu_count;
      CHECK(f.deficiency() >= 1);
    }
  }
  CHECK(mu_count > 0);
}

TEST_CASE("uhit detection") {
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(fc::is_uhit(fc::make_An(n)));
  }
  CHECK(fc::is_uhit(ClauseSet::from_literals({{}})));
  CHECK(fc::is_uhit(ClauseSet::from_literals({{1}, {-1, 2}, {-1, -2}})));
  // hitting but satisfiable (weight below one)
  CHECK_FALSE(fc::is_uhit(ClauseSet::from_literals({{1, 2}, {-1, 2}})));
  // unsatisfiable but not hitting
  CHECK_FALSE(fc::is_uhit(ClauseSet::from_literals({{1}, {-1}, {2}, {-2}})));
  CHECK_FALSE(fc::is_uhit(ClauseSet{}));
}

TEST_CASE("backtracking search agrees with exhaustive enumeration") {
  std::mt19937_64 rng(424242);
  const std::uint64_t big = std::uint64_t{1} << 40;
  for (int round = 0; round < 300; ++round) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const int c = 2 + static_cast<int>(rng() % 14);
    std::vector<std::vector<Lit>> lits;
    for (int j = 0; j < c; ++j) {
      std::vector<Lit> cl;
      for (int v = 1; v <= n; ++v) {
        const auto r = rng() % 4;
        if (r == 0) cl.push_back(v);
        if (r == 1) cl.push_back(-v);
      }
      if (cl.empty()) cl.push_back(rng() % 2 ? 1 : -1);
      lits.push_back(cl);
    }
    const ClauseSet f = ClauseSet::from_literals(lits);
    const auto ex = fc::detail::solve_exhaustive(f, big);
    const auto dp = fc::detail::Dpll(f, big).run();
    CAPTURE(f.to_string());
    REQUIRE(ex.status == dp.status);
    if (dp.status == SolveStatus::satisfiable) {
      REQUIRE(dp.model.has_value());
      CHECK(dp.model->satisfies(f));
    }
  }
}

TEST_CASE("inspect reports only what fits the budget") {
  const auto a2 = fc::inspect(fc::make_An(2));
  REQUIRE(a2.is_unsat.has_value());
  CHECK(*a2.is_unsat);
  REQUIRE(a2.is_mu.has_value());
  CHECK(*a2.is_mu);
  REQUIRE(a2.is_uhit.has_value());
  CHECK(*a2.is_uhit);

  const auto sat = fc::inspect(ClauseSet::from_literals({{1, 2}, {-1, 2}}));
  CHECK(sat.is_unsat == false);
  CHECK(sat.is_mu == false);
  CHECK(sat.is_uhit == false);

  // structural verdicts survive a budget too small for the solver
  const auto squeezed = fc::inspect(fc::make_An(10), KernelBudget{100});
  REQUIRE(squeezed.is_uhit.has_value());
  CHECK(*squeezed.is_uhit);
  CHECK_FALSE(squeezed.is_unsat.has_value());
  CHECK_FALSE(squeezed.is_mu.has_value());
  CHECK(squeezed.nfc == 1024);
  CHECK(squeezed.weight_sum == "1024/2^10");
}
