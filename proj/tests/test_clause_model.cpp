#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "fullclauses/clause.hpp"
#include "fullclauses/clause_set.hpp"
#include "fullclauses/dimacs.hpp"
#include "fullclauses/witness.hpp"

using fc::Clause;
using fc::ClauseSet;
using fc::Lit;

TEST_CASE("clause normalizes literal order and duplicates") {
  const Clause c({3, -1, 2, 3});
  REQUIRE(c.literals() == std::vector<Lit>{-1, 2, 3});
  CHECK(c.size() == 3);
  CHECK(c.to_string() == "{-1,2,3}");

  // negative phase sorts before positive on the same variable
  const Clause d({2, -3});
  const Clause e({-2, 3});
  CHECK(e.literals().front() == -2);
  CHECK(fc::lit_less(-2, 2));
  CHECK_FALSE(fc::lit_less(2, -2));
  CHECK(fc::clause_less(e, d));
}

TEST_CASE("clause construction rejects bad input") {
  CHECK_THROWS_AS(Clause({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Clause({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(Clause({2, 5, -5}), std::invalid_argument);
  CHECK_NOTHROW(Clause{});
  CHECK(Clause{}.empty());
}

TEST_CASE("clause membership and clash counting") {
  const Clause c({-1, 2, 3});
  CHECK(c.contains(-1));
  CHECK_FALSE(c.contains(1));
  CHECK(c.mentions(1));
  CHECK_FALSE(c.mentions(4));
  CHECK(c.literal_on(2) == 2);
  CHECK(c.literal_on(1) == -1);
  CHECK_FALSE(c.literal_on(4).has_value());

  const Clause d({1, 2, -3});
  CHECK(c.clash_count(d) == 2);  // variables 1 and 3
  CHECK(c.clashes_with(d));
  CHECK(c.clash_count(c) == 0);
  CHECK_FALSE(c.clashes_with(Clause({2, 4})));
  CHECK(Clause{}.clash_count(c) == 0);
}

TEST_CASE("clause edits") {
  const Clause c({-1, 3});
  CHECK(c.with(2) == Clause({-1, 2, 3}));
  CHECK_THROWS_AS(c.with(1), std::invalid_argument);  // clash with -1
  CHECK(c.without_var(3) == Clause({-1}));
  CHECK(c.without_var(2) == c);
  CHECK(Clause({5}).without_var(5).empty());
}

TEST_CASE("clause order puts prefixes first") {
  // {1} precedes {1,2} precedes {1,-3}? No: variable order decides.
  const Clause a({1});
  const Clause ab({1, 2});
  const Clause abn({1, -2});
  CHECK(fc::clause_less(a, ab));
  CHECK(fc::clause_less(abn, ab));
  CHECK_FALSE(fc::clause_less(ab, ab));
  // empty clause first of all
  CHECK(fc::clause_less(Clause{}, a));
}

TEST_CASE("clause-set canonicalization and lookups") {
  const ClauseSet f = ClauseSet::from_literals({{2, 1}, {-1}, {1, 2}, {-1}});
  CHECK(f.c() == 2);  // duplicates merged
  CHECK(f.n() == 2);
  CHECK(f.deficiency() == 0);
  CHECK(f.contains(Clause({-1})));
  CHECK(f.contains(Clause({1, 2})));
  CHECK_FALSE(f.contains(Clause({2})));
  CHECK(f.has_var(1));
  CHECK_FALSE(f.has_var(3));
  CHECK(f.max_var() == 2);
  CHECK(f.to_string() == "{{-1},{1,2}}");
}

TEST_CASE("variable degrees") {
  const ClauseSet f = ClauseSet::from_literals({{1, 2}, {-1, 2}, {-2, 3}});
  CHECK(f.var_degree(1) == 2);
  CHECK(f.var_degree(2) == 3);
  CHECK(f.var_degree(3) == 1);
  CHECK(f.var_degree(9) == 0);
  CHECK(f.min_var_degree() == 1);
  CHECK(f.min_degree_vars() == std::vector<fc::Var>{3});
  CHECK(f.degrees() == std::vector<int>{2, 3, 1});
}

TEST_CASE("min_var_degree requires a variable") {
  CHECK_THROWS_AS(ClauseSet{}.min_var_degree(), std::invalid_argument);
  const ClauseSet bot = ClauseSet::from_literals({{}});
  CHECK(bot.c() == 1);
  CHECK(bot.n() == 0);
  CHECK(bot.deficiency() == 1);
  CHECK_THROWS_AS(bot.min_var_degree(), std::invalid_argument);
}

TEST_CASE("full clauses and nfc") {
  const ClauseSet f = ClauseSet::from_literals({{1, 2, 3}, {-1, -2, -3}, {1, -2}, {3}});
  CHECK(f.nfc() == 2);
  CHECK(f.full_clauses() ==
        std::vector<Clause>{Clause({-1, -2, -3}), Clause({1, 2, 3})});
  CHECK(f.is_full(Clause({1, 2, 3})));
  CHECK_FALSE(f.is_full(Clause({1, -2})));

  // the empty clause is full exactly when there are no variables at all
  const ClauseSet bot = ClauseSet::from_literals({{}});
  CHECK(bot.nfc() == 1);
}

TEST_CASE("make_An is the full hitting set over n variables") {
  for (int n = 0; n <= 6; ++n) {
    const ClauseSet an = fc::make_An(n);
    CAPTURE(n);
    CHECK(an.c() == std::size_t{1} << n);
    CHECK(an.n() == static_cast<std::size_t>(n));
    CHECK(an.deficiency() == (1LL << n) - n);
    CHECK(an.nfc() == an.c());
    CHECK(an.is_hitting());
    CHECK(an.weight_sum_is_one());
    if (n > 0) CHECK(an.min_var_degree() == 1 << n);
  }
  CHECK(fc::make_An(2) ==
        ClauseSet::from_literals({{-1, -2}, {-1, 2}, {1, -2}, {1, 2}}));
  CHECK_THROWS_AS(fc::make_An(-1), std::invalid_argument);
  CHECK_THROWS_AS(fc::make_An(25), std::invalid_argument);
  CHECK_NOTHROW(fc::make_An(8, 8));  // the cap is a parameter, not a constant
}

TEST_CASE("hitting test") {
  CHECK(ClauseSet{}.is_hitting());
  CHECK(ClauseSet::from_literals({{}}).is_hitting());
  CHECK(ClauseSet::from_literals({{1}, {-1, 2}, {-1, -2}}).is_hitting());
  CHECK_FALSE(ClauseSet::from_literals({{1}, {2}}).is_hitting());
  // two clauses clashing in two places still count as hitting
  CHECK(ClauseSet::from_literals({{1, 2}, {-1, -2}}).is_hitting());
}

TEST_CASE("weight sums are exact dyadics") {
  const ClauseSet f = ClauseSet::from_literals({{1}, {-1, 2}, {-1, -2}});
  const fc::DyadicWeight w = f.weight_sum();
  CHECK(w.numerator == 4);
  CHECK(w.log2_denominator == 2);
  CHECK(w.is_one());
  CHECK(w.to_string() == "4/2^2");

  CHECK(ClauseSet{}.weight_sum() == fc::DyadicWeight{0, 0});
  CHECK(ClauseSet::from_literals({{}}).weight_sum_is_one());

  const ClauseSet g = ClauseSet::from_literals({{1, 2}, {-1, -2}, {1, -2}});
  CHECK(g.weight_sum().to_string() == "3/2^2");
  CHECK_FALSE(g.weight_sum_is_one());
}

TEST_CASE("weight sum stays exact out to wide sets") {
  // 96 variables: numerator 2^96 does not fit in 64 bits; the dyadic
  // arithmetic must not silently truncate
  std::vector<std::vector<Lit>> lits;
  for (int v = 1; v <= 96; ++v) lits.push_back({v, -((v % 96) + 1)});
  const ClauseSet wide = ClauseSet::from_literals(lits);
  REQUIRE(wide.n() == 96);
  const fc::DyadicWeight w = wide.weight_sum();
  CHECK(w.log2_denominator == 96);
  CHECK(w.numerator == fc::u128{96} << 94);
  CHECK_FALSE(w.is_one());

  std::vector<std::vector<Lit>> too_many;
  for (int v = 1; v <= 97; ++v) too_many.push_back({v});
  CHECK_THROWS_AS(ClauseSet::from_literals(too_many).weight_sum(),
                  std::invalid_argument);
}

TEST_CASE("with_clause and without_clause") {
  const ClauseSet f = fc::make_An(2);
  const ClauseSet g = f.without_clause(Clause({1, 2}));
  CHECK(g.c() == 3);
  CHECK_FALSE(g.contains(Clause({1, 2})));
  CHECK(g.with_clause(Clause({1, 2})) == f);
  CHECK(f.with_clause(Clause({1, 2})) == f);  // already there
  CHECK(f.without_clause(Clause({7})) == f);
}

TEST_CASE("instantiate splits on a variable") {
  const ClauseSet a2 = fc::make_An(2);
  const ClauseSet pos = fc::instantiate(a2, 1, true);
  CHECK(pos == ClauseSet::from_literals({{2}, {-2}}));
  const ClauseSet neg = fc::instantiate(a2, 1, false);
  CHECK(neg == pos);

  // instantiating a unit clause's variable against it yields the empty
  // clause, while the clause satisfied by the assignment disappears
  const ClauseSet f = ClauseSet::from_literals({{1}, {-1, 2}});
  CHECK(fc::instantiate(f, 1, false) == ClauseSet::from_literals({{}}));
  CHECK(fc::instantiate(f, 1, true) == ClauseSet::from_literals({{2}}));
  // untouched variable: nothing changes but the variable may vanish
  CHECK(fc::instantiate(f, 5, true) == f);
  CHECK_THROWS_AS(fc::instantiate(f, 0, true), std::invalid_argument);
}

TEST_CASE("instantiate respects the weight split") {
  // For a hitting clause-set, the two restrictions of a mentioned variable
  // keep weight one; checked here directly on A3 and a pruned variant.
  for (const ClauseSet& f :
       {fc::make_An(3), ClauseSet::from_literals({{1}, {-1, 2}, {-1, -2, 3}, {-1, -2, -3}})}) {
    REQUIRE(f.weight_sum_is_one());
    for (fc::Var v : f.vars()) {
      CAPTURE(f.to_string(), v);
      CHECK(fc::instantiate(f, v, true).weight_sum_is_one());
      CHECK(fc::instantiate(f, v, false).weight_sum_is_one());
    }
  }
}

TEST_CASE("packed clauses agree with literal semantics") {
  std::mt19937_64 rng(20240817);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<Lit>> lits;
    const int c = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < c; ++j) {
      std::vector<Lit> cl;
      for (int v = 1; v <= n; ++v) {
        switch (rng() % 3) {
          case 0: cl.push_back(v); break;
          case 1: cl.push_back(-v); break;
          default: break;
        }
      }
      if (cl.empty()) cl.push_back(1);
      lits.push_back(cl);
    }
    const ClauseSet f = ClauseSet::from_literals(lits);
    const auto packed = fc::pack(f);
    REQUIRE(packed.size() == f.c());

    for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.n()); ++a) {
      for (std::size_t j = 0; j < packed.size(); ++j) {
        bool falsified = true;
        for (Lit x : f.clauses()[j].literals()) {
          const auto idx = static_cast<std::size_t>(
              std::lower_bound(f.vars().begin(), f.vars().end(), fc::var_of(x)) -
              f.vars().begin());
          const bool value = (a >> idx) & 1;
          if (value == fc::positive(x)) {
            falsified = false;
            break;
          }
        }
        const bool packed_falsified =
            ((a ^ packed[j].sign) & packed[j].mask) == 0;
        REQUIRE(falsified == packed_falsified);
      }
    }
  }
}

TEST_CASE("packed clash test matches clash_count") {
  const ClauseSet f = fc::make_An(3);
  const auto packed = fc::pack(f);
  for (std::size_t i = 0; i < f.c(); ++i)
    for (std::size_t j = 0; j < f.c(); ++j) {
      const bool packed_clash =
          (packed[i].mask & packed[j].mask & (packed[i].sign ^ packed[j].sign)) != 0;
      CHECK(packed_clash == f.clauses()[i].clashes_with(f.clauses()[j]));
    }
}

TEST_CASE("dimacs writing is canonical") {
  const ClauseSet f = ClauseSet::from_literals({{2, -1}, {1}});
  CHECK(fc::to_dimacs(f) == "p cnf 2 2\n-1 2 0\n1 0\n");
  // header counts the largest variable name, not the variable count
  const ClauseSet g = ClauseSet::from_literals({{2}, {-2, 5}});
  CHECK(fc::to_dimacs(g) == "p cnf 5 2\n-2 5 0\n2 0\n");
  CHECK(fc::to_dimacs(ClauseSet::from_literals({{}})) == "p cnf 0 1\n0\n");
}

TEST_CASE("dimacs reading tolerates comments and benchmark tails") {
  const std::string text =
      "c a comment line\n"
      "p cnf 3 2\n"
      "1 -2 0\n"
      "c another\n"
      "3 0\n"
      "%\n"
      "ignored garbage after the percent\n";
  const ClauseSet f = fc::read_dimacs_string(text);
  CHECK(f == ClauseSet::from_literals({{1, -2}, {3}}));

  CHECK(fc::read_dimacs_string("").empty());
  CHECK(fc::read_dimacs_string("0\n") == ClauseSet::from_literals({{}}));
}

TEST_CASE("dimacs reading rejects malformed input") {
  CHECK_THROWS_AS(fc::read_dimacs_string("1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(fc::read_dimacs_string("1 x 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(fc::read_dimacs_string("999999999999 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(fc::read_dimacs_string("1 -1 0\n"), std::invalid_argument);
}

TEST_CASE("dimacs round trip") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<Lit>> lits;
    const int c = static_cast<int>(rng() % 8);
    for (int j = 0; j < c; ++j) {
      std::vector<Lit> cl;
      for (int v = 1; v <= n; ++v)
        if (rng() % 2) cl.push_back(rng() % 2 ? v : -v);
      lits.push_back(cl);
    }
    const ClauseSet f = ClauseSet::from_literals(lits);
    CHECK(fc::read_dimacs_string(fc::to_dimacs(f)) == f);
    CHECK(fc::clauses_from_json(fc::clauses_to_json(f)) == f);
  }
}

TEST_CASE("json clause parsing rejects non-arrays") {
  CHECK_THROWS_AS(fc::clauses_from_json(nlohmann::json::object()),
                  std::invalid_argument);
  CHECK_THROWS_AS(fc::clauses_from_json(nlohmann::json::parse("[1,2]")),
                  std::invalid_argument);
  CHECK(fc::clauses_from_json(nlohmann::json::parse("[[1,-2],[2]]")) ==
        ClauseSet::from_literals({{1, -2}, {2}}));
}

TEST_CASE("witness report carries the base measures") {
  const fc::WitnessReport r = fc::basic_report(fc::make_An(2));
  CHECK(r.n == 2);
  CHECK(r.c == 4);
  CHECK(r.deficiency == 2);
  CHECK(r.nfc == 4);
  CHECK(r.min_var_degree == 4);
  CHECK(r.is_hitting);
  CHECK(r.weight_sum_is_one);
  CHECK(r.weight_sum == "4/2^2");
  CHECK_FALSE(r.is_unsat.has_value());  // basic report runs no solver

  const fc::WitnessReport bot = fc::basic_report(ClauseSet::from_literals({{}}));
  CHECK_FALSE(bot.min_var_degree.has_value());
  CHECK(bot.deficiency == 1);

  const auto j = fc::report_to_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["n"] == 2);
  CHECK(j["is_unsat"].is_null());
  CHECK(j["min_var_degree"] == 4);
}
