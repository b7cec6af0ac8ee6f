// Command-line front end: sequences, clause-set inspection, verified
// transformations, witness construction, extremal search, and the summary
// table, all with machine-readable output.
//
// Exit codes: 0 success / claims hold, 1 claim failure or internal error,
// 2 usage error, 3 budget exhaustion, 4 contradiction finding (a search
// result violating a proven bound -- should never happen on a sound build).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fullclauses/constructions.hpp"
#include "fullclauses/dimacs.hpp"
#include "fullclauses/search.hpp"
#include "fullclauses/sequences.hpp"
#include "fullclauses/transforms.hpp"
#include "fullclauses/witness.hpp"

namespace {

using nlohmann::json;

std::vector<fc::Lit> parse_lits(const std::string& text) {
  std::vector<fc::Lit> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto begin = item.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    const auto end = item.find_last_not_of(" \t");
    const std::string tok = item.substr(begin, end - begin + 1);
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse literal '" + tok + "'");
    }
    if (pos != tok.size() || value == 0)
      throw std::invalid_argument("cannot parse literal '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::vector<fc::Clause> parse_clause_list(const std::string& text) {
  std::vector<fc::Clause> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.emplace_back(parse_lits(item));
  return out;
}

// "-" sends payload-bearing streams to stdout; side-channel documents
// (reports, traces, audits) go to stderr instead so pipes stay clean.
void write_payload(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

void write_side_document(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cerr << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json step_to_json(const fc::ExpansionStep& step) {
  json selected = json::array();
  for (const fc::Clause& cl : step.selected_full_clauses)
    selected.push_back(cl.literals());
  return json{{"m", step.m},
              {"extension_var", step.extension_var},
              {"selected", selected}};
}

// ---------------------------------------------------------------------- seq

struct SeqConfig {
  std::string which;
  fc::u64 upto = 0;
  std::string format = "tsv";
};

int run_seq(const SeqConfig& cfg) {
  if (cfg.which == "check") {
    const fc::u64 course = std::min<fc::u64>(cfg.upto, 10000);
    const auto findings = fc::check_sequence_laws(cfg.upto, course);
    if (cfg.format == "json") {
      std::cout << dump(json{{"schema", 1},
                             {"upto", cfg.upto},
                             {"course_upto", course},
                             {"findings", findings}});
    } else {
      for (const std::string& f : findings) std::cout << "finding\t" << f << "\n";
      std::cout << "checked\t" << cfg.upto << "\n";
    }
    return findings.empty() ? 0 : 1;
  }

  const fc::u64 from = cfg.which == "a2" ? 0 : 1;
  std::vector<fc::u64> values;
  for (fc::u64 k = from; k <= cfg.upto; ++k)
    values.push_back(cfg.which == "a2" ? fc::a2(k) : fc::s2_direct(k));

  if (cfg.format == "json") {
    std::cout << json(values).dump() << "\n";
  } else {
    for (fc::u64 k = from; k <= cfg.upto; ++k)
      std::cout << k << "\t" << values[k - from] << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- inspect/verify

int run_inspect(const std::string& path) {
  const fc::ClauseSet f = fc::read_dimacs_file(path);
  std::cout << dump(fc::report_to_json(fc::inspect(f)));
  return 0;
}

int run_verify(const std::string& path, const std::string& claims_text) {
  const fc::ClauseSet f = fc::read_dimacs_file(path);
  const fc::WitnessReport report = fc::inspect(f);
  std::cout << dump(fc::report_to_json(report));

  bool all_hold = true;
  std::stringstream ss(claims_text);
  std::string claim;
  while (std::getline(ss, claim, ',')) {
    bool holds = false;
    if (claim == "hitting") {
      holds = report.is_hitting;
    } else if (claim == "unsat") {
      if (!report.is_unsat)
        throw fc::BudgetExceeded("unsat claim undecided within budget");
      holds = *report.is_unsat;
    } else if (claim == "mu") {
      if (!report.is_mu)
        throw fc::BudgetExceeded("mu claim undecided within budget");
      holds = *report.is_mu;
    } else if (claim == "uhit") {
      holds = report.is_uhit.value_or(false);
    } else if (claim.empty()) {
      continue;
    } else {
      throw std::invalid_argument("unknown claim '" + claim + "'");
    }
    if (!holds) {
      std::cerr << "claim failed: " << claim << "\n";
      all_hold = false;
    }
  }
  return all_hold ? 0 : 1;
}

// ------------------------------------------------------------------ transform

struct TransformConfig {
  std::string path;
  std::string op;
  std::string base;        // resolve
  bool base_given = false;
  std::string clause;      // extend
  bool clause_given = false;
  fc::Var var = 0;         // resolve pivot / extend var / dp var
  bool var_given = false;
  std::size_t m = 0;       // expand
  std::string select;      // expand, optional
  bool select_given = false;
  std::string out = "-";
  std::string audit;
};

int run_transform(const TransformConfig& cfg) {
  const fc::ClauseSet f = fc::read_dimacs_file(cfg.path);
  fc::ClauseSet result;
  json audit{{"schema", 1}, {"op", cfg.op}};

  if (cfg.op == "resolve") {
    if (!cfg.base_given || !cfg.var_given)
      throw std::invalid_argument("resolve needs --base and --pivot");
    const fc::Clause base(parse_lits(cfg.base));
    const auto res = fc::full_subsumption_resolution(f, base, cfg.var);
    result = res.result;
    audit["base"] = base.literals();
    audit["pivot"] = cfg.var;
    audit["strict"] = res.strictness == fc::Strictness::strict;
  } else if (cfg.op == "extend") {
    if (!cfg.clause_given || !cfg.var_given)
      throw std::invalid_argument("extend needs --clause and --var");
    const fc::Clause clause(parse_lits(cfg.clause));
    const auto res = fc::full_subsumption_extension(f, clause, cfg.var);
    result = res.result;
    audit["clause"] = clause.literals();
    audit["var"] = cfg.var;
    audit["strict"] = res.strictness == fc::Strictness::strict;
  } else if (cfg.op == "expand") {
    if (cfg.m == 0) throw std::invalid_argument("expand needs --m >= 1");
    std::optional<std::vector<fc::Clause>> selection;
    if (cfg.select_given) selection = parse_clause_list(cfg.select);
    const auto res = fc::full_m_expansion(f, cfg.m, selection);
    result = res.result;
    audit.update(step_to_json(res.step));
  } else if (cfg.op == "dp") {
    if (!cfg.var_given) throw std::invalid_argument("dp needs --var");
    const auto res = fc::dp_reduction(f, cfg.var);
    result = res.result;
    audit["var"] = cfg.var;
    audit["skipped_pairs"] = res.skipped_pairs;
    if (res.first_skipped) {
      audit["first_skipped"] = {res.first_skipped->first.literals(),
                                res.first_skipped->second.literals()};
      std::cerr << "note: " << res.skipped_pairs
                << " clause pair(s) clashing outside the eliminated variable "
                   "contribute no resolvent; first: "
                << res.first_skipped->first.to_string() << " with "
                << res.first_skipped->second.to_string() << "\n";
    } else {
      audit["first_skipped"] = nullptr;
    }
  } else {
    throw std::invalid_argument("unknown --op '" + cfg.op + "'");
  }

  write_payload(cfg.out, fc::to_dimacs(result));
  write_side_document(cfg.audit, dump(audit));
  return 0;
}

// ------------------------------------------------------------------ construct

int run_construct_fk(fc::u64 k, const std::string& report_path,
                     const std::string& trace_path) {
  const fc::ConstructionTrace trace = fc::build_Fk(k);
  std::cout << fc::to_dimacs(trace.final);
  write_side_document(report_path, dump(fc::report_to_json(trace.report)));
  if (!trace_path.empty()) {
    json steps = json::array();
    for (const fc::ExpansionStep& s : trace.steps) steps.push_back(step_to_json(s));
    write_side_document(trace_path, dump(json{{"schema", 1},
                                              {"k", trace.k},
                                              {"chain", trace.chain},
                                              {"steps", steps},
                                              {"dimacs", fc::to_dimacs(trace.final)}}));
  }
  return 0;
}

int run_construct_fixed(const fc::ClauseSet& f, const std::string& report_path) {
  std::cout << fc::to_dimacs(f);
  write_side_document(report_path, dump(fc::report_to_json(fc::inspect(f))));
  return 0;
}

int run_construct_a4chain() {
  json steps = json::array();
  for (const fc::ChainStep& step : fc::a4_chain()) {
    json j{{"report", fc::report_to_json(step.report)},
           {"dimacs", fc::to_dimacs(step.set)}};
    if (step.pivot != 0) {
      j["pivot"] = step.pivot;
      j["base"] = step.base.literals();
    } else {
      j["pivot"] = nullptr;
      j["base"] = nullptr;
    }
    steps.push_back(std::move(j));
  }
  std::cout << dump(json{{"schema", 1}, {"steps", steps}});
  return 0;
}

// --------------------------------------------------------------------- search

struct SearchConfig {
  std::string quantity;
  fc::u64 k = 0;
  int nmax = 0;
  fc::u64 budget = fc::kDefaultScanBudget;
  fc::u64 seed = 1;
  bool seed_given = false;
};

int run_search(const SearchConfig& cfg) {
  const fc::Quantity q = fc::quantity_from_code(cfg.quantity);
  const bool sampling = fc::quantity_over_uhit(q) && cfg.nmax > 6;
  if (cfg.seed_given && !sampling)
    std::cerr << "note: --seed ignored; this search is exhaustive\n";

  const fc::ExtremalCertificate cert =
      fc::quantity_over_uhit(q)
          ? fc::search_uhit(cfg.k, cfg.nmax, q, cfg.budget, cfg.seed)
          : fc::search_mu(cfg.k, cfg.nmax, q, cfg.budget);
  std::cout << dump(fc::certificate_to_json(cert));
  if (!cert.exhaustive_over_n_max) {
    std::cerr << "search was not exhaustive: " << cert.note << "\n";
    return 3;
  }
  return 0;
}

// --------------------------------------------------------------------- table1

int run_table1(fc::u64 kmax, const std::string& format) {
  const fc::Table1 t = fc::make_table1(kmax);
  const auto findings = fc::validate_table1(t);
  if (format == "json")
    std::cout << dump(fc::table1_to_json(t));
  else
    std::cout << fc::render_table1_text(t);
  for (const std::string& f : findings) std::cerr << "finding: " << f << "\n";
  return findings.empty() ? 0 : 1;
}

// ------------------------------------------------------------------- selftest

int run_selftest() {
  const auto findings = fc::check_sequence_laws(10000, 10000);
  if (!findings.empty()) {
    for (const std::string& f : findings) std::cerr << "FAIL: " << f << "\n";
    return 1;
  }
  std::cout << "ok: sequence laws through k = 10000\n";

  for (fc::u64 k = 1; k <= 13; ++k) {
    const auto trace = fc::build_Fk(k);  // throws on any violated invariant
    if (!trace.report.is_uhit.value_or(false)) {
      std::cerr << "FAIL: family member k=" << k << " not verified\n";
      return 1;
    }
  }
  std::cout << "ok: family construction through k = 13\n";

  const fc::ClauseSet mu7 = fc::witness_mu_def7();
  if (!(mu7.deficiency() == 7 && mu7.nfc() == 9 && fc::is_mu(mu7) &&
        !mu7.is_hitting())) {
    std::cerr << "FAIL: deficiency-7 non-hitting witness\n";
    return 1;
  }
  const fc::ClauseSet uhit7 = fc::witness_uhit_def7();
  if (!(uhit7.deficiency() == 7 && fc::is_uhit(uhit7) &&
        uhit7.min_var_degree() == 10)) {
    std::cerr << "FAIL: deficiency-7 hitting witness\n";
    return 1;
  }
  const auto chain = fc::a4_chain();  // throws if any step fails verification
  if (chain.back().set.min_var_degree() != 11) {
    std::cerr << "FAIL: resolution chain endpoint\n";
    return 1;
  }
  std::cout << "ok: fixed witnesses and the resolution chain\n";

  const auto table_findings = fc::validate_table1(fc::make_table1(13));
  if (!table_findings.empty()) {
    for (const std::string& f : table_findings) std::cerr << "FAIL: " << f << "\n";
    return 1;
  }
  std::cout << "ok: summary table consistency\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unsatisfiable clause-set toolkit: sequences, witnesses, searches"};
  app.require_subcommand(1);

  // seq
  SeqConfig seq_cfg;
  CLI::App* seq = app.add_subcommand("seq", "sequence values and cross-checks");
  seq->require_subcommand(1);
  for (const char* name : {"s2", "a2", "check"}) {
    CLI::App* sub = seq->add_subcommand(
        name, std::string(name) == "check" ? "run all cross-method identities"
                                           : "print the sequence");
    sub->add_option("--upto", seq_cfg.upto, "largest index")->required();
    sub->add_option("--format", seq_cfg.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    sub->callback([&seq_cfg, name] { seq_cfg.which = name; });
  }

  // inspect
  std::string inspect_path;
  CLI::App* inspect =
      app.add_subcommand("inspect", "read DIMACS, emit a witness report (JSON)");
  inspect->add_option("file", inspect_path, "DIMACS file, - for stdin")->required();

  // verify
  std::string verify_path, verify_claims;
  CLI::App* verify = app.add_subcommand(
      "verify", "check claims against a clause-set; exit 0 iff all hold");
  verify->add_option("file", verify_path, "DIMACS file, - for stdin")->required();
  verify->add_option("--claims", verify_claims,
                     "comma list of hitting,unsat,mu,uhit")
      ->required();

  // transform
  TransformConfig tr_cfg;
  CLI::App* transform =
      app.add_subcommand("transform", "apply a verified clause-set operation");
  transform->add_option("file", tr_cfg.path, "DIMACS file, - for stdin")->required();
  transform->add_option("--op", tr_cfg.op, "resolve, extend, expand, or dp")
      ->required()
      ->check(CLI::IsMember({"resolve", "extend", "expand", "dp"}));
  auto* base_opt = transform->add_option(
      "--base", tr_cfg.base, "resolve: base clause as comma literals ('' = empty)");
  auto* clause_opt = transform->add_option(
      "--clause", tr_cfg.clause, "extend: clause to split, comma literals");
  auto* var_opt = transform->add_option(
      "--pivot,--var", tr_cfg.var, "pivot / extension / eliminated variable");
  transform->add_option("--m", tr_cfg.m, "expand: number of full clauses to split");
  auto* select_opt = transform->add_option(
      "--select", tr_cfg.select,
      "expand: semicolon-separated clause list overriding the default selection");
  transform->add_option("--out", tr_cfg.out, "result DIMACS path, - for stdout");
  transform->add_option("--audit", tr_cfg.audit,
                        "write the operation record as JSON (- for stderr)");

  // construct
  CLI::App* construct = app.add_subcommand("construct", "build a named witness");
  construct->require_subcommand(1);
  fc::u64 fk_k = 0;
  std::string report_path, trace_path;
  CLI::App* fk = construct->add_subcommand("fk", "family member at deficiency k");
  fk->add_option("--k", fk_k, "deficiency")->required();
  fk->add_option("--report", report_path, "write witness report JSON (- for stderr)");
  fk->add_option("--trace", trace_path, "write construction trace JSON (- for stderr)");
  CLI::App* mu7 = construct->add_subcommand("mu7", "deficiency-7 non-hitting witness");
  mu7->add_option("--report", report_path, "write witness report JSON (- for stderr)");
  CLI::App* uhit7 = construct->add_subcommand("uhit7", "deficiency-7 hitting witness");
  uhit7->add_option("--report", report_path, "write witness report JSON (- for stderr)");
  CLI::App* a4chain =
      construct->add_subcommand("a4chain", "resolution chain from the 4-cube (JSON)");

  // search
  SearchConfig search_cfg;
  CLI::App* search = app.add_subcommand("search", "extremal search with certificate");
  search->add_option("--quantity", search_cfg.quantity,
                     "fch or vdh (hitting class), fc or vd (MU class)")
      ->required()
      ->check(CLI::IsMember({"fch", "fc", "vdh", "vd"}));
  search->add_option("--k", search_cfg.k, "deficiency")->required();
  search->add_option("--nmax", search_cfg.nmax, "largest variable count")->required();
  search->add_option("--budget", search_cfg.budget, "node budget")
      ->check(CLI::PositiveNumber);
  auto* seed_opt =
      search->add_option("--seed", search_cfg.seed, "seed for sampling modes");

  // table1
  fc::u64 table_kmax = 13;
  std::string table_format = "text";
  CLI::App* table1 = app.add_subcommand("table1", "summary table of the quantities");
  table1->add_option("--kmax", table_kmax, "largest deficiency column (<= 13)");
  table1->add_option("--format", table_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // selftest
  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full invariant suite and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (seq->parsed()) return run_seq(seq_cfg);
    if (inspect->parsed()) return run_inspect(inspect_path);
    if (verify->parsed()) return run_verify(verify_path, verify_claims);
    if (transform->parsed()) {
      tr_cfg.base_given = base_opt->count() > 0;
      tr_cfg.clause_given = clause_opt->count() > 0;
      tr_cfg.var_given = var_opt->count() > 0;
      tr_cfg.select_given = select_opt->count() > 0;
      return run_transform(tr_cfg);
    }
    if (construct->parsed()) {
      if (fk->parsed()) return run_construct_fk(fk_k, report_path, trace_path);
      if (mu7->parsed()) return run_construct_fixed(fc::witness_mu_def7(), report_path);
      if (uhit7->parsed())
        return run_construct_fixed(fc::witness_uhit_def7(), report_path);
      if (a4chain->parsed()) return run_construct_a4chain();
    }
    if (search->parsed()) {
      search_cfg.seed_given = seed_opt->count() > 0;
      return run_search(search_cfg);
    }
    if (table1->parsed()) return run_table1(table_kmax, table_format);
    if (selftest->parsed()) return run_selftest();
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const fc::ContradictionError& e) {
    std::cerr << "contradiction finding: " << e.what() << "\n"
              << "this falsifies a proven bound and indicates a broken build\n";
    return 4;
  } catch (const fc::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
