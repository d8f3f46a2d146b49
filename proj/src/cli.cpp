#include "mucrit/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "mucrit/search.hpp"
#include "mucrit/verify.hpp"

namespace mucrit::cli {

namespace {

struct RunConfig {
  int threads = 0;  // 0 keeps the OpenMP default
  u64 seed = 0;
  std::string format = "text";
  std::string out_path;
  bool timing = false;

  std::string kind;
  u64 p = 0, d = 0, alpha = 0, alpha_max = 3000, budget = 0, bound = 0;
  std::string statement;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A witness the theory says cannot exist, or one the search was asked to rule out.
bool unexpected(const SearchResult& r) {
  switch (r.job.kind) {
    case SearchKind::Diffset:
      return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) {
        return w.info.count("exact") && w.info.at("exact") == "true" && r.job.d != 2 && r.job.d != 6;
      });
    case SearchKind::Sumset:
      return !r.witnesses.empty() &&
             (2 * r.job.d == r.job.p - 1 ||
              std::any_of(r.witnesses.begin(), r.witnesses.end(),
                          [](const Witness& w) { return w.sets[0].size() != w.sets[1].size(); }));
    case SearchKind::Threefold:
      return !r.witnesses.empty();
    default:
      return false;
  }
}

SearchResult run_search(const RunConfig& c) {
  SearchOptions opt;
  opt.node_budget = c.budget;
  opt.p_bound = c.bound;
  auto need = [](u64 v, const char* flag) {
    if (v == 0) throw UsageError(std::string("missing ") + flag);
    return v;
  };
  const SearchKind kind = search_kind_from_string(c.kind);
  switch (kind) {
    case SearchKind::Diffset:
      return diffset_search(need(c.p, "--p"), need(c.d, "--d"), opt);
    case SearchKind::Sumset:
      return sumset_search(need(c.p, "--p"), need(c.d, "--d"), opt);
    case SearchKind::Threefold:
      return threefold_check(need(c.p, "--p"), need(c.d, "--d"), opt);
    case SearchKind::Levson:
      return levson_scan(need(c.alpha_max, "--alpha-max"), opt);
    case SearchKind::Problem1:
      return problem1_scan(need(c.p, "--p"), need(c.alpha_max, "--alpha-max"), opt);
    case SearchKind::Problem2:
      return problem2_scan(need(c.p, "--p"), need(c.alpha, "--alpha"), opt);
  }
  throw UsageError("unknown search kind");
}

int lemma_number(const std::string& s) {
  const std::string prefix = "lemma";
  if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size() ||
      s.find_first_not_of("0123456789", prefix.size()) != std::string::npos) {
    throw UsageError("expected lemma<N>, got '" + s + "'");
  }
  const int n = std::stoi(s.substr(prefix.size()));
  if (n < 1 || n > 17) throw UsageError("lemma number must be in 1..17");
  return n;
}

template <class Report>
std::string render(const Report& r, const std::string& format) {
  if (format == "json") return to_json(r);
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical pairs, difference sets and sumsets in multiplicative subgroups of F_p", "mucrit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  RunConfig c;
  app.add_option("--threads", c.threads, "OpenMP threads (default: runtime default)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", c.out_path, "write the report here instead of stdout");
  app.add_flag("--timing", c.timing, "print elapsed time on stderr");

  auto* f41 = app.add_subcommand("verify-f41", "the A = {0,1,9,32,40}, p = 41, d = 20 bundle");
  auto* ids = app.add_subcommand("verify-identities", "exact symbolic identities");
  auto* res = app.add_subcommand("verify-residues", "residue sums and the five form identities");
  auto* op = app.add_subcommand("verify-operator", "the Stepanov-type operator and the degree eleven case");
  auto* hp = app.add_subcommand("verify-hp", "HP coefficient and complete homogeneous cross-checks");
  auto* desk = app.add_subcommand("verify-desk-scale", "exhaustive small-prime sweeps");

  auto* search = app.add_subcommand("search", "exhaustive searches and scans");
  search->add_option("kind", c.kind, "diffset|sumset|threefold|levson|problem1|problem2")
      ->required()
      ->check(CLI::IsMember({"diffset", "sumset", "threefold", "levson", "problem1", "problem2"}));
  search->add_option("--p", c.p, "prime modulus");
  search->add_option("--d", c.d, "subgroup order, d | p-1");
  search->add_option("--alpha", c.alpha, "set size (problem2)");
  search->add_option("--alpha-max", c.alpha_max, "largest alpha (levson, problem1)")->capture_default_str();
  search->add_option("--budget", c.budget, "node budget per top-level branch, 0 = unlimited");
  search->add_option("--bound", c.bound, "largest p accepted, 0 = default");

  auto* check = app.add_subcommand("check", "focused checks of one numbered statement");
  check->add_option("statement", c.statement, "lemma1 .. lemma17")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (c.threads > 0) omp_set_num_threads(c.threads);

  const auto start = std::chrono::steady_clock::now();
  std::string text;
  int code = 0;
  try {
    std::optional<CheckReport> report;
    if (f41->parsed()) report = verify_f41();
    if (ids->parsed()) report = verify_identities();
    if (res->parsed()) report = verify_residues(c.seed);
    if (op->parsed()) report = verify_operator(c.seed);
    if (hp->parsed()) report = verify_hp_oracles(c.seed);
    if (desk->parsed()) report = verify_desk_scale();
    if (check->parsed()) report = verify_lemma(lemma_number(c.statement), c.seed);
    if (report) {
      text = render(*report, c.format);
      code = report->ok() ? 0 : 1;
    } else {
      const SearchResult r = run_search(c);
      text = render(r, c.format);
      if (r.exhausted) err << "warning: node budget exhausted; absence of witnesses is unproven\n";
      code = unexpected(r) ? 1 : 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!(file << text)) {
      err << "error: cannot write " << c.out_path << "\n";
      return 2;
    }
  }
  if (c.timing) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    err << "elapsed: " << dt.count() << " s\n";
  }
  return code;
}

}  // namespace mucrit::cli
