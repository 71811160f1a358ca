// Command-line front end: construct named families, measure induced-subgraph
// statistics, run bound checkers, exact searches, spread generators, the
// two-cover tightness dashboard, and spectral verification.
//
// Exit codes: 0 success, 1 usage, 2 precondition/domain error, 3 budget
// exhaustion, 4 assertable-bound violation (with --assert).

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/kneserlab.hpp"

namespace {

using namespace kneserlab;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolation = 4;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ResourceError("cannot open output file " + out_path);
    out << text;
  }
}

KSet parse_set(const std::string& csv, const Params& p, const char* what) {
  std::vector<int> elems;
  std::string token;
  std::istringstream in(csv);
  while (std::getline(in, token, ',')) {
    try {
      elems.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw DomainError(std::string(what) + ": cannot parse element '" + token + "'");
    }
  }
  return KSet::of(elems, p);
}

KSet first_kset_avoiding(int x, const Params& p) {
  KSet s;
  int taken = 0;
  for (int e = 1; e <= p.n && taken < p.k; ++e) {
    if (e == x) continue;
    s.set(e);
    ++taken;
  }
  if (taken < p.k) throw DomainError("no k-set avoiding x fits in the ground set");
  return s;
}

struct ConstructArgs {
  std::string family;
  int n = 0;
  int k = 0;
  int x = 1;
  int i = 1;
  int l = 1;
  int lp = 1;
  int s = 2;
  std::int64_t m = 0;
  std::uint64_t seed = 1;
  bool require_non_intersecting = false;
  std::string t_csv, f0_csv, fprime_csv;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  const Params p{a.n, a.k};
  p.validate();
  Family fam;
  Json meta;
  meta["family"] = a.family;
  if (a.family == "star") {
    fam = make_star(a.x, p);
  } else if (a.family == "star-plus") {
    const KSet t = a.t_csv.empty() ? first_kset_avoiding(a.x, p) : parse_set(a.t_csv, p, "--t");
    fam = make_star_plus(a.x, t, p);
  } else if (a.family == "hm") {
    const KSet f0 = a.f0_csv.empty() ? first_kset_avoiding(a.x, p) : parse_set(a.f0_csv, p, "--f0");
    fam = make_hilton_milner(a.x, f0, p);
  } else if (a.family == "D") {
    const KSet f0 = a.f0_csv.empty() ? first_kset_avoiding(a.x, p) : parse_set(a.f0_csv, p, "--f0");
    KSet fprime;
    if (a.fprime_csv.empty()) {
      fprime.set(a.x);
      int taken = 1;
      for (int e = 1; e <= p.n && taken < p.k; ++e) {
        if (e == a.x || f0.test(e) || fprime.test(e)) continue;
        fprime.set(e);
        ++taken;
      }
    } else {
      fprime = parse_set(a.fprime_csv, p, "--fprime");
    }
    fam = make_D(a.x, f0, fprime, p);
  } else if (a.family == "E") {
    fam = make_E(a.i, p);
    meta["i"] = a.i;
  } else if (a.family == "W") {
    fam = make_W(a.l, p);
    meta["l"] = a.l;
  } else if (a.family == "Wprime") {
    fam = make_W_prime(a.l, a.lp, p);
    meta["l"] = a.l;
    meta["lp"] = a.lp;
  } else if (a.family == "G") {
    fam = make_tightness_G(a.s, p);
    meta["s"] = a.s;
  } else if (a.family == "lex") {
    fam = lex_family(BigInt(a.m), p);
    meta["m"] = a.m;
  } else if (a.family == "random") {
    fam = make_random(BigInt(a.m), p, a.seed, a.require_non_intersecting);
    meta["m"] = a.m;
    meta["seed"] = a.seed;
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
  }
  emit(family_to_string(fam, meta), a.out);
  return 0;
}

int run_measure(const std::string& in_path, const std::string& out_path) {
  const FamilyFile file = read_family(in_path);
  const Family& f = file.family;
  Json j;
  j["size"] = f.size();
  if (f.empty()) {
    j["d"] = nullptr;
    j["e"] = "0";
    j["tau"] = 0;
    j["c1"] = "0";
    j["c2"] = "0";
    j["intersecting"] = true;
  } else {
    j["d"] = max_degree(f).max;
    j["e"] = to_string(edge_count(f));
    j["tau"] = covering_number(f).value;
    j["c1"] = to_string(c_value(f, 1));
    j["c2"] = to_string(c_value(f, 2));
    j["intersecting"] = is_intersecting(f);
  }
  emit(j.dump() + "\n", out_path);
  return 0;
}

int run_bounds(const std::string& in_path, std::vector<std::string> checks,
               const std::string& format, bool assert_mode, const std::string& out_path) {
  const FamilyFile file = read_family(in_path);
  const Family& f = file.family;
  if (checks.empty()) {
    checks = {"edge-floor", "pair-degree", "element-split", "degree-or-concentration",
              "restriction-edges", "ratio-identity"};
  }
  const bool defaulted_all = checks.size() == 6;
  std::vector<BoundReport> reports;
  for (const std::string& c : checks) {
    if (c == "edge-floor") {
      reports.push_back(edge_floor_check(f));
    } else if (c == "pair-degree" || c == "element-split") {
      if (defaulted_all && (f.empty() || is_intersecting(f) || f.params().n <= 2 * f.params().k)) {
        continue;  // precondition not met; skip silently only in the default sweep
      }
      reports.push_back(c == "pair-degree" ? disjoint_pair_degree_bound(f)
                                           : element_split_degree_bound(f));
    } else if (c == "degree-or-concentration") {
      if (defaulted_all && f.empty()) continue;
      reports.push_back(degree_or_concentration_bound(f));
    } else if (c == "restriction-edges") {
      if (defaulted_all && f.empty()) continue;
      for (int i = 1; i < f.params().k; ++i) {
        const auto rr = restriction_edge_bounds(f, i);
        reports.push_back(rr.per_member);
        reports.push_back(rr.aggregate);
      }
    } else if (c == "ratio-identity") {
      if (defaulted_all && (f.params().k < 2 || f.params().n < 2 * f.params().k)) continue;
      reports.push_back(degree_ratio_identity(f.params()));
    } else {
      throw CLI::ValidationError("--checks", "unknown check '" + c + "'");
    }
  }
  if (format == "csv") {
    emit(reports_to_csv(reports), out_path);
  } else {
    emit(reports_to_json(reports).dump() + "\n", out_path);
  }
  if (assert_mode) {
    for (const auto& r : reports) {
      if (r.assertable && !r.holds()) {
        std::cerr << "assertable bound violated: " << r.name << " slack "
                  << to_string(r.slack()) << "\n";
        return kExitViolation;
      }
    }
  }
  return 0;
}

int run_search(const std::string& objective, std::int64_t m, int n, int k,
               std::uint64_t budget_nodes, std::uint64_t budget_ms, bool symmetry,
               const std::string& out_path) {
  SearchBudget budget = SearchBudget::from_env();
  if (budget_nodes > 0) budget.max_nodes = budget_nodes;
  if (budget_ms > 0) budget.max_millis = budget_ms;
  const Params p{n, k};
  SearchResult result;
  if (objective == "max-degree") {
    result = min_max_degree(m, p, budget, symmetry);
  } else if (objective == "min-edges") {
    result = min_edges(m, p, budget, symmetry);
  } else {
    throw CLI::ValidationError("--objective", "expected max-degree or min-edges");
  }
  emit(search_result_to_json(result, m, p, objective).dump() + "\n", out_path);
  return result.proven_optimal ? 0 : kExitBudget;
}

int run_spread(const std::string& mode, const std::string& in_path, int n, int k, int d, int c,
               std::uint64_t seed, int retries, const std::string& out_path) {
  if (mode == "poly") {
    const SpreadFamily s = polynomial_spread(Params{n, k}, d, seed);
    emit(spread_to_json(s).dump() + "\n", out_path);
    return 0;
  }
  if (mode == "monte-carlo") {
    if (in_path.empty()) throw CLI::ValidationError("--in", "monte-carlo mode needs a base family");
    const FamilyFile file = read_family(in_path);
    const auto result = sample_spread(file.family, c, seed, retries);
    Json j = spread_to_json(result.result);
    j["meta"]["success"] = result.success;
    j["meta"]["attempts"] = result.attempts;
    j["meta"]["target_size"] = result.target_size;
    j["meta"]["target_spread"] = result.target_spread;
    emit(j.dump() + "\n", out_path);
    return result.success ? 0 : kExitBudget;
  }
  throw CLI::ValidationError("--mode", "expected poly or monte-carlo");
}

int run_tightness(int n, int k, int s, const std::string& out_path) {
  const Params p{n, k};
  const Family g = make_tightness_G(s, p);
  const auto [form1, form2] = cover_pair_degree_bounds(g, 1, 2);
  Json j;
  j["n"] = n;
  j["k"] = k;
  j["s"] = s;
  j["size"] = g.size();
  j["d_exact"] = max_degree(g).max;
  j["degree_formula"] = to_string(tightness_degree(p, s));
  j["form1"] = to_string(form1.rhs);
  j["form2"] = to_string(form2.rhs);
  j["d_ge_form1"] = form1.holds();
  j["d_ge_form2"] = form2.holds();
  j["residual_term"] = to_string(BigInt(s) * binom(n - 3, k - 3));
  emit(j.dump() + "\n", out_path);
  return (form1.holds() && form2.holds()) ? 0 : kExitViolation;
}

int run_spectral(int n, int k, int trials, std::uint64_t seed, int jobs, bool assert_mode,
                 const std::string& out_path) {
  const Params p{n, k};
  const KneserGraph graph = build_kneser_graph(p);
  const BigInt formula = kneser_lambda(p);
  const BigInt measured = lambda_from_spectrum(graph);
  const bool lambda_match = formula == measured;

  int violations = 0;
  if (trials > 0) {
    // Pre-seeded trials, sharded over a small thread pool; the verdict per
    // trial is independent of scheduling.
    if (jobs < 1) jobs = 1;
    std::vector<std::future<int>> futures;
    const int per_job = (trials + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      const int lo = j * per_job;
      const int hi = std::min(trials, lo + per_job);
      if (lo >= hi) break;
      futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
        int bad = 0;
        for (int t = lo; t < hi; ++t) {
          SplitMix64 rng(seed + static_cast<std::uint64_t>(t) * 0x9E3779B97F4A7C15ull);
          auto draw = [&](std::uint64_t bound) { return rng.below(bound); };
          std::vector<std::int64_t> b, c;
          const auto order = static_cast<std::uint64_t>(graph.order());
          for (auto v : sample_distinct(rng, order, draw(order + 1))) b.push_back(v);
          for (auto v : sample_distinct(rng, order, draw(order + 1))) c.push_back(v);
          if (!mixing_check(graph, b, c).holds()) ++bad;
        }
        return bad;
      }));
    }
    for (auto& fut : futures) violations += fut.get();
  }

  Json j;
  j["n"] = n;
  j["k"] = k;
  j["vertices"] = graph.order();
  j["lambda_formula"] = to_string(formula);
  j["lambda_spectrum"] = to_string(measured);
  j["lambda_match"] = lambda_match;
  j["mixing_trials"] = trials;
  j["mixing_violations"] = violations;
  emit(j.dump() + "\n", out_path);
  if (assert_mode && (!lambda_match || violations > 0)) return kExitViolation;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal-family toolkit for induced subgraphs of Kneser graphs"};
  app.require_subcommand(1);

  // construct
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named family and write it as JSON");
  construct->add_option("--family", ca.family, "star|star-plus|hm|D|E|W|Wprime|G|lex|random")
      ->required();
  construct->add_option("--n", ca.n, "ground-set size")->required();
  construct->add_option("--k", ca.k, "member size")->required();
  construct->add_option("--x", ca.x, "distinguished element (default 1)");
  construct->add_option("--i", ca.i, "window index for E");
  construct->add_option("--l", ca.l, "window width for W / Wprime");
  construct->add_option("--lp", ca.lp, "window threshold for Wprime");
  construct->add_option("--s", ca.s, "window width for G");
  construct->add_option("--m", ca.m, "size for lex / random");
  construct->add_option("--seed", ca.seed, "seed for random");
  construct->add_flag("--require-non-intersecting", ca.require_non_intersecting,
                      "resample random draws until a disjoint pair appears");
  construct->add_option("--t", ca.t_csv, "explicit T for star-plus, e.g. 2,3");
  construct->add_option("--f0", ca.f0_csv, "explicit f0 for hm / D");
  construct->add_option("--fprime", ca.fprime_csv, "explicit fprime for D");
  construct->add_option("--out", ca.out, "output file (default stdout)");

  // measure
  std::string measure_in, measure_out;
  auto* measure = app.add_subcommand("measure", "Print size, d, e, tau, c1, c2, intersecting");
  measure->add_option("--in", measure_in, "family JSON file")->required();
  measure->add_option("--out", measure_out, "output file (default stdout)");

  // bounds
  std::string bounds_in, bounds_format{"csv"}, bounds_out;
  std::vector<std::string> bounds_checks;
  bool bounds_assert = false;
  auto* bounds = app.add_subcommand("bounds", "Run bound checkers over a family file");
  bounds->add_option("--in", bounds_in, "family JSON file")->required();
  bounds->add_option("--checks", bounds_checks,
                     "subset of: edge-floor pair-degree element-split degree-or-concentration "
                     "restriction-edges ratio-identity (default: all applicable)")
      ->delimiter(',');
  bounds->add_option("--format", bounds_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  bounds->add_flag("--assert", bounds_assert, "exit 4 if an assertable bound is violated");
  bounds->add_option("--out", bounds_out, "output file (default stdout)");

  // search
  std::string search_objective{"max-degree"}, search_out;
  std::int64_t search_m = 0;
  int search_n = 0, search_k = 0;
  std::uint64_t search_nodes = 0, search_ms = 0;
  bool search_symmetry = false;
  auto* search = app.add_subcommand("search", "Exact optimization over families of size m");
  search->add_option("--objective", search_objective, "max-degree|min-edges");
  search->add_option("--m", search_m, "family size")->required();
  search->add_option("--n", search_n, "ground-set size")->required();
  search->add_option("--k", search_k, "member size")->required();
  search->add_option("--budget-nodes", search_nodes, "node budget (overrides env)");
  search->add_option("--budget-ms", search_ms, "wall-clock budget in ms");
  search->add_flag("--symmetry", search_symmetry, "fix the lex-least member to contain 1");
  search->add_option("--out", search_out, "output file (default stdout)");

  // spread
  std::string spread_mode, spread_in, spread_out;
  int spread_d = 1, spread_c = 1, spread_retries = 50;
  int spread_n = 0, spread_k = 0;
  std::uint64_t spread_seed = 1;
  auto* spread = app.add_subcommand("spread", "Generate low-pairwise-intersection families");
  spread->add_option("--mode", spread_mode, "poly|monte-carlo")->required();
  spread->add_option("--n", spread_n, "ground-set size (poly)");
  spread->add_option("--k", spread_k, "member size (poly)");
  spread->add_option("--d", spread_d, "polynomial degree (poly)");
  spread->add_option("--in", spread_in, "base family file (monte-carlo)");
  spread->add_option("--c", spread_c, "target exponent: want k^c members (monte-carlo)");
  spread->add_option("--retries", spread_retries, "draw retries (monte-carlo)");
  spread->add_option("--seed", spread_seed, "seed");
  spread->add_option("--out", spread_out, "output file (default stdout)");

  // tightness
  int tight_n = 0, tight_k = 0, tight_s = 0;
  std::string tight_out;
  auto* tightness = app.add_subcommand("tightness", "Two-cover tightness dashboard");
  tightness->add_option("--n", tight_n, "ground-set size")->required();
  tightness->add_option("--k", tight_k, "member size")->required();
  tightness->add_option("--s", tight_s, "window width")->required();
  tightness->add_option("--out", tight_out, "output file (default stdout)");

  // spectral
  int spec_n = 0, spec_k = 0, spec_trials = 0, spec_jobs = 1;
  std::uint64_t spec_seed = 1;
  bool spec_assert = false;
  std::string spec_out;
  auto* spectral = app.add_subcommand("spectral", "Verify the lambda closed form on a tiny graph");
  spectral->add_option("--n", spec_n, "ground-set size")->required();
  spectral->add_option("--k", spec_k, "member size")->required();
  spectral->add_option("--mixing-trials", spec_trials, "random (B,C) mixing checks to run");
  spectral->add_option("--seed", spec_seed, "seed for the mixing trials");
  spectral->add_option("--jobs", spec_jobs, "worker cap for the mixing trials");
  spectral->add_flag("--assert", spec_assert, "exit 4 on any violation");
  spectral->add_option("--out", spec_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (construct->parsed()) return run_construct(ca);
    if (measure->parsed()) return run_measure(measure_in, measure_out);
    if (bounds->parsed())
      return run_bounds(bounds_in, bounds_checks, bounds_format, bounds_assert, bounds_out);
    if (search->parsed())
      return run_search(search_objective, search_m, search_n, search_k, search_nodes, search_ms,
                        search_symmetry, search_out);
    if (spread->parsed())
      return run_spread(spread_mode, spread_in, spread_n, spread_k, spread_d, spread_c,
                        spread_seed, spread_retries, spread_out);
    if (tightness->parsed()) return run_tightness(tight_n, tight_k, tight_s, tight_out);
    if (spectral->parsed())
      return run_spectral(spec_n, spec_k, spec_trials, spec_seed, spec_jobs, spec_assert,
                          spec_out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitDomain;
  }
}
