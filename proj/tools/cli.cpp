#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sur/constructions.hpp"
#include "sur/cover.hpp"
#include "sur/enumerate.hpp"
#include "sur/error.hpp"
#include "sur/exact.hpp"
#include "sur/hitting.hpp"
#include "sur/io.hpp"
#include "sur/randomized.hpp"
#include "sur/verify.hpp"

namespace sur::cli {

namespace {

using nlohmann::json;

// Missing or inconsistent flags for an otherwise well-formed command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "structured";
  std::string out_path;

  std::string method;
  std::optional<std::size_t> n, k, r, d, r_min, r_max, n_min, n_max;
  std::optional<double> alpha;
  std::uint64_t seed = 1;
  bool seed_given = false;
  long long delta = 0;
  std::string bicolorings_path, family_path;
  std::size_t max_restarts = kDefaultMaxRestarts;
  std::size_t draw_factor = 100;
  std::uint64_t node_budget = 100'000'000;
  double time_budget = 300.0;
  std::string k_spec, r_spec;
};

// What a command produced: payload, exit code and a text rendering.
struct Outcome {
  json outputs;
  json params = json::object();
  std::optional<std::uint64_t> seed;
  int exit_code = kExitOk;
  std::string text;
};

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& what) {
  if (!v) throw UsageError(what + " requires " + flag);
  return *v;
}

std::string family_lines(const SurFamily& f) {
  std::string s;
  for (const auto& set : f.sets) s += "  {" + set.to_string() + "}\n";
  return s;
}

json certificate_summary(const Certificate& cert, const BicoloringFamily& target,
                         const std::string& against) {
  json uncovered = json::array();
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (!cert.entries[i]) uncovered.push_back(target.items[i].to_string());
  }
  return json{{"against", against},
              {"delta", cert.delta},
              {"bicolorings", cert.entries.size()},
              {"covered", cert.covered_count()},
              {"uncovered", std::move(uncovered)}};
}

BicoloringFamily load_bicolorings(const std::string& path) {
  return io::parse_bicolorings(io::read_file(path));
}

// Verifies a constructed family against its target and folds the result
// into the outcome.
void attach_certificate(Outcome& o, const SurFamily& family, const BicoloringFamily& target,
                        long long delta, const std::string& against) {
  auto cert = verify_sur(family, target, delta);
  o.outputs["certificate"] = certificate_summary(cert, target, against);
  o.text += "verified against " + against + ": " + std::to_string(cert.covered_count()) + "/" +
            std::to_string(cert.entries.size()) + " covered (delta " + std::to_string(delta) + ")\n";
  if (!cert.all_covered()) o.exit_code = kExitDomainError;
}

Outcome cmd_construct(const Options& opt) {
  Outcome o;
  const std::string& m = opt.method;
  o.params["method"] = m;
  SurFamily family;
  std::optional<BicoloringFamily> target;
  std::string against;
  long long delta = 0;

  const auto target_all = [&](std::size_t n) {
    try {
      target = enumerate_nontrivial_bicolorings(n);
      against = "all nontrivial bicolorings";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kCapExceeded) throw;
    }
  };

  if (m == "star" || m == "dyadic" || m == "window" || m == "edge-cover") {
    const std::size_t n = need(opt.n, "--n", "--method " + m);
    o.params["n"] = n;
    if (m == "star") {
      family = star(n);
      target_all(n);
    } else if (m == "dyadic") {
      family = dyadic(n);
      target_all(n);
    } else if (m == "window") {
      family = sliding_window(n);
      target = enumerate_k_bicolorings(n, n / 2);
      against = "all " + std::to_string(n / 2) + "-bicolorings";
    } else {
      family = singleton_edge_cover(n);
      target = enumerate_k_bicolorings(n, 1);
      against = "all 1-bicolorings";
    }
  } else if (m == "lift") {
    if (opt.family_path.empty()) throw UsageError("--method lift requires --family (the base SUR)");
    const std::size_t r = need(opt.r, "--r", "--method lift");
    SurFamily base = io::parse_family(io::read_file(opt.family_path));
    if (opt.n && *opt.n != base.n) throw UsageError("--n disagrees with the base family");
    o.params["family"] = opt.family_path;
    o.params["r"] = r;
    family = recursive_lift(base, base.n, r);
    o.outputs["base_size"] = base.size();
    o.outputs["size_bound"] = (base.n - r + 1) * base.size();
    if (opt.k) {
      o.params["k"] = *opt.k;
      target = enumerate_k_bicolorings(base.n, *opt.k);
      against = "all " + std::to_string(*opt.k) + "-bicolorings";
    }
  } else if (m == "greedy-cover") {
    const std::size_t n = need(opt.n, "--n", "--method greedy-cover");
    const std::size_t k = need(opt.k, "--k", "--method greedy-cover");
    const std::size_t r = need(opt.r, "--r", "--method greedy-cover");
    o.params["n"] = n;
    o.params["k"] = k;
    o.params["r"] = r;
    family = greedy_cover(n, k, r);
    if (auto ls = lovasz_stein_bound(static_cast<long long>(n), static_cast<long long>(k),
                                     static_cast<long long>(r))) {
      o.outputs["lovasz_stein_upper"] = *ls;
    }
    target = enumerate_k_bicolorings(n, k);
    against = "all " + std::to_string(k) + "-bicolorings";
  } else if (m == "hitting") {
    if (opt.bicolorings_path.empty()) throw UsageError("--method hitting requires --bicolorings");
    o.params["bicolorings"] = opt.bicolorings_path;
    auto input = load_bicolorings(opt.bicolorings_path);
    auto h = greedy_hitting_set(bicolorings_to_setfamily(input));
    o.outputs["hitting_set"] = h.elements;
    family = sur_from_hitting_set(h, input.n);
    target = std::move(input);
    against = "input bicolorings";
  } else if (m == "biased") {
    if (opt.bicolorings_path.empty()) throw UsageError("--method biased requires --bicolorings");
    const std::size_t r = need(opt.r, "--r", "--method biased");
    const std::size_t d = need(opt.d, "--d", "--method biased");
    o.params["bicolorings"] = opt.bicolorings_path;
    o.params["r"] = r;
    o.params["d"] = d;
    o.params["draw_factor"] = opt.draw_factor;
    o.seed = opt.seed;
    auto input = load_bicolorings(opt.bicolorings_path);
    BiasedOptions bo;
    bo.draw_factor = opt.draw_factor;
    auto res = biased_sur(input, r, d, opt.seed, bo);
    family = res.family;
    delta = res.certificate.delta;
    o.outputs["params"] = json{{"t", res.params.t},
                               {"delta", res.params.delta},
                               {"delta_floor", res.params.delta_floor},
                               {"size_window", {res.params.size_min, res.params.size_max}},
                               {"inclusion_probability", res.params.inclusion_probability}};
    json trace{{"seed", res.trace.seed},
               {"rounds_drawn", res.trace.rounds_drawn},
               {"kept", res.trace.kept},
               {"groups_tested", res.trace.groups_tested},
               {"winning_group", res.trace.winning_group ? json(*res.trace.winning_group) : json(nullptr)}};
    o.outputs["trace"] = std::move(trace);
    target = std::move(input);
    against = "input bicolorings";
  } else if (m == "sampled") {
    const std::size_t r = need(opt.r, "--r", "--method sampled");
    if (!opt.alpha) throw UsageError("--method sampled requires --alpha");
    o.params["r"] = r;
    o.params["alpha"] = *opt.alpha;
    o.params["max_restarts"] = opt.max_restarts;
    o.seed = opt.seed;
    BicoloringFamily input;
    if (!opt.bicolorings_path.empty()) {
      o.params["bicolorings"] = opt.bicolorings_path;
      input = load_bicolorings(opt.bicolorings_path);
    } else {
      const std::size_t n = need(opt.n, "--n (or --bicolorings)", "--method sampled");
      const std::size_t k = need(opt.k, "--k (or --bicolorings)", "--method sampled");
      o.params["n"] = n;
      o.params["k"] = k;
      input = enumerate_k_bicolorings(n, k);
    }
    auto res = sampled_exact_sur(input, r, *opt.alpha, opt.seed, opt.max_restarts);
    family = res.family;
    o.outputs["draws"] = res.draws;
    o.outputs["attempts"] = res.attempts;
    target = std::move(input);
    against = "input bicolorings";
  } else {
    throw UsageError("unknown method '" + m +
                     "' (expected star|dyadic|window|edge-cover|lift|greedy-cover|hitting|biased|sampled)");
  }

  o.outputs["method"] = m;
  o.outputs["family"] = io::to_json(family);
  o.outputs["size"] = family.size();
  o.outputs["delta"] = delta;
  o.text = "construct " + m + ": n = " + std::to_string(family.n) + ", size = " +
           std::to_string(family.size()) + "\n" + family_lines(family);
  if (o.outputs.contains("hitting_set")) {
    o.text += "hitting set H = " + o.outputs["hitting_set"].dump() + "\n";
  }
  if (target) attach_certificate(o, family, *target, delta, against);
  return o;
}

Outcome cmd_verify(const Options& opt) {
  Outcome o;
  if (opt.family_path.empty()) throw UsageError("verify requires --family");
  if (opt.delta < 0) throw UsageError("--delta must be non-negative");
  SurFamily family = io::parse_family(io::read_file(opt.family_path));
  o.params["family"] = opt.family_path;
  o.params["delta"] = opt.delta;
  BicoloringFamily target;
  std::string against;
  if (!opt.bicolorings_path.empty()) {
    o.params["bicolorings"] = opt.bicolorings_path;
    target = load_bicolorings(opt.bicolorings_path);
    against = "input bicolorings";
  } else if (opt.k) {
    o.params["k"] = *opt.k;
    target = enumerate_k_bicolorings(family.n, *opt.k);
    against = "all " + std::to_string(*opt.k) + "-bicolorings";
  } else {
    target = enumerate_nontrivial_bicolorings(family.n);
    against = "all nontrivial bicolorings";
  }
  auto cert = verify_sur(family, target, opt.delta);
  o.outputs["summary"] = certificate_summary(cert, target, against);
  o.outputs["certificate"] = io::to_json(cert);
  o.outputs["valid"] = cert.all_covered();
  o.exit_code = cert.all_covered() ? kExitOk : kExitDomainError;
  o.text = "verify: " + std::to_string(cert.covered_count()) + "/" + std::to_string(cert.entries.size()) +
           " bicolorings covered (delta " + std::to_string(opt.delta) + ")\n";
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (!cert.entries[i]) o.text += "  UNCOVERED " + target.items[i].to_string() + "\n";
  }
  return o;
}

SearchConfig search_config(const Options& opt, json& params) {
  SearchConfig cfg;
  if (opt.r) {
    if (opt.r_min || opt.r_max) throw UsageError("use either --r or --r-min/--r-max");
    cfg = SearchConfig::fixed_r(*opt.r);
  } else {
    cfg = SearchConfig::all_even(opt.r_min.value_or(2), opt.r_max.value_or(0));
  }
  cfg.node_budget = opt.node_budget;
  cfg.time_budget_seconds = opt.time_budget;
  params["pool"] = cfg.describe();
  params["node_budget"] = opt.node_budget;
  params["time_budget"] = opt.time_budget;
  return cfg;
}

json optimal_json(const OptimalResult& res) {
  return json{{"family", io::to_json(res.family)},
              {"size", res.size},
              {"status", res.proved_optimal() ? "PROVED_OPTIMAL" : "BUDGET_EXHAUSTED"},
              {"lower_bound", res.lower_bound},
              {"nodes", res.nodes},
              {"points", res.points},
              {"candidates", res.candidates},
              {"flip_quotient", res.flip_quotient}};
}

Outcome cmd_solve_exact(const Options& opt) {
  Outcome o;
  BicoloringFamily family;
  if (!opt.bicolorings_path.empty()) {
    o.params["bicolorings"] = opt.bicolorings_path;
    family = load_bicolorings(opt.bicolorings_path);
  } else {
    const std::size_t n = need(opt.n, "--n (or --bicolorings)", "solve-exact");
    o.params["n"] = n;
    if (opt.k) {
      o.params["k"] = *opt.k;
      family = enumerate_k_bicolorings(n, *opt.k);
    } else {
      family = enumerate_nontrivial_bicolorings(n);
    }
  }
  auto cfg = search_config(opt, o.params);
  auto res = optimal_sur(family, cfg);
  o.outputs = optimal_json(res);
  o.text = "solve-exact: gamma = " + std::to_string(res.size) + " (" +
           (res.proved_optimal() ? "PROVED_OPTIMAL" : "BUDGET_EXHAUSTED, lower bound " +
                                                          std::to_string(res.lower_bound)) +
           "), " + std::to_string(res.nodes) + " nodes\n" + family_lines(res.family);
  return o;
}

json bounds_json(const BoundsReport& rep) {
  const json infeasible = "INFEASIBLE";
  return json{{"n", rep.n},
              {"k", rep.k},
              {"r", rep.r},
              {"a", big(rep.a)},
              {"v", big(rep.v)},
              {"lovasz_stein_upper", rep.lovasz_stein_upper ? json(*rep.lovasz_stein_upper) : infeasible},
              {"averaging_lower", rep.averaging_lower ? big(*rep.averaging_lower) : infeasible},
              {"nkr1_lower", rep.nkr1_lower},
              {"combined_lower", rep.combined_lower ? big(*rep.combined_lower) : infeasible},
              {"double_counting", double_counting_check(rep.n, rep.k, rep.r)}};
}

Outcome cmd_bounds(const Options& opt) {
  Outcome o;
  const auto n = static_cast<long long>(need(opt.n, "--n", "bounds"));
  const auto k = static_cast<long long>(need(opt.k, "--k", "bounds"));
  const auto r = static_cast<long long>(need(opt.r, "--r", "bounds"));
  if (r == 0) throw UsageError("--r must be positive");
  if (k > n) throw UsageError("--k must not exceed --n");
  o.params = json{{"n", n}, {"k", k}, {"r", r}};
  auto rep = compute_bounds(n, k, r);
  o.outputs = bounds_json(rep);
  std::ostringstream t;
  t << "bounds (n, k, r) = (" << n << ", " << k << ", " << r << ")\n"
    << "  a = " << rep.a << ", v = " << rep.v << "\n";
  if (rep.feasible()) {
    t << "  lower: averaging " << *rep.averaging_lower << ", nkr1 " << rep.nkr1_lower << ", combined "
      << *rep.combined_lower << "\n"
      << "  upper (Lovasz-Stein): " << *rep.lovasz_stein_upper << "\n";
  } else {
    t << "  INFEASIBLE: no " << r << "-set represents a " << k << "-bicoloring\n";
    o.exit_code = kExitDomainError;
  }
  o.text = t.str();
  return o;
}

KSpec parse_k_spec(const std::string& s) {
  if (s == "all") return {KSpec::Kind::kAllNontrivial, 0};
  if (s == "half") return {KSpec::Kind::kHalf, 0};
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size()) return {KSpec::Kind::kFixed, v};
  } catch (const std::exception&) {
  }
  throw UsageError("--k must be an integer, 'all' or 'half'");
}

RSpec parse_r_spec(const std::string& s) {
  if (s == "even") return {RSpec::Kind::kAllEven, 0};
  try {
    std::size_t used = 0;
    const auto v = std::stoul(s, &used);
    if (used == s.size()) return {RSpec::Kind::kFixed, v};
  } catch (const std::exception&) {
  }
  throw UsageError("--r must be an even integer or 'even'");
}

Outcome cmd_table(const Options& opt) {
  Outcome o;
  const std::size_t n_min = need(opt.n_min, "--n-min", "table");
  const std::size_t n_max = need(opt.n_max, "--n-max", "table");
  const KSpec ks = parse_k_spec(opt.k_spec.empty() ? "all" : opt.k_spec);
  const RSpec rs = parse_r_spec(opt.r_spec.empty() ? "even" : opt.r_spec);
  o.params = json{{"n_min", n_min},
                  {"n_max", n_max},
                  {"k", opt.k_spec.empty() ? "all" : opt.k_spec},
                  {"r", opt.r_spec.empty() ? "even" : opt.r_spec},
                  {"node_budget", opt.node_budget},
                  {"time_budget", opt.time_budget}};
  SearchConfig budgets;
  budgets.node_budget = opt.node_budget;
  budgets.time_budget_seconds = opt.time_budget;
  auto cells = gamma_table(n_min, n_max, ks, rs, budgets);

  json rows = json::array();
  std::ostringstream t;
  t << std::left << std::setw(4) << "n" << std::setw(6) << "k" << std::setw(6) << "r" << std::setw(7)
    << "gamma" << std::setw(18) << "status" << std::setw(7) << "lower" << std::setw(10) << "LS-upper"
    << "within\n";
  bool violated = false;
  for (const auto& c : cells) {
    json row{{"n", c.n},
             {"k", c.k ? json(*c.k) : json("all")},
             {"r", c.r ? json(*c.r) : json("even")}};
    t << std::setw(4) << c.n << std::setw(6) << (c.k ? std::to_string(*c.k) : "all") << std::setw(6)
      << (c.r ? std::to_string(*c.r) : "even");
    if (c.error) {
      row["error"] = *c.error;
      t << "error: " << *c.error << "\n";
    } else {
      row["gamma"] = c.result->size;
      row["status"] = c.result->proved_optimal() ? "PROVED_OPTIMAL" : "BUDGET_EXHAUSTED";
      row["lower_bound_proved"] = c.result->lower_bound;
      row["family"] = io::to_json(c.result->family);
      t << std::setw(7) << c.result->size << std::setw(18) << row["status"].get<std::string>();
      if (c.bounds && c.bounds->feasible()) {
        row["combined_lower"] = big(*c.bounds->combined_lower);
        row["lovasz_stein_upper"] = *c.bounds->lovasz_stein_upper;
        std::ostringstream ls;
        ls << *c.bounds->lovasz_stein_upper;
        t << std::setw(7) << c.bounds->combined_lower->str() << std::setw(10) << ls.str();
      } else {
        t << std::setw(7) << "-" << std::setw(10) << "-";
      }
      if (c.within_bounds) {
        row["within_bounds"] = *c.within_bounds;
        violated = violated || !*c.within_bounds;
        t << (*c.within_bounds ? "yes" : "NO");
      } else {
        t << "-";
      }
      t << "\n";
    }
    rows.push_back(std::move(row));
  }
  o.outputs = json{{"rows", std::move(rows)}};
  o.text = t.str();
  if (violated) o.exit_code = kExitDomainError;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Systems of unbiased representatives: constructions, verification, exact search and bounds",
               "sur"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", opt.out_path, "Write the run record to FILE instead of stdout");
  };
  const auto add_sized = [&](CLI::App* sub, std::optional<std::size_t>& target, const char* name,
                             const char* help) {
    sub->add_option_function<std::size_t>(name, [&target](const std::size_t& v) { target = v; }, help);
  };

  auto* construct = app.add_subcommand("construct", "Build a SUR with one of the constructions");
  construct->add_option("--method", opt.method, "star|dyadic|window|edge-cover|lift|greedy-cover|hitting|biased|sampled")
      ->required();
  add_sized(construct, opt.n, "--n", "Ground set size");
  add_sized(construct, opt.k, "--k", "Plus count of the target bicolorings");
  add_sized(construct, opt.r, "--r", "Representative size");
  add_sized(construct, opt.d, "--d", "Imbalance budget (biased)");
  construct->add_option_function<double>("--alpha", [&](const double& v) { opt.alpha = v; }, "Balance parameter (sampled)");
  construct->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) {
    opt.seed = v;
    opt.seed_given = true;
  }, "Random seed (default 1)");
  construct->add_option("--bicolorings", opt.bicolorings_path, "Bicoloring file");
  construct->add_option("--family", opt.family_path, "Base family (lift)");
  construct->add_option("--max-restarts", opt.max_restarts, "Restarts for --method sampled");
  construct->add_option("--draw-factor", opt.draw_factor, "Candidates drawn per unit of t (biased)");
  add_common(construct);

  auto* verify = app.add_subcommand("verify", "Check a family against bicolorings");
  verify->add_option("--family", opt.family_path, "Family file (text or structured)")->required();
  verify->add_option("--bicolorings", opt.bicolorings_path, "Bicoloring file (default: all nontrivial)");
  add_sized(verify, opt.k, "--k", "Verify against all k-bicolorings instead of a file");
  verify->add_option("--delta", opt.delta, "Tolerance on |<X_A, Y_B>|");
  add_common(verify);

  auto* solve = app.add_subcommand("solve-exact", "Minimum SUR by branch and bound");
  solve->add_option("--bicolorings", opt.bicolorings_path, "Bicoloring file");
  add_sized(solve, opt.n, "--n", "Use generated bicolorings of [n]");
  add_sized(solve, opt.k, "--k", "With --n: only k-bicolorings");
  add_sized(solve, opt.r, "--r", "Fixed representative size");
  add_sized(solve, opt.r_min, "--r-min", "Smallest even representative size");
  add_sized(solve, opt.r_max, "--r-max", "Largest even representative size");
  solve->add_option("--node-budget", opt.node_budget, "Search node budget");
  solve->add_option("--time-budget", opt.time_budget, "Search time budget in seconds");
  add_common(solve);

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds on gamma(n, k, r)");
  add_sized(bounds, opt.n, "--n", "Ground set size");
  add_sized(bounds, opt.k, "--k", "Plus count");
  add_sized(bounds, opt.r, "--r", "Representative size");
  add_common(bounds);

  auto* table = app.add_subcommand("table", "Exact gamma over a range of n with bounds");
  add_sized(table, opt.n_min, "--n-min", "Smallest n");
  add_sized(table, opt.n_max, "--n-max", "Largest n");
  table->add_option("--k", opt.k_spec, "k, 'all' or 'half' (default all)");
  table->add_option("--r", opt.r_spec, "r or 'even' (default even)");
  table->add_option("--node-budget", opt.node_budget, "Search node budget per cell");
  table->add_option("--time-budget", opt.time_budget, "Search time budget per cell in seconds");
  add_common(table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  try {
    if (construct->parsed()) {
      command = "construct";
      outcome = cmd_construct(opt);
    } else if (verify->parsed()) {
      command = "verify";
      outcome = cmd_verify(opt);
    } else if (solve->parsed()) {
      command = "solve-exact";
      outcome = cmd_solve_exact(opt);
    } else if (bounds->parsed()) {
      command = "bounds";
      outcome = cmd_bounds(opt);
    } else {
      command = "table";
      outcome = cmd_table(opt);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitDomainError;
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;

  std::string rendered;
  if (opt.format == "text") {
    rendered = outcome.text;
    if (outcome.seed) rendered += "seed: " + std::to_string(*outcome.seed) + "\n";
  } else {
    json record{{"command", command},
                {"params", outcome.params},
                {"outputs", outcome.outputs},
                {"wall_time", wall.count()},
                {"seed", outcome.seed ? json(*outcome.seed) : json(nullptr)}};
    rendered = record.dump(2) + "\n";
  }
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return kExitDomainError;
    }
    f << rendered;
  } else {
    out << rendered;
  }
  return outcome.exit_code;
}

}  // namespace sur::cli
