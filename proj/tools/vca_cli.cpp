// vca_cli.cpp — command-line front end: gen, check, solve, bench, curve.
//
// Exit codes: 0 success, 1 infeasibility or validation failure, 2 budget or
// cap exceeded, 3 malformed input (bad file, bad flag value, bad rational).
// All randomness is seeded and all output is deterministic given the same
// arguments; the only nondeterministic fields are wall-time measurements.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vca/bounds.hpp"
#include "vca/exact.hpp"
#include "vca/feasibility.hpp"
#include "vca/generator.hpp"
#include "vca/instance.hpp"
#include "vca/local_search.hpp"
#include "vca/rational.hpp"
#include "vca/report.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vca::FormatError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vca::FormatError("cannot write file: " + path);
  out << bytes;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

long long parse_integer(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw vca::FormatError("bad " + what + ": \"" + token + "\"");
  }
}

double parse_density(const std::string& token) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw vca::FormatError("bad density: \"" + token + "\"");
  }
}

int thread_cap() {
  const char* env = std::getenv("VCA_THREADS");
  if (env == nullptr || *env == '\0') {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  const long long value = parse_integer(env, "VCA_THREADS");
  if (value < 1) throw vca::FormatError("VCA_THREADS must be at least 1");
  return static_cast<int>(value);
}

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

struct SolveFlags {
  std::string algo = "ls";
  std::string alpha = "3/4";
  int n_max = 8;
  std::string alphas;  // comma-separated rationals; refined search only
  int k_max = 0;       // builds alpha_schedule(k_max) when set
  long long candidate_cap = vca::SearchParams{}.candidate_cap;
  long long node_budget = vca::BnBConfig{}.node_budget;
  long long time_budget_ms = 0;
};

// Shared by cmd_solve and cmd_bench so both report identical numbers.
vca::SolveResult run_algorithm(const vca::Instance& inst,
                               const SolveFlags& flags) {
  vca::SolveResult out;
  out.n = inst.n();
  out.algo = flags.algo;

  const auto start = Clock::now();
  if (flags.algo == "greedy") {
    const vca::LinkSet solution =
        vca::prune_minimal(vca::LinkSet::full(inst));
    out.time_ms = elapsed_ms(start);
    out.solution = solution.members();
    out.size = solution.size();
    out.lower_bound =
        vca::ceil_rat(vca::Rational(inst.n()) / 2).convert_to<long long>();
    out.ratio = vca::Rational(out.size) / out.lower_bound;
  } else if (flags.algo == "exact") {
    vca::BnBConfig cfg;
    cfg.node_budget = flags.node_budget;
    cfg.time_budget_ms = flags.time_budget_ms;
    const vca::ExactResult result = vca::exact_optimum(inst, cfg);
    out.time_ms = elapsed_ms(start);
    out.solution = result.witness.members();
    out.size = result.size;
    out.lower_bound = result.size;
    out.ratio = 1;
  } else if (flags.algo == "ls" || flags.algo == "rls") {
    vca::SearchParams params;
    params.n_max = flags.n_max;
    params.candidate_cap = flags.candidate_cap;
    params.time_budget_ms = flags.time_budget_ms;
    const bool refined = flags.algo == "rls";
    if (refined) {
      if (!flags.alphas.empty() && flags.k_max > 0)
        throw vca::FormatError("choose either --alphas or --kmax, not both");
      if (!flags.alphas.empty()) {
        for (const std::string& token : split_list(flags.alphas))
          params.alphas.push_back(vca::parse_rational(token));
      } else {
        params.alphas = vca::alpha_schedule(flags.k_max > 0 ? flags.k_max : 4);
      }
    } else {
      params.alpha = vca::parse_rational(flags.alpha);
    }
    const vca::SearchResult result = refined
                                         ? vca::refined_local_search(inst, params)
                                         : vca::local_search(inst, params);
    out.time_ms = elapsed_ms(start);
    const vca::LinkSet solution = result.f.unite(result.q);
    for (const std::string& warning : result.warnings)
      std::cerr << "warning: " << warning << "\n";

    // The size guarantee is a theorem; treat a violation as an internal bug.
    // For nonempty F the utility argument gives |F∪Q| ≤ n−3−(1−α_final)|V(F)|;
    // when the search ends with F = ∅ only the minimal-solution bound n−2
    // applies (n = 4, both diagonals: the minimal solution has 2 > n−3 links).
    const vca::Rational alpha =
        refined ? params.alphas.back() : params.alpha;
    const vca::Rational cover_bound =
        result.f.empty()
            ? vca::Rational(inst.n()) - 2
            : vca::Rational(inst.n()) - 3 -
                  (vca::Rational(1) - alpha) *
                      static_cast<int>(result.f.covered_vertices().size());
    if (vca::Rational(solution.size()) > cover_bound)
      throw vca::Error("internal: solution size " +
                       std::to_string(solution.size()) +
                       " exceeds the guaranteed bound " +
                       vca::format_rational(cover_bound));

    const vca::BoundsReport report =
        vca::certify(inst, result.f, solution, alpha, params.n_max);
    out.solution = solution.members();
    out.size = report.size;
    out.lower_bound = report.lower_bound.convert_to<long long>();
    out.lp_bound = report.lp_bound;
    out.ratio = report.ratio;
    out.trace_iterations = static_cast<int>(result.trace.iterations.size());
    out.trace_passes = result.trace.passes;
  } else {
    throw vca::FormatError("unknown algorithm: \"" + flags.algo +
                           "\" (expected greedy, ls, rls, or exact)");
  }

  // Final safety net, independent of the algorithm path.
  vca::LinkSet check(inst, out.solution);
  if (!vca::is_three_connected(inst.n(), check))
    throw vca::Error("internal: reported solution fails 3-connectivity");
  return out;
}

int cmd_gen(const std::string& kind, int n, const std::string& p_token,
            std::uint64_t seed, const std::string& format,
            const std::string& out_path) {
  const double p = parse_density(p_token);
  vca::Instance inst = [&] {
    if (kind == "all_chords") return vca::gen_all_chords(n);
    if (kind == "random") return vca::gen_random(n, p, seed);
    if (kind == "planted") return vca::gen_planted(n, p, seed);
    throw vca::FormatError("unknown kind: \"" + kind +
                           "\" (expected all_chords, random, or planted)");
  }();
  const auto fmt = [&] {
    if (format == "json") return vca::InstanceFormat::json;
    if (format == "text") return vca::InstanceFormat::text;
    throw vca::FormatError("unknown format: \"" + format + "\"");
  }();
  write_output(out_path, vca::serialize_instance(inst, fmt));
  return 0;
}

int cmd_check(const std::string& path, const std::string& subset_arg,
              bool subset_given) {
  const vca::Instance inst = vca::parse_instance(read_file(path));
  const vca::LinkSet full = vca::LinkSet::full(inst);

  auto oracle_trio = [&inst](const vca::LinkSet& set) {
    const bool by_crossing = vca::is_feasible_crossing(set).feasible;
    const bool by_components = vca::is_feasible_components(set).feasible;
    const bool by_connectivity = vca::is_three_connected(inst.n(), set);
    return std::array<bool, 3>{by_crossing, by_components, by_connectivity};
  };

  const auto s_checks = oracle_trio(full);
  bool agree = s_checks[0] == s_checks[1] && s_checks[1] == s_checks[2];
  bool all_feasible = s_checks[0];

  nlohmann::ordered_json j;
  j["n"] = inst.n();
  j["links"] = inst.link_count();
  j["candidate_feasible"] = {s_checks[0], s_checks[1], s_checks[2]};
  if (subset_given) {
    std::vector<int> indices;
    for (const std::string& token : split_list(subset_arg)) {
      const long long value = parse_integer(token, "subset index");
      if (value < 0 || value >= inst.link_count())
        throw vca::FormatError("subset index out of range: " + token);
      indices.push_back(static_cast<int>(value));
    }
    const vca::LinkSet subset = vca::LinkSet::from_indices(inst, indices);
    const auto sub_checks = oracle_trio(subset);
    agree = agree && sub_checks[0] == sub_checks[1] &&
            sub_checks[1] == sub_checks[2];
    all_feasible = all_feasible && sub_checks[0];
    j["subset_feasible"] = {sub_checks[0], sub_checks[1], sub_checks[2]};
  } else {
    j["subset_feasible"] = nullptr;
  }
  j["oracles_agree"] = agree;
  std::cout << j.dump() << "\n";
  return (agree && all_feasible) ? 0 : 1;
}

int cmd_solve(const std::string& path, const SolveFlags& flags) {
  const vca::Instance inst = vca::parse_instance(read_file(path));
  const vca::SolveResult result = run_algorithm(inst, flags);
  std::cout << vca::serialize_solve_result(result);
  return 0;
}

struct BenchJob {
  int n{0};
  std::string p_token;
  std::uint64_t seed{0};
};

int cmd_bench(const std::string& n_list, const std::string& p_list,
              const std::string& seed_list, const std::string& algo_list,
              const SolveFlags& base_flags) {
  std::vector<int> ns;
  for (const std::string& token : split_list(n_list))
    ns.push_back(static_cast<int>(parse_integer(token, "n")));
  const std::vector<std::string> ps = split_list(p_list);
  for (const std::string& token : ps) parse_density(token);  // validate early
  std::vector<std::uint64_t> seeds;
  for (const std::string& token : split_list(seed_list))
    seeds.push_back(static_cast<std::uint64_t>(parse_integer(token, "seed")));
  const std::vector<std::string> algos = split_list(algo_list);
  if (ns.empty() || ps.empty() || seeds.empty() || algos.empty())
    throw vca::FormatError("bench needs nonempty --n-list, --p-list, "
                           "--seeds, and --algos");
  for (const std::string& algo : algos)
    if (algo != "greedy" && algo != "ls" && algo != "rls" && algo != "exact")
      throw vca::FormatError("unknown algorithm in --algos: \"" + algo + "\"");

  std::vector<BenchJob> jobs;
  for (int n : ns)
    for (const std::string& p : ps)
      for (std::uint64_t seed : seeds) jobs.push_back({n, p, seed});

  const bool with_exact =
      std::find(algos.begin(), algos.end(), "exact") != algos.end();
  std::vector<std::string> outputs(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        const BenchJob& job = jobs[i];
        const vca::Instance inst =
            vca::gen_random(job.n, parse_density(job.p_token), job.seed);
        std::optional<int> exact_size;
        if (with_exact) {
          SolveFlags flags = base_flags;
          flags.algo = "exact";
          exact_size = run_algorithm(inst, flags).size;
        }
        std::ostringstream rows;
        for (const std::string& algo : algos) {
          SolveFlags flags = base_flags;
          flags.algo = algo;
          const vca::SolveResult res = run_algorithm(inst, flags);
          rows << job.n << "," << job.p_token << "," << job.seed << ","
               << algo << "," << res.size << ",";
          if (exact_size) rows << *exact_size;
          rows << ",";
          if (exact_size)
            rows << vca::format_rational(
                vca::Rational(res.size) / *exact_size);
          rows << "," << res.time_ms << "\n";
        }
        outputs[i] = rows.str();
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  const int pool = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(pool));
  for (int t = 0; t < pool; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  for (const std::exception_ptr& failure : failures)
    if (failure) std::rethrow_exception(failure);

  std::cout << "n,p,seed,algo,size,exact,ratio,time_ms\n";
  for (const std::string& rows : outputs) std::cout << rows;
  return 0;
}

int cmd_curve(const std::string& what, int k_max) {
  if (k_max < 1) throw vca::FormatError("--kmax must be at least 1");
  if (what == "falpha" || what == "bound") {
    std::cout << "alpha,f_alpha,ratio_bound\n";
    for (const vca::Rational& alpha : vca::alpha_schedule(k_max))
      std::cout << vca::format_rational(alpha) << ","
                << vca::format_rational(vca::f_alpha(alpha)) << ","
                << vca::format_rational(vca::ratio_bound(alpha)) << "\n";
    return 0;
  }
  if (what == "integral") {
    std::vector<int> ks;
    for (int k = 1; k <= std::min(k_max, 100); ++k) ks.push_back(k);
    for (long long k = 200; k < k_max; k *= 2)
      ks.push_back(static_cast<int>(k));
    if (k_max > 100) ks.push_back(k_max);
    std::cout << "k,alpha_k,integral_bound\n";
    for (int k : ks) {
      const vca::Rational alpha_k(k + 4, 2 * k + 3);
      std::cout << k << "," << vca::format_rational(alpha_k) << ","
                << vca::format_rational(vca::integral_bound(k)) << "\n";
    }
    return 0;
  }
  throw vca::FormatError("unknown curve: \"" + what +
                         "\" (expected falpha, bound, or integral)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle 3-connectivity augmentation toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a feasible instance");
  std::string gen_kind = "random", gen_p = "0.5", gen_format = "json";
  std::string gen_out;
  int gen_n = 8;
  std::uint64_t gen_seed = 1;
  gen->add_option("--kind", gen_kind, "all_chords | random | planted");
  gen->add_option("--n", gen_n, "cycle length (>= 4)")->required();
  gen->add_option("--p", gen_p, "chord density in (0, 1]");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--format", gen_format, "json | text");
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  // check
  auto* check = app.add_subcommand("check", "run all feasibility oracles");
  std::string check_file, check_subset;
  check->add_option("file", check_file, "instance file")->required();
  auto* subset_opt = check->add_option(
      "--subset", check_subset, "comma-separated link indices (0-based)");

  // solve
  auto* solve = app.add_subcommand("solve", "solve one instance");
  std::string solve_file;
  SolveFlags flags;
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--algo", flags.algo, "greedy | ls | rls | exact");
  solve->add_option("--alpha", flags.alpha, "improvement threshold, as p/q");
  solve->add_option("--nmax", flags.n_max, "improvement set size limit");
  solve->add_option("--alphas", flags.alphas,
                    "comma-separated ascending p/q schedule (rls)");
  solve->add_option("--kmax", flags.k_max,
                    "build the canonical schedule for this k (rls)");
  solve->add_option("--cap", flags.candidate_cap,
                    "candidate sets examined per improvement step");
  solve->add_option("--node-budget", flags.node_budget,
                    "branch-and-bound node budget (exact)");
  solve->add_option("--time-budget", flags.time_budget_ms,
                    "wall-clock budget in ms (0 = unlimited)");

  // bench
  auto* bench = app.add_subcommand("bench", "seeded benchmark grid, CSV");
  std::string bench_ns, bench_ps = "0.5", bench_seeds = "1",
              bench_algos = "greedy,ls";
  bench->add_option("--n-list", bench_ns, "comma-separated n values")
      ->required();
  bench->add_option("--p-list", bench_ps, "comma-separated densities");
  bench->add_option("--seeds", bench_seeds, "comma-separated seeds");
  bench->add_option("--algos", bench_algos,
                    "comma-separated subset of greedy,ls,rls,exact");
  bench->add_option("--alpha", flags.alpha, "threshold for ls rows");
  bench->add_option("--nmax", flags.n_max, "size limit for ls/rls rows");
  bench->add_option("--kmax", flags.k_max, "schedule size for rls rows");

  // curve
  auto* curve = app.add_subcommand("curve", "constant curves, CSV");
  std::string curve_what = "falpha";
  int curve_kmax = 4;
  curve->add_option("--what", curve_what, "falpha | bound | integral");
  curve->add_option("--kmax", curve_kmax, "schedule refinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 3;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_kind, gen_n, gen_p, gen_seed, gen_format, gen_out);
    if (check->parsed())
      return cmd_check(check_file, check_subset, subset_opt->count() > 0);
    if (solve->parsed()) return cmd_solve(solve_file, flags);
    if (bench->parsed())
      return cmd_bench(bench_ns, bench_ps, bench_seeds, bench_algos, flags);
    if (curve->parsed()) return cmd_curve(curve_what, curve_kmax);
    return 3;
  } catch (const vca::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const vca::LoopError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const vca::CycleEdgeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const vca::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vca::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
