// Command-line front end: solvers over input files, explicit event lists,
// criterion checking, and the exact self-verification suite, with JSON or
// text reports. All file formats and reported indices are 1-based.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permlll/apps/coloring.hpp"
#include "permlll/apps/packing.hpp"
#include "permlll/apps/transversals.hpp"
#include "permlll/apps/types.hpp"
#include "permlll/apps/validate.hpp"
#include "permlll/criteria.hpp"
#include "permlll/engine.hpp"
#include "permlll/io.hpp"
#include "permlll/parallel.hpp"
#include "permlll/verify.hpp"
#include "permlll/witness.hpp"

namespace {

using nlohmann::json;
using namespace permlll;
using namespace permlll::apps;

constexpr int kExitSuccess = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitIterationLimit = 2;
constexpr int kExitCriterionFailed = 3;

struct CommonOpts {
  std::string input;
  std::uint64_t seed = 0;
  int runs = 1;
  std::uint64_t max_resamples = 10'000'000;
  std::string select = "first";
  std::string mode = "seq";
  std::string deps = "standard";
  bool force = false;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
  if (with_input) cmd->add_option("--input", o.input, "input file")->required();
  cmd->add_option("--seed", o.seed, "base random seed (default 0)");
  cmd->add_option("--runs", o.runs, "independent runs with seeds seed..seed+runs-1")
      ->check(CLI::Range(1, 1'000'000));
  cmd->add_option("--max-resamples", o.max_resamples, "resampling cap per run");
  cmd->add_option("--select", o.select, "event selection: first or random")
      ->check(CLI::IsMember({"first", "random"}));
  cmd->add_option("--mode", o.mode, "seq or par")->check(CLI::IsMember({"seq", "par"}));
  cmd->add_option("--deps", o.deps, "dependency relation: standard or lopsided")
      ->check(CLI::IsMember({"standard", "lopsided"}));
  cmd->add_flag("--force", o.force, "run even when the advisory criterion fails");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
}

AppConfig to_app_config(const CommonOpts& o, std::uint64_t seed) {
  AppConfig c;
  c.seed = seed;
  c.max_resamplings = o.max_resamples;
  c.selection =
      o.select == "random" ? SelectionRule::uniform_random : SelectionRule::first_true;
  c.force = o.force;
  c.use_parallel = o.mode == "par";
  return c;
}

DepMode to_dep_mode(const CommonOpts& o) {
  return o.deps == "lopsided" ? DepMode::lopsided : DepMode::standard;
}

json one_based(const std::vector<int>& v) {
  json arr = json::array();
  for (int x : v) arr.push_back(x + 1);
  return arr;
}

const char* status_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::success:
      return "success";
    case SolveStatus::iteration_limit:
      return "iteration-limit";
    default:
      return "criterion-failed";
  }
}

int status_exit(SolveStatus s) {
  switch (s) {
    case SolveStatus::success:
      return kExitSuccess;
    case SolveStatus::iteration_limit:
      return kExitIterationLimit;
    default:
      return kExitCriterionFailed;
  }
}

json criterion_json(const CriterionSummary& c) {
  json j;
  j["satisfied"] = c.satisfied;
  if (c.alpha >= 0) j["alpha"] = c.alpha;
  j["description"] = c.description;
  return j;
}

void print_text(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      print_text(os, value, indent + 2);
    } else if (value.is_array()) {
      os << pad << key << ":";
      if (!value.empty() && value[0].is_object()) {
        os << "\n";
        for (const auto& item : value) print_text(os, item, indent + 2);
      } else {
        for (const auto& item : value) os << " " << item.dump();
        os << "\n";
      }
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
         << "\n";
    }
  }
}

void emit(const CommonOpts& o, const json& report) {
  if (o.format == "text")
    print_text(std::cout, report);
  else
    std::cout << report.dump(2) << "\n";
}

int thread_count() {
  const char* env = std::getenv("PERM_LLL_THREADS");
  if (env == nullptr) return 1;
  const long v = std::strtol(env, nullptr, 10);
  return static_cast<int>(std::max(1L, std::min(v, 64L)));
}

// One run per seed through `single`; with --runs > 1 the reports are
// produced by a small thread pool but always listed in seed order.
int run_batch(const CommonOpts& o,
              const std::function<json(std::uint64_t seed, int& exit_code)>& single) {
  if (o.runs == 1) {
    int code = kExitSuccess;
    emit(o, single(o.seed, code));
    return code;
  }
  std::vector<json> reports(static_cast<std::size_t>(o.runs));
  std::vector<int> codes(static_cast<std::size_t>(o.runs), 0);
  std::atomic<int> next{0};
  const int workers = std::min(thread_count(), o.runs);
  auto work = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= o.runs) return;
      reports[static_cast<std::size_t>(i)] =
          single(o.seed + static_cast<std::uint64_t>(i), codes[static_cast<std::size_t>(i)]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  json out;
  out["schema"] = 1;
  out["runs"] = reports;
  int successes = 0, limits = 0, failures = 0, invalid = 0;
  std::uint64_t total = 0, max_r = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const std::string s = reports[i].value("status", "invalid-input");
    if (s == "success") ++successes;
    else if (s == "iteration-limit") ++limits;
    else if (s == "criterion-failed") ++failures;
    else ++invalid;
    const std::uint64_t r = reports[i].value("resamplings", 0ULL);
    total += r;
    max_r = std::max(max_r, r);
  }
  out["aggregate"] = {{"count", o.runs},
                      {"successes", successes},
                      {"iteration_limits", limits},
                      {"criterion_failures", failures},
                      {"invalid_inputs", invalid},
                      {"total_resamplings", total},
                      {"max_resamplings", max_r},
                      {"mean_resamplings", static_cast<double>(total) / o.runs}};
  emit(o, out);
  if (invalid > 0) return kExitInvalidInput;
  if (failures > 0) return kExitCriterionFailed;
  if (limits > 0) return kExitIterationLimit;
  return kExitSuccess;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

json base_report(std::uint64_t seed, const Timer& timer) {
  json j;
  j["schema"] = 1;
  j["seed"] = seed;
  j["elapsed_ms"] = timer.ms();
  return j;
}

// ---------------------------------------------------------------- solvers

int cmd_latin(const CommonOpts& o) {
  const ColorMatrix m = ColorMatrix::from_rows(load_matrix_csv(o.input));
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    const TransversalResult r = solve_latin(m, to_app_config(o, seed));
    json j = base_report(seed, timer);
    j["status"] = status_string(r.status);
    j["criterion"] = criterion_json(r.criterion);
    j["resamplings"] = r.resamplings;
    if (o.mode == "par") j["rounds"] = r.rounds;
    if (r.status == SolveStatus::success) j["result"] = {{"columns", one_based(r.columns)}};
    code = status_exit(r.status);
    return j;
  });
}

int cmd_multiplicity(const CommonOpts& o, int s) {
  const ColorMatrix m = ColorMatrix::from_rows(load_matrix_csv(o.input));
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    const TransversalResult r = solve_multiplicity(m, s, to_app_config(o, seed));
    json j = base_report(seed, timer);
    j["status"] = status_string(r.status);
    j["criterion"] = criterion_json(r.criterion);
    j["resamplings"] = r.resamplings;
    if (r.status == SolveStatus::success) j["result"] = {{"columns", one_based(r.columns)}};
    code = status_exit(r.status);
    return j;
  });
}

int cmd_rainbow(const CommonOpts& o, const std::string& tau_path) {
  const ColorMatrix m = ColorMatrix::from_rows(load_matrix_csv(o.input));
  const std::vector<int> tau = load_permutation(tau_path);
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    const RainbowResult r = solve_rainbow_conjugate(m, tau, to_app_config(o, seed));
    json j = base_report(seed, timer);
    j["status"] = status_string(r.status);
    j["criterion"] = criterion_json(r.criterion);
    j["resamplings"] = r.resamplings;
    if (o.mode == "par") j["rounds"] = r.rounds;
    if (r.status == SolveStatus::success)
      j["result"] = {{"sigma", one_based(r.sigma)}, {"pi", one_based(r.pi)}};
    code = status_exit(r.status);
    return j;
  });
}

int cmd_strong_color(const CommonOpts& o, bool iterative) {
  const BlockGraphInput in = load_block_graph(o.input);
  const BlockGraph g = BlockGraph::make(in.vertices, in.edges, in.blocks);
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    json j = base_report(seed, timer);
    if (iterative) {
      const IterativeColoringResult r = strong_color_iterative(g, to_app_config(o, seed));
      j["status"] = status_string(r.status);
      j["criterion"] = criterion_json(r.criterion);
      j["resamplings"] = r.resamplings;
      json phases = json::array();
      for (const PhaseTrace& p : r.phases)
        phases.push_back({{"phase", p.phase},
                          {"vertex", p.vertex + 1},
                          {"color", p.color + 1},
                          {"colored_after", p.colored_after},
                          {"resamplings", p.resamplings},
                          {"attempts", p.attempts}});
      j["phases"] = phases;
      if (r.status == SolveStatus::success) j["result"] = {{"colors", one_based(r.color_of)}};
      code = status_exit(r.status);
    } else {
      const StrongColoringResult r = strong_color_permutation(g, to_app_config(o, seed));
      j["status"] = status_string(r.status);
      j["criterion"] = criterion_json(r.criterion);
      j["resamplings"] = r.resamplings;
      if (o.mode == "par") j["rounds"] = r.rounds;
      if (r.status == SolveStatus::success) j["result"] = {{"colors", one_based(r.color_of)}};
      code = status_exit(r.status);
    }
    return j;
  });
}

int cmd_independent_transversal(const CommonOpts& o, int require_1based, int max_attempts) {
  const BlockGraphInput in = load_block_graph(o.input);
  const BlockGraph g = BlockGraph::make(in.vertices, in.edges, in.blocks);
  std::optional<int> require;
  if (require_1based > 0) require = require_1based - 1;
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    const IndependentTransversalResult r =
        independent_transversal(g, to_app_config(o, seed), require, max_attempts);
    json j = base_report(seed, timer);
    j["status"] = status_string(r.status);
    j["criterion"] = criterion_json(r.criterion);
    j["resamplings"] = r.resamplings;
    j["attempts"] = r.attempts;
    if (r.status == SolveStatus::success) j["result"] = {{"chosen", one_based(r.chosen)}};
    code = status_exit(r.status);
    return j;
  });
}

int cmd_pack(const CommonOpts& o, const std::string& h1_path, const std::string& h2_path, int n) {
  const HypergraphInput i1 = load_hypergraph(h1_path);
  const HypergraphInput i2 = load_hypergraph(h2_path);
  const Hypergraph h1{i1.vertices, i1.edge_size, i1.edges};
  const Hypergraph h2{i2.vertices, i2.edge_size, i2.edges};
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    const PackingResult r = pack_hypergraphs(h1, h2, n, to_app_config(o, seed));
    json j = base_report(seed, timer);
    j["status"] = status_string(r.status);
    j["criterion"] = criterion_json(r.criterion);
    j["resamplings"] = r.resamplings;
    if (o.mode == "par") j["rounds"] = r.rounds;
    if (r.status == SolveStatus::success) j["result"] = {{"phi2", one_based(r.phi2)}};
    code = status_exit(r.status);
    return j;
  });
}

// ------------------------------------------------- explicit event lists

int cmd_solve(const CommonOpts& o, const std::string& log_path, std::uint64_t witness_time,
              int subdag_perm_1based) {
  const EventListInput in = load_event_list(o.input);
  EventIndex index(in.sizes, in.events);
  return run_batch(o, [&](std::uint64_t seed, int& code) {
    const Timer timer;
    ExplicitOracle oracle{index};
    json j = base_report(seed, timer);
    if (o.mode == "par") {
      ParallelConfig pc;
      pc.seed = seed;
      pc.mode = to_dep_mode(o);
      const ParallelResult r = run_parallel(oracle, pc);
      j["status"] = r.status == Status::success ? "success" : "iteration-limit";
      j["resamplings"] = r.stats.resamplings;
      j["rounds"] = r.stats.rounds;
      if (r.status == Status::success) {
        json perms = json::array();
        for (const Permutation& p : r.perms) perms.push_back(one_based(p.forward()));
        j["result"] = {{"perms", perms}};
      }
      code = r.status == Status::success ? kExitSuccess : kExitIterationLimit;
      return j;
    }
    EngineConfig ec;
    ec.seed = seed;
    ec.max_resamplings = o.max_resamples;
    ec.selection =
        o.select == "random" ? SelectionRule::uniform_random : SelectionRule::first_true;
    ec.record_log = true;
    const RunResult r = run(oracle, ec);
    j["status"] = r.status == Status::success ? "success" : "iteration-limit";
    j["resamplings"] = r.stats.resamplings;
    json per_event = json::object();
    for (const auto& [id, cnt] : r.stats.per_event) per_event[std::to_string(id)] = cnt;
    j["per_event_resamplings"] = per_event;
    if (!log_path.empty()) {
      std::ofstream os(log_path);
      if (!os) throw std::runtime_error("cannot write " + log_path);
      dump_log(os, r.log);
    }
    if (witness_time > 0) {
      if (witness_time > r.log.size())
        throw std::invalid_argument("witness time " + std::to_string(witness_time) +
                                    " exceeds the log (" + std::to_string(r.log.size()) +
                                    " resamplings)");
      const WitnessTree tree = build_witness_tree(r.log, witness_time, to_dep_mode(o));
      Rational bound = 1;
      for (const WitnessNode& node : tree.nodes())
        bound *= prob_omega(node.triples, in.sizes);
      json w;
      w["size"] = tree.size();
      w["max_depth"] = tree.max_depth();
      w["signature"] = tree.signature();
      w["appearance_bound"] = to_double(bound);
      if (subdag_perm_1based > 0) {
        const WitnessSubdag dag = project_witness_subdag(tree, subdag_perm_1based - 1);
        w["subdag"] = {{"nodes", dag.nodes.size()}, {"edges", dag.edges.size()}};
      }
      j["witness"] = w;
    }
    if (r.status == Status::success) {
      json perms = json::array();
      for (const Permutation& p : r.perms) perms.push_back(one_based(p.forward()));
      j["result"] = {{"perms", perms}};
    }
    code = r.status == Status::success ? kExitSuccess : kExitIterationLimit;
    return j;
  });
}

int cmd_criterion(const CommonOpts& o, double mu_uniform, double x_uniform,
                  const std::string& mu_file) {
  const int weight_sources =
      (mu_file.empty() ? 0 : 1) + (x_uniform >= 0 ? 1 : 0) + (mu_uniform >= 0 ? 1 : 0);
  if (weight_sources != 1)
    throw std::invalid_argument("exactly one of --mu, --mu-x, --mu-file is required");
  const EventListInput in = load_event_list(o.input);
  const EventIndex index(in.sizes, in.events);
  WeightMap mu;
  if (!mu_file.empty()) {
    for (const auto& [id, value] : load_weights(mu_file)) mu.set(id, value);
    for (const BadEvent& e : index.events())
      if (!mu.contains(e.id()))
        throw std::invalid_argument("no weight for event " + std::to_string(e.id()));
  } else if (x_uniform >= 0) {
    mu = WeightMap::uniform(index, mu_from_x(x_uniform));
  } else if (mu_uniform >= 0) {
    mu = WeightMap::uniform(index, mu_uniform);
  } else {
    throw std::invalid_argument("one of --mu, --mu-x, --mu-file is required");
  }

  const Timer timer;
  const CriterionReport report = check_asymmetric(index, mu, to_dep_mode(o));
  json j = base_report(o.seed, timer);
  j["status"] = report.satisfied ? "success" : "criterion-failed";
  j["satisfied"] = report.satisfied;
  j["epsilon"] = report.epsilon;
  j["min_slack"] = report.min_slack;
  if (report.worst_event >= 0) j["worst_event"] = report.worst_event;
  json slacks = json::array();
  for (const EventSlack& s : report.slacks)
    slacks.push_back({{"id", s.id}, {"mu", s.mu}, {"rhs", s.rhs}, {"slack", s.slack}});
  j["events"] = slacks;
  emit(o, j);
  return report.satisfied ? kExitSuccess : kExitCriterionFailed;
}

// ------------------------------------------------------------- verification

int cmd_verify(const CommonOpts& o, const std::string& which) {
  const Timer timer;
  json checks = json::object();
  bool all_ok = true;
  const auto record = [&](const std::string& name, const CheckReport& r) {
    checks[name] = {{"ok", r.ok}, {"checked", r.checked}};
    if (!r.detail.empty()) checks[name]["detail"] = r.detail;
    all_ok = all_ok && r.ok;
  };
  if (which == "swap-exact" || which == "all")
    record("swap_exact", check_swap_uniform(5, 3, 10, o.seed + 1));
  if (which == "appendix-a" || which == "all") record("swap_identities", check_appendix_a(4, 3));
  if (which == "prop51" || which == "all") record("selection_bound", check_prop51(6, 500, o.seed + 1));
  if (which == "lfmis" || which == "all") record("first_mis", check_lfmis(500, 25, o.seed + 1));
  json j = base_report(o.seed, timer);
  j["status"] = all_ok ? "success" : "failed";
  j["checks"] = checks;
  emit(o, j);
  return all_ok ? kExitSuccess : kExitInvalidInput;
}

int cmd_bench(const CommonOpts& o, int n, int iters) {
  const Timer total;
  json j;
  j["schema"] = 1;
  Rng rng(o.seed);
  {
    const Timer t;
    std::uint64_t sink = 0;
    for (int i = 0; i < iters; ++i) {
      Permutation p = random_permutation(n, rng);
      sink += static_cast<std::uint64_t>(p(0));
    }
    const double ms = t.ms();
    j["random_permutation"] = {{"n", n},
                               {"iterations", iters},
                               {"ms", ms},
                               {"perms_per_sec", iters / (ms / 1000.0)},
                               {"checksum", sink}};
  }
  {
    Permutation p = random_permutation(n, rng);
    std::vector<int> xs{0, 1, 2, 3};
    const Timer t;
    for (int i = 0; i < iters * 100; ++i) swap(p, xs, rng);
    const double ms = t.ms();
    j["swap4"] = {{"n", n},
                  {"iterations", iters * 100},
                  {"ms", ms},
                  {"swaps_per_sec", iters * 100 / (ms / 1000.0)}};
  }
  j["elapsed_ms"] = total.ms();
  emit(o, j);
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resampling engine for uniformly random permutations"};
  app.require_subcommand(1);

  CommonOpts o;
  int s_threshold = 0;
  std::string tau_path, h1_path, h2_path, mu_file, log_path, verify_which = "all";
  int ground_n = 0, require_vertex = 0, max_attempts = 1000, bench_n = 1000, bench_iters = 100;
  bool iterative = false;
  double mu_uniform = -1, x_uniform = -1;
  std::uint64_t witness_time = 0;
  int subdag_perm = 0;

  auto* latin = app.add_subcommand("latin", "transversal with pairwise distinct cell colors");
  add_common(latin, o);

  auto* multi = app.add_subcommand("s-transversal",
                                   "transversal in which every color appears fewer than s times");
  add_common(multi, o);
  multi->add_option("--s", s_threshold, "multiplicity threshold")->required()->check(CLI::Range(2, 1 << 20));

  auto* rainbow =
      app.add_subcommand("rainbow", "conjugate of tau whose cells have distinct colors");
  add_common(rainbow, o);
  rainbow->add_option("--tau", tau_path, "permutation file for tau")->required();

  auto* strong = app.add_subcommand("strong-color", "one color class per block position");
  add_common(strong, o);
  strong->add_flag("--iterative", iterative, "build the coloring one phase at a time");

  auto* indep = app.add_subcommand("independent-transversal", "one non-adjacent vertex per block");
  add_common(indep, o);
  indep->add_option("--require", require_vertex, "vertex (1-based) the transversal must contain");
  indep->add_option("--attempts", max_attempts, "restart budget for --require");

  auto* pack = app.add_subcommand("pack", "embed two hypergraphs without a common edge image");
  add_common(pack, o, /*with_input=*/false);
  pack->add_option("--h1", h1_path, "first hypergraph file")->required();
  pack->add_option("--h2", h2_path, "second hypergraph file")->required();
  pack->add_option("--n", ground_n, "ground set size")->required()->check(CLI::Range(1, 1 << 24));

  auto* solve = app.add_subcommand("solve", "resample an explicit event list until none is true");
  add_common(solve, o);
  solve->add_option("--log", log_path, "write the resampling log to this file");
  solve->add_option("--witness", witness_time,
                    "report the witness tree rooted at this log time (1-based)");
  solve->add_option("--subdag", subdag_perm,
                    "with --witness: also project the tree onto this permutation (1-based)");

  auto* crit = app.add_subcommand("criterion", "check event weights against the convergence condition");
  add_common(crit, o);
  crit->add_option("--mu", mu_uniform, "uniform weight for every event");
  crit->add_option("--mu-x", x_uniform, "uniform weight given as x in [0,1), converted to x/(1-x)");
  crit->add_option("--mu-file", mu_file, "per-event weights: lines of 'id value'");

  auto* verify = app.add_subcommand("verify", "exact self-checks of the resampling primitives");
  verify->add_option("--check", verify_which, "swap-exact, appendix-a, prop51, lfmis, or all")
      ->check(CLI::IsMember({"swap-exact", "appendix-a", "prop51", "lfmis", "all"}));
  verify->add_option("--seed", o.seed, "base random seed");
  verify->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* bench = app.add_subcommand("bench", "quick wall-clock micro-timings");
  bench->add_option("--n", bench_n, "permutation size");
  bench->add_option("--iters", bench_iters, "iterations");
  bench->add_option("--seed", o.seed, "random seed");
  bench->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (latin->parsed()) return cmd_latin(o);
    if (multi->parsed()) return cmd_multiplicity(o, s_threshold);
    if (rainbow->parsed()) return cmd_rainbow(o, tau_path);
    if (strong->parsed()) {
      if (iterative && o.mode == "par")
        throw std::invalid_argument("the iterative scheme has no round-based variant");
      return cmd_strong_color(o, iterative);
    }
    if (indep->parsed()) {
      if (o.mode == "par")
        throw std::invalid_argument("the round-based variant does not support this solver");
      return cmd_independent_transversal(o, require_vertex, max_attempts);
    }
    if (pack->parsed()) return cmd_pack(o, h1_path, h2_path, ground_n);
    if (solve->parsed()) return cmd_solve(o, log_path, witness_time, subdag_perm);
    if (crit->parsed()) return cmd_criterion(o, mu_uniform, x_uniform, mu_file);
    if (verify->parsed()) return cmd_verify(o, verify_which);
    if (bench->parsed()) return cmd_bench(o, bench_n, bench_iters);
  } catch (const std::exception& e) {
    json j;
    j["schema"] = 1;
    j["status"] = "invalid-input";
    j["error"] = e.what();
    if (o.format == "text")
      std::cout << "status: invalid-input\nerror: " << e.what() << "\n";
    else
      std::cout << j.dump(2) << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
