#include "permlll/apps/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permlll/criteria.hpp"
#include "permlll/parallel.hpp"
#include "permlll/rng.hpp"

namespace permlll::apps {

namespace {

// A monochromatic inter-block edge, as requirements on the two block
// permutations that assign the shared color.
class StrongColorOracle final : public ViolationOracle {
 public:
  explicit StrongColorOracle(const BlockGraph& g) : g_(g) {
    incident_.resize(static_cast<std::size_t>(g.vertices()));
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      incident_[static_cast<std::size_t>(g.edges()[e].first)].push_back(static_cast<int>(e));
      incident_[static_cast<std::size_t>(g.edges()[e].second)].push_back(static_cast<int>(e));
    }
  }

  std::vector<int> sizes() const override {
    return std::vector<int>(static_cast<std::size_t>(g_.blocks()), g_.block_size());
  }

  void reset(const PermSet& perms) override {
    color_of_.resize(static_cast<std::size_t>(g_.vertices()));
    for (int v = 0; v < g_.vertices(); ++v)
      color_of_[static_cast<std::size_t>(v)] = perms[static_cast<std::size_t>(g_.block_of(v))](
          g_.index_in_block(v));
    violating_.clear();
    for (std::size_t e = 0; e < g_.edges().size(); ++e)
      if (monochromatic(static_cast<int>(e))) violating_.insert(static_cast<int>(e));
  }

  std::optional<BadEvent> find_true(const PermSet&) override {
    if (violating_.empty()) return std::nullopt;
    return edge_event(*violating_.begin());
  }

  std::vector<BadEvent> all_true(const PermSet&) override {
    std::vector<BadEvent> events;
    for (int e : violating_) events.push_back(edge_event(e));
    std::sort(events.begin(), events.end(),
              [](const BadEvent& a, const BadEvent& b) { return a.id() < b.id(); });
    return events;
  }

  void apply_transposition(int k, int a, int b, const PermSet& perms) override {
    for (int idx : {a, b}) {
      const int v = g_.vertex(k, idx);
      color_of_[static_cast<std::size_t>(v)] = perms[static_cast<std::size_t>(k)](idx);
      for (int e : incident_[static_cast<std::size_t>(v)]) {
        if (monochromatic(e))
          violating_.insert(e);
        else
          violating_.erase(e);
      }
    }
  }

  std::string classify(const BadEvent&) const override { return "edge"; }

 private:
  bool monochromatic(int e) const {
    const auto& [u, v] = g_.edges()[static_cast<std::size_t>(e)];
    return g_.block_of(u) != g_.block_of(v) &&
           color_of_[static_cast<std::size_t>(u)] == color_of_[static_cast<std::size_t>(v)];
  }

  BadEvent edge_event(int e) const {
    const auto& [u, v] = g_.edges()[static_cast<std::size_t>(e)];
    const int c = color_of_[static_cast<std::size_t>(u)];
    std::vector<Triple> triples{{g_.block_of(u), g_.index_in_block(u), c},
                                {g_.block_of(v), g_.index_in_block(v), c}};
    return BadEvent::make(static_cast<std::int64_t>(triples_hash(triples)), std::move(triples));
  }

  const BlockGraph& g_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> color_of_;
  std::set<int> violating_;
};

SolveStatus map_status(Status s) {
  return s == Status::success ? SolveStatus::success : SolveStatus::iteration_limit;
}

}  // namespace

StrongColoringResult strong_color_permutation(const BlockGraph& g, const AppConfig& config) {
  const int b = g.block_size();
  const int delta = g.max_degree();
  StrongColoringResult res;
  {
    const double P = 1.0 / (static_cast<double>(b) * b);
    const double c = static_cast<double>(b) * delta;
    const auto alpha = solve_alpha(P, c, 4);
    res.criterion.satisfied = alpha.has_value();
    res.criterion.alpha = alpha.value_or(-1.0);
    std::ostringstream os;
    os << "block size " << b << ", max degree " << delta
       << ": alpha = P(1+c*alpha)^4 with P=1/" << static_cast<long long>(b) * b
       << ", c=" << static_cast<long long>(c) << (alpha ? " has root " : " has no root")
       << (alpha ? std::to_string(*alpha) : "");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  StrongColorOracle oracle(g);
  PermSet final_perms;
  if (config.use_parallel) {
    ParallelResult run = run_parallel(
        oracle, ParallelConfig{config.seed, config.max_rounds, DepMode::standard});
    res.status = map_status(run.status);
    res.resamplings = run.stats.resamplings;
    res.rounds = run.stats.rounds;
    final_perms = std::move(run.perms);
  } else {
    EngineConfig ec;
    ec.selection = config.selection;
    ec.max_resamplings = config.max_resamplings;
    ec.seed = config.seed;
    ec.record_log = config.record_log;
    RunResult run = permlll::run(oracle, ec);
    res.status = map_status(run.status);
    res.resamplings = run.stats.resamplings;
    res.stats = std::move(run.stats);
    res.log = std::move(run.log);
    final_perms = std::move(run.perms);
  }
  res.color_of.resize(static_cast<std::size_t>(g.vertices()));
  for (int v = 0; v < g.vertices(); ++v)
    res.color_of[static_cast<std::size_t>(v)] =
        final_perms[static_cast<std::size_t>(g.block_of(v))](g.index_in_block(v));
  return res;
}

namespace {

struct VariableRun {
  bool success = false;
  std::vector<int> chosen;
  std::uint64_t resamplings = 0;
};

// Uniform independent choices, one per block from its candidate list,
// resampled two blocks at a time on the lowest violated edge.
VariableRun run_variable_resampling(const BlockGraph& g,
                                    const std::vector<std::vector<int>>& candidates,
                                    std::uint64_t seed, std::uint64_t max_resamplings) {
  Rng rng(seed);
  VariableRun run;
  const auto draw = [&](int block) {
    const auto& cand = candidates[static_cast<std::size_t>(block)];
    return cand[static_cast<std::size_t>(rng.uniform_below(cand.size()))];
  };
  run.chosen.resize(static_cast<std::size_t>(g.blocks()));
  for (int bi = 0; bi < g.blocks(); ++bi) run.chosen[static_cast<std::size_t>(bi)] = draw(bi);

  while (true) {
    int violated = -1;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const auto& [u, v] = g.edges()[e];
      const int bu = g.block_of(u);
      const int bv = g.block_of(v);
      if (bu == bv) continue;
      if (run.chosen[static_cast<std::size_t>(bu)] == u &&
          run.chosen[static_cast<std::size_t>(bv)] == v) {
        violated = static_cast<int>(e);
        break;
      }
    }
    if (violated < 0) {
      run.success = true;
      return run;
    }
    if (run.resamplings >= max_resamplings) return run;
    ++run.resamplings;
    const auto& [u, v] = g.edges()[static_cast<std::size_t>(violated)];
    run.chosen[static_cast<std::size_t>(g.block_of(u))] = draw(g.block_of(u));
    run.chosen[static_cast<std::size_t>(g.block_of(v))] = draw(g.block_of(v));
  }
}

CriterionSummary transversal_criterion(const BlockGraph& g,
                                       const std::vector<std::vector<int>>& candidates) {
  CriterionSummary summary;
  // The possible bad events: inter-block edges whose endpoints are both
  // candidates of their blocks.
  std::vector<std::pair<int, int>> events;  // (block u, block v)
  double p_max = 0.0;
  for (const auto& [u, v] : g.edges()) {
    const int bu = g.block_of(u);
    const int bv = g.block_of(v);
    if (bu == bv) continue;
    const auto& cu = candidates[static_cast<std::size_t>(bu)];
    const auto& cv = candidates[static_cast<std::size_t>(bv)];
    if (std::find(cu.begin(), cu.end(), u) == cu.end()) continue;
    if (std::find(cv.begin(), cv.end(), v) == cv.end()) continue;
    events.emplace_back(bu, bv);
    p_max = std::max(p_max, 1.0 / (static_cast<double>(cu.size()) * static_cast<double>(cv.size())));
  }
  if (events.empty()) {
    summary.satisfied = true;
    summary.description = "no conflicting edges between candidate vertices";
    return summary;
  }
  long long d_max = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    long long sharing = 0;
    for (std::size_t j = 0; j < events.size(); ++j) {
      if (events[i].first == events[j].first || events[i].first == events[j].second ||
          events[i].second == events[j].first || events[i].second == events[j].second)
        ++sharing;
    }
    d_max = std::max(d_max, sharing - 1);
  }
  summary.satisfied = check_symmetric(p_max, d_max);
  std::ostringstream os;
  os << events.size() << " candidate conflicts, p_max=" << p_max << ", d_max=" << d_max
     << ": e*p*(d+1) " << (summary.satisfied ? "<= 1" : "> 1");
  summary.description = os.str();
  return summary;
}

IndependentTransversalResult transversal_impl(const BlockGraph& g,
                                              const std::vector<std::vector<int>>& candidates,
                                              const AppConfig& config, std::optional<int> require,
                                              int max_attempts) {
  for (int bi = 0; bi < g.blocks(); ++bi)
    if (candidates[static_cast<std::size_t>(bi)].empty())
      throw std::invalid_argument("block " + std::to_string(bi + 1) + " has no candidates");
  if (require) {
    const int w = *require;
    if (w < 0 || w >= g.vertices()) throw std::invalid_argument("required vertex out of range");
    const auto& cand = candidates[static_cast<std::size_t>(g.block_of(w))];
    if (std::find(cand.begin(), cand.end(), w) == cand.end())
      throw std::invalid_argument("required vertex is not a candidate of its block");
  }

  IndependentTransversalResult res;
  res.criterion = transversal_criterion(g, candidates);
  if (!res.criterion.satisfied && !config.force) return res;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const VariableRun run = run_variable_resampling(
        g, candidates, derive_seed(config.seed, static_cast<std::uint64_t>(attempt), 0x17),
        config.max_resamplings);
    res.resamplings += run.resamplings;
    res.attempts = attempt + 1;
    res.chosen = run.chosen;
    if (!run.success) continue;
    if (require &&
        res.chosen[static_cast<std::size_t>(g.block_of(*require))] != *require)
      continue;
    res.status = SolveStatus::success;
    return res;
  }
  res.status = SolveStatus::iteration_limit;
  return res;
}

}  // namespace

IndependentTransversalResult independent_transversal(const BlockGraph& g, const AppConfig& config,
                                                     std::optional<int> require, int max_attempts) {
  std::vector<std::vector<int>> candidates;
  candidates.reserve(static_cast<std::size_t>(g.blocks()));
  for (int bi = 0; bi < g.blocks(); ++bi) candidates.push_back(g.block(bi));
  return transversal_impl(g, candidates, config, require, max_attempts);
}

IndependentTransversalResult independent_transversal_restricted(
    const BlockGraph& g, const std::vector<std::vector<int>>& candidates, const AppConfig& config,
    std::optional<int> require, int max_attempts) {
  if (static_cast<int>(candidates.size()) != g.blocks())
    throw std::invalid_argument("need one candidate list per block");
  return transversal_impl(g, candidates, config, require, max_attempts);
}

IterativeColoringResult strong_color_iterative(const BlockGraph& g, const AppConfig& config) {
  const int b = g.block_size();
  const int delta = g.max_degree();
  IterativeColoringResult res;
  res.criterion.satisfied = b >= 5 * delta;
  {
    std::ostringstream os;
    os << "block size " << b << " vs 5 * max degree = " << 5 * delta << ": "
       << (res.criterion.satisfied ? "holds" : "fails");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  const int n = g.vertices();
  res.color_of.assign(static_cast<std::size_t>(n), -1);
  int colored = 0;
  int phase = 0;
  while (colored < n) {
    ++phase;
    int w = -1;
    for (int v = 0; v < n; ++v)
      if (res.color_of[static_cast<std::size_t>(v)] < 0) {
        w = v;
        break;
      }
    // A color missing from w's block (one exists: the block has an
    // uncolored vertex, so fewer than b colors are used).
    std::vector<char> used(static_cast<std::size_t>(b), 0);
    for (int v : g.block(g.block_of(w)))
      if (res.color_of[static_cast<std::size_t>(v)] >= 0)
        used[static_cast<std::size_t>(res.color_of[static_cast<std::size_t>(v)])] = 1;
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;

    // Per block: every vertex whose current color the block's c-holder
    // could safely inherit. If the block holds a c-colored vertex u, then
    // picking v swaps colors of v and u, so v's current color must not
    // appear on any neighbor of u (uncolored v, or v = u, is always safe).
    // Blocks without a c-holder accept any vertex. Each list keeps at
    // least block_size - max_degree entries.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(g.blocks()));
    std::vector<int> holder(static_cast<std::size_t>(g.blocks()), -1);
    for (int bi = 0; bi < g.blocks(); ++bi) {
      for (int v : g.block(bi))
        if (res.color_of[static_cast<std::size_t>(v)] == c) {
          holder[static_cast<std::size_t>(bi)] = v;
          break;
        }
      const int u = holder[static_cast<std::size_t>(bi)];
      if (u < 0) {
        candidates[static_cast<std::size_t>(bi)] = g.block(bi);
        continue;
      }
      std::vector<char> forbidden(static_cast<std::size_t>(b), 0);
      for (int x : g.neighbors(u)) {
        const int cx = res.color_of[static_cast<std::size_t>(x)];
        if (cx >= 0) forbidden[static_cast<std::size_t>(cx)] = 1;
      }
      for (int v : g.block(bi)) {
        const int cv = res.color_of[static_cast<std::size_t>(v)];
        if (v == u || cv < 0 || !forbidden[static_cast<std::size_t>(cv)])
          candidates[static_cast<std::size_t>(bi)].push_back(v);
      }
    }

    AppConfig inner = config;
    inner.force = true;
    inner.seed = derive_seed(config.seed, static_cast<std::uint64_t>(phase), 0x9e);
    const IndependentTransversalResult trans =
        independent_transversal_restricted(g, candidates, inner, w, 200);
    res.resamplings += trans.resamplings;
    if (trans.status != SolveStatus::success) {
      res.status = SolveStatus::iteration_limit;
      return res;
    }

    // Give every chosen vertex color c; a displaced c-holder inherits the
    // chosen vertex's previous color (or becomes uncolored). Outside w's
    // block the colored count never drops; w's block gains one.
    for (int bi = 0; bi < g.blocks(); ++bi) {
      const int t = trans.chosen[static_cast<std::size_t>(bi)];
      if (res.color_of[static_cast<std::size_t>(t)] == c) continue;
      const int old = res.color_of[static_cast<std::size_t>(t)];
      const int u = holder[static_cast<std::size_t>(bi)];
      if (u >= 0) {
        res.color_of[static_cast<std::size_t>(u)] = old;
        if (old < 0) --colored;
      }
      if (old < 0) ++colored;
      res.color_of[static_cast<std::size_t>(t)] = c;
    }
    res.phases.push_back(
        {phase, w, c, colored, trans.resamplings, trans.attempts});
    if (res.phases.size() >= 2 &&
        res.phases[res.phases.size() - 2].colored_after >= colored) {
      res.status = SolveStatus::iteration_limit;  // defensive: no progress
      return res;
    }
  }
  res.status = SolveStatus::success;
  return res;
}

}  // namespace permlll::apps
