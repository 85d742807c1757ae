#include "permlll/parallel.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace permlll {

std::vector<int> lfmis_peel(const ConflictGraph& g, int* peel_depth) {
  const int n = g.size();
  std::vector<char> alive(n, 1);
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(g.in[v].size());

  std::vector<int> result;
  int alive_count = n;
  int depth = 0;
  while (alive_count > 0) {
    std::vector<int> sources;
    for (int v = 0; v < n; ++v)
      if (alive[v] && indeg[v] == 0) sources.push_back(v);
    assert(!sources.empty() && "conflict graph must be acyclic");
    ++depth;
    result.insert(result.end(), sources.begin(), sources.end());

    std::vector<int> killed = sources;
    for (int s : sources)
      for (int t : g.out[s])
        if (alive[t]) killed.push_back(t);
    std::sort(killed.begin(), killed.end());
    killed.erase(std::unique(killed.begin(), killed.end()), killed.end());
    for (int w : killed) {
      alive[w] = 0;
      --alive_count;
    }
    for (int w : killed)
      for (int t : g.out[w])
        if (alive[t]) --indeg[t];
  }
  if (peel_depth != nullptr) *peel_depth = depth;
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> greedy_mis(const std::vector<BadEvent>& events, DepMode mode, Rng& rng) {
  const int m = static_cast<int>(events.size());
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  for (int i = m - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<int> chosen;
  for (int idx : order) {
    bool ok = true;
    for (int c : chosen)
      if (depends(events[idx], events[c], mode)) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(idx);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

// Per-event swap plan: triples in canonical order with a pre-selected mate
// for each, chosen without looking at the permutations.
struct SwapPlan {
  BadEvent event;
  int rank = 0;  // position in the sub-round ranking, 0-based
  std::vector<int> mates;
};

SwapPlan make_plan(const BadEvent& e, int rank, std::span<const int> sizes, Rng& rng) {
  SwapPlan plan{e, rank, {}};
  const auto& ts = e.triples();
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j].k == ts[i].k) ++j;
    std::vector<int> xs;
    for (std::size_t q = i; q < j; ++q) xs.push_back(ts[q].x);
    const std::vector<int> zs = plan_swap(sizes[ts[i].k], xs, rng);
    plan.mates.insert(plan.mates.end(), zs.begin(), zs.end());
    i = j;
  }
  return plan;
}

void apply_plan(const SwapPlan& plan, PermSet& perms, ViolationOracle& oracle) {
  const auto& ts = plan.event.triples();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    perms[ts[i].k].transpose(ts[i].x, plan.mates[i]);
    oracle.apply_transposition(ts[i].k, ts[i].x, plan.mates[i], perms);
  }
}

}  // namespace

ParallelResult run_parallel(ViolationOracle& oracle, const ParallelConfig& config) {
  const std::vector<int> sizes = oracle.sizes();
  ParallelResult result;
  {
    Rng init_rng(derive_seed(config.seed, 0));
    for (int n : sizes) result.perms.push_back(random_permutation(n, init_rng));
  }
  result.initial_perms = result.perms;
  oracle.reset(result.perms);

  for (int round = 1; static_cast<std::uint64_t>(round) <= config.max_rounds; ++round) {
    std::vector<BadEvent> frontier = oracle.all_true(result.perms);
    if (frontier.empty()) {
      result.status = Status::success;
      result.stats.rounds = round - 1;
      return result;
    }
    int subround = 0;
    while (!frontier.empty()) {
      ++subround;
      Rng ctl(derive_seed(config.seed, static_cast<std::uint64_t>(round),
                          static_cast<std::uint64_t>(subround), 0));
      Rng mate_rng(derive_seed(config.seed, static_cast<std::uint64_t>(round),
                               static_cast<std::uint64_t>(subround), 1));
      result.stats.frontier_sizes.push_back(static_cast<int>(frontier.size()));

      // Independent set, then a uniform ranking of it.
      std::vector<int> mis = greedy_mis(frontier, config.mode, ctl);
      std::vector<int> ranking = mis;
      for (int i = static_cast<int>(ranking.size()) - 1; i > 0; --i) {
        const int j = static_cast<int>(ctl.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(ranking[i], ranking[j]);
      }

      // Pre-select all swap mates in rank order, independent of the
      // permutations' current contents.
      std::vector<SwapPlan> plans;
      plans.reserve(ranking.size());
      for (int r = 0; r < static_cast<int>(ranking.size()); ++r)
        plans.push_back(make_plan(frontier[ranking[r]], r, sizes, mate_rng));

      // Conflict edges: an earlier-ranked event's mate landing on a
      // later-ranked event's swap source cancels the later event.
      ConflictGraph graph(static_cast<int>(plans.size()));
      {
        std::unordered_map<std::int64_t, std::vector<int>> source_owner;
        const auto key = [](int k, int pos) {
          return (static_cast<std::int64_t>(k) << 32) | static_cast<std::uint32_t>(pos);
        };
        for (int v = 0; v < static_cast<int>(plans.size()); ++v)
          for (const Triple& t : plans[v].event.triples())
            source_owner[key(t.k, t.x)].push_back(v);
        std::set<std::pair<int, int>> edges;
        for (int u = 0; u < static_cast<int>(plans.size()); ++u) {
          const auto& ts = plans[u].event.triples();
          for (std::size_t i = 0; i < ts.size(); ++i) {
            const auto it = source_owner.find(key(ts[i].k, plans[u].mates[i]));
            if (it == source_owner.end()) continue;
            for (int v : it->second)
              if (u < v) edges.insert({u, v});
          }
        }
        for (const auto& [u, v] : edges) graph.add_edge(u, v);
      }

      int depth = 0;
      const std::vector<int> surviving = lfmis_peel(graph, &depth);
      result.stats.peel_depths.push_back(depth);

      // Apply surviving swaps in rank order (entry transpositions in plan
      // order within an event), which makes the parallel step identical to
      // a sequential replay of the log.
      std::vector<BadEvent> applied;
      for (int v : surviving) {
        apply_plan(plans[v], result.perms, oracle);
        applied.push_back(plans[v].event);
        result.log.push_back({round, subround, plans[v].rank, plans[v].event, plans[v].mates});
        ++result.stats.resamplings;
      }

      std::vector<BadEvent> next;
      for (const BadEvent& b : frontier) {
        if (!is_true(b, result.perms)) continue;
        bool adjacent = false;
        for (const BadEvent& a : applied)
          if (depends(b, a, config.mode)) {
            adjacent = true;
            break;
          }
        if (!adjacent) next.push_back(b);
      }
      assert(next.size() < frontier.size() && "sub-round frontier must shrink");
      frontier = std::move(next);
    }
    result.stats.subrounds.push_back(subround);
    result.stats.rounds = round;
  }

  result.status = oracle.find_true(result.perms).has_value() ? Status::iteration_limit
                                                             : Status::success;
  return result;
}

PermSet replay_serialized(PermSet perms, std::span<const ResampledRecord> log) {
  std::vector<const ResampledRecord*> order;
  order.reserve(log.size());
  for (const ResampledRecord& r : log) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const ResampledRecord* a, const ResampledRecord* b) {
                     return std::tie(a->round, a->subround, a->rank) <
                            std::tie(b->round, b->subround, b->rank);
                   });
  for (const ResampledRecord* r : order) {
    const auto& ts = r->event.triples();
    for (std::size_t i = 0; i < ts.size(); ++i) perms[ts[i].k].transpose(ts[i].x, r->mates[i]);
  }
  return perms;
}

}  // namespace permlll
