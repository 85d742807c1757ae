#include "permlll/engine.hpp"

#include <ostream>

namespace permlll {

namespace {
RunResult run_impl(ViolationOracle& oracle, const EngineConfig& config, PermSet perms) {
  if (config.max_resamplings < 1)
    throw std::invalid_argument("EngineConfig: max_resamplings must be at least 1");
  RunResult result;
  result.initial_perms = perms;
  result.stats.per_perm_swaps.assign(perms.size(), 0);
  Rng loop_rng(derive_seed(config.seed, 1));

  oracle.reset(perms);
  std::vector<int> xs;
  std::vector<int> mates;
  for (;;) {
    std::optional<BadEvent> selected =
        oracle.select_event(perms, loop_rng, config.selection, config.priority);
    if (!selected) {
      result.status = Status::success;
      break;
    }
    if (result.stats.resamplings >= config.max_resamplings) {
      result.status = Status::iteration_limit;
      break;
    }
    ++result.stats.resamplings;
    const std::uint64_t t = result.stats.resamplings;
    ++result.stats.per_event[selected->id()];
    ++result.stats.per_class[oracle.classify(*selected)];

    // Triples are sorted by (k, x): each permutation's sources form one
    // contiguous run and are swapped together in one call.
    const std::vector<Triple>& triples = selected->triples();
    mates.clear();
    std::size_t i = 0;
    while (i < triples.size()) {
      const int k = triples[i].k;
      xs.clear();
      std::size_t j = i;
      while (j < triples.size() && triples[j].k == k) xs.push_back(triples[j++].x);
      swap_with(perms[k], xs, loop_rng, [&](int, int a, int mate) {
        mates.push_back(mate);
        oracle.apply_transposition(k, a, mate, perms);
      });
      ++result.stats.per_perm_swaps[k];
      i = j;
    }
    if (config.record_log) {
      LogEntry entry;
      entry.t = t;
      entry.event_id = selected->id();
      entry.triples = triples;
      entry.mates = mates;
      result.log.push_back(std::move(entry));
    }
  }
  result.perms = std::move(perms);
  return result;
}
}  // namespace

RunResult run(ViolationOracle& oracle, const EngineConfig& config) {
  const std::vector<int> sizes = oracle.sizes();
  Rng init_rng(derive_seed(config.seed, 0));
  PermSet perms;
  perms.reserve(sizes.size());
  for (int n : sizes) perms.push_back(random_permutation(n, init_rng));
  return run_impl(oracle, config, std::move(perms));
}

RunResult run_from(ViolationOracle& oracle, const EngineConfig& config, PermSet initial) {
  return run_impl(oracle, config, std::move(initial));
}

void dump_log(std::ostream& os, std::span<const LogEntry> log) {
  for (const LogEntry& entry : log) {
    os << entry.t << ' ' << entry.event_id;
    for (std::size_t i = 0; i < entry.triples.size(); ++i) {
      const Triple& t = entry.triples[i];
      os << ' ' << t.k + 1 << ' ' << t.x + 1 << ' ' << t.y + 1 << ' ' << entry.mates[i] + 1;
    }
    os << '\n';
  }
}

}  // namespace permlll
