#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "permlll/events.hpp"

namespace permlll {

enum class Status { success, iteration_limit };

struct EngineConfig {
  SelectionRule selection = SelectionRule::first_true;
  std::uint64_t max_resamplings = 10'000'000;
  std::uint64_t seed = 0;
  bool record_log = true;
  std::vector<std::int64_t> priority;  // for SelectionRule::priority_order
};

// One resampling: at time t (1-based) the event was true and its sources
// were swapped. mates[i] is the mate drawn for triples[i] (triples are in
// canonical sorted order, which is also the order the swaps were performed,
// permutation by permutation).
struct LogEntry {
  std::uint64_t t = 0;
  std::int64_t event_id = -1;
  std::vector<Triple> triples;
  std::vector<int> mates;
};

struct EngineStats {
  std::uint64_t resamplings = 0;
  std::map<std::int64_t, std::uint64_t> per_event;
  std::map<std::string, std::uint64_t> per_class;
  std::vector<std::uint64_t> per_perm_swaps;  // swap calls touching each permutation
};

// Hitting the resampling cap is a normal outcome: the final permutations and
// the log up to the cap are returned, not an exception.
struct RunResult {
  Status status = Status::success;
  PermSet perms;
  PermSet initial_perms;
  std::vector<LogEntry> log;
  EngineStats stats;
};

// The sequential resampling loop: draw the initial permutations uniformly at
// random, then repeatedly select a true bad event and swap, per involved
// permutation, all of the event's entries in that permutation.
RunResult run(ViolationOracle& oracle, const EngineConfig& config);

// Like run, but starting from the given permutations.
RunResult run_from(ViolationOracle& oracle, const EngineConfig& config, PermSet initial);

// One line per entry: "t event_id k1 x1 y1 mate1 k2 x2 y2 mate2 ...",
// with all coordinates 1-based.
void dump_log(std::ostream& os, std::span<const LogEntry> log);

}  // namespace permlll
