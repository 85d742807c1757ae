#pragma once

#include <cstdint>
#include <vector>

#include "permlll/engine.hpp"
#include "permlll/events.hpp"

namespace permlll {

// Directed conflict graph over the events of one sub-round: an edge u -> v
// means u precedes v in the ranking and a swap-mate of u is a swap-source
// of v, so v's resampling is cancelled when u is applied.
struct ConflictGraph {
  explicit ConflictGraph(int n = 0) : out(n), in(n) {}
  int size() const { return static_cast<int>(out.size()); }
  void add_edge(int u, int v) {
    out[u].push_back(v);
    in[v].push_back(u);
  }
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;
};

// Lexicographically-first MIS of the rank-oriented graph by iterated source
// peeling: take all in-degree-0 vertices, delete them and their successors,
// repeat. peel_depth (if given) receives the number of peeling iterations.
std::vector<int> lfmis_peel(const ConflictGraph& g, int* peel_depth = nullptr);

// Greedy maximal independent set under the dependency relation, scanning in
// a uniformly random order; returns indices into events, sorted ascending.
std::vector<int> greedy_mis(const std::vector<BadEvent>& events, DepMode mode, Rng& rng);

struct ParallelConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_rounds = 10'000;
  DepMode mode = DepMode::standard;
};

// One resampled event of a parallel run, with everything needed to replay
// it sequentially: (round, subround, rank) is the serialization order and
// mates[i] is the pre-selected mate for triples()[i].
struct ResampledRecord {
  int round = 0;
  int subround = 0;
  int rank = 0;
  BadEvent event;
  std::vector<int> mates;
};

struct ParallelStats {
  int rounds = 0;
  std::vector<int> subrounds;          // sub-round count per round
  std::vector<int> peel_depths;        // one entry per sub-round
  std::vector<int> frontier_sizes;     // |V_{i,j}| per sub-round (strictly decreasing within a round)
  std::uint64_t resamplings = 0;
};

struct ParallelResult {
  Status status = Status::success;
  PermSet perms;
  PermSet initial_perms;
  ParallelStats stats;
  std::vector<ResampledRecord> log;  // lexicographic (round, subround, rank) order
};

// Parallel variant: rounds over the currently-true events; within a round,
// sub-rounds pick an MIS, pre-select swap mates, cancel rank-later events
// whose sources are hit by earlier mates (LFMIS of the conflict graph), and
// apply the surviving transpositions so that the result equals a sequential
// replay in rank order. Events that become true mid-round wait for the next
// round.
ParallelResult run_parallel(ViolationOracle& oracle, const ParallelConfig& config);

// Sequential replay of a parallel log with the recorded mate choices;
// starting from the same initial permutations this reproduces the parallel
// run's final permutations exactly.
PermSet replay_serialized(PermSet perms, std::span<const ResampledRecord> log);

}  // namespace permlll
