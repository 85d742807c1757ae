#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "permlll/apps/types.hpp"
#include "permlll/engine.hpp"

namespace permlll::apps {

struct StrongColoringResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> color_of;  // vertex -> color in 0..block_size-1
  std::uint64_t resamplings = 0;
  int rounds = 0;  // parallel runs only
  EngineStats stats;
  std::vector<LogEntry> log;  // sequential runs with config.record_log
};

// Proper coloring with block_size colors, each appearing exactly once per
// block, via one permutation per block resampled on monochromatic edges.
// Advisory criterion: alpha = P (1 + c*alpha)^4 has a root for P = 1/b^2,
// c = b * max_degree.
StrongColoringResult strong_color_permutation(const BlockGraph& g, const AppConfig& config);

struct IndependentTransversalResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> chosen;  // one vertex per block
  std::uint64_t resamplings = 0;
  int attempts = 0;  // restarts spent on the containment requirement
};

// One vertex per block with no edge between chosen vertices, by uniform
// per-block choices resampled on violated edges. When `require` is given
// the run restarts (fresh sub-seed) until the transversal contains that
// vertex, up to max_attempts. Advisory criterion: e * p * (d+1) <= 1 over
// the instance's exact event probabilities and dependency degrees.
IndependentTransversalResult independent_transversal(const BlockGraph& g, const AppConfig& config,
                                                     std::optional<int> require = std::nullopt,
                                                     int max_attempts = 1000);

// Same, but block b chooses only from candidates[b] (nonempty subsets of
// the blocks).
IndependentTransversalResult independent_transversal_restricted(
    const BlockGraph& g, const std::vector<std::vector<int>>& candidates, const AppConfig& config,
    std::optional<int> require = std::nullopt, int max_attempts = 1000);

struct PhaseTrace {
  int phase = 0;           // 1-based
  int vertex = 0;          // the uncolored vertex the phase targeted
  int color = 0;           // the color threaded through the transversal
  int colored_after = 0;   // total colored vertices after the phase
  std::uint64_t resamplings = 0;
  int attempts = 0;
};

struct IterativeColoringResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> color_of;
  std::vector<PhaseTrace> phases;
  std::uint64_t resamplings = 0;
};

// Strong coloring built one vertex per phase: each phase recolors along an
// independent transversal of the uncolored-or-target-colored vertices that
// contains the next uncolored vertex, so the colored count strictly
// increases. Advisory criterion: block_size >= 5 * max_degree.
IterativeColoringResult strong_color_iterative(const BlockGraph& g, const AppConfig& config);

}  // namespace permlll::apps
