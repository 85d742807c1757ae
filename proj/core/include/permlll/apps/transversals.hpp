#pragma once

#include <cstdint>
#include <vector>

#include "permlll/apps/types.hpp"
#include "permlll/engine.hpp"

namespace permlll::apps {

struct TransversalResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> columns;  // row i -> chosen column, 0-based; valid on success
  std::uint64_t resamplings = 0;
  int rounds = 0;  // parallel runs only
  EngineStats stats;
  std::vector<LogEntry> log;  // filled when config.record_log (sequential runs)
};

// Transversal whose cells have pairwise distinct colors. The advisory
// criterion solves alpha = P (1 + c*alpha)^4 with P = 1/(n(n-1)) and
// c = n*(Delta-1), Delta being the color multiplicity of the matrix.
TransversalResult solve_latin(const ColorMatrix& m, const AppConfig& config);

// Transversal in which every color appears fewer than s times. Resampling
// picks ceil(sqrt(s)) random cells of the smallest violating color; the
// advisory criterion is the bounded-multiplicity condition over n, s,
// r = ceil(sqrt(s)) and Delta.
TransversalResult solve_multiplicity(const ColorMatrix& m, int s, const AppConfig& config);

struct RainbowResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> sigma;  // the conjugator found
  std::vector<int> pi;     // sigma^-1 tau sigma; its cells are the transversal
  std::uint64_t resamplings = 0;
  int rounds = 0;
  EngineStats stats;
};

// Permutation pi conjugate to tau whose cells (i, pi(i)) have pairwise
// distinct colors; tau must have no fixed points and no 2-cycles. The
// advisory criterion is Delta <= 27n/1000.
RainbowResult solve_rainbow_conjugate(const ColorMatrix& m, const std::vector<int>& tau,
                                      const AppConfig& config);

}  // namespace permlll::apps
