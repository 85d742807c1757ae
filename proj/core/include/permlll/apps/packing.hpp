#pragma once

#include <cstdint>
#include <vector>

#include "permlll/apps/types.hpp"
#include "permlll/engine.hpp"

namespace permlll::apps {

struct PackingResult {
  SolveStatus status = SolveStatus::criterion_failed;
  CriterionSummary criterion;
  std::vector<int> phi2;  // vertex of the second hypergraph -> ground element
  std::uint64_t resamplings = 0;
  int rounds = 0;  // parallel runs only
  EngineStats stats;
  std::vector<LogEntry> log;
};

// Embeds h1 by the identity and h2 through a permutation of the n-element
// ground set so that no edge of h2 lands on an edge of h1; every collision
// resamples the permutation at the colliding edge's vertices. Advisory
// criterion: (d1+1)*m2 + (d2+1)*m1 < C(n,r)/e.
PackingResult pack_hypergraphs(const Hypergraph& h1, const Hypergraph& h2, int n,
                               const AppConfig& config);

}  // namespace permlll::apps
