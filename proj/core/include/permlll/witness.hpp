#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permlll/criteria.hpp"
#include "permlll/engine.hpp"
#include "permlll/events.hpp"

namespace permlll {

struct WitnessNode {
  std::int64_t event_id = -1;
  std::vector<Triple> triples;
  std::uint64_t time = 0;  // log time the occurrence was resampled
  int depth = 0;           // root = 0; larger depth = earlier in the log
  int parent = -1;         // index into WitnessTree::nodes, -1 for the root
};

class WitnessTree {
 public:
  explicit WitnessTree(std::vector<WitnessNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<WitnessNode>& nodes() const { return nodes_; }
  const WitnessNode& root() const { return nodes_.front(); }
  std::size_t size() const { return nodes_.size(); }
  int max_depth() const;
  std::vector<std::vector<int>> children() const;

  // Canonical serialization of the labeled tree shape (event ids only);
  // two trees are the same witness tree iff their signatures match.
  std::string signature() const;

 private:
  std::vector<WitnessNode> nodes_;
};

// The witness tree for log position t (1-based): root the event at time t,
// then scan s = t-1 down to 1 attaching each event that is dependent on some
// current node as a child of the deepest such node (ties broken toward the
// earliest-added node).
WitnessTree build_witness_tree(std::span<const LogEntry> log, std::uint64_t t, DepMode mode);

// Projection of a witness tree onto one permutation: one node per triple of
// that permutation, each node pointing at the deepest strictly-shallower
// occurrence of its domain slice and of its range slice (one edge if both
// point at the same node). Exact-duplicate pairs on one level (possible only
// under lopsided dependency) are chained in event-id order.
struct SubdagNode {
  int x = 0;
  int y = 0;
  std::int64_t event_id = -1;
  int tree_node = -1;
};

struct WitnessSubdag {
  std::vector<SubdagNode> nodes;
  std::vector<std::pair<int, int>> edges;  // (from, to): deeper -> shallower
};

WitnessSubdag project_witness_subdag(const WitnessTree& tree, int k);

// Upper bound for the probability that a conjunction E of triples holds in
// the output distribution: P_Omega(E) * prod over events dependent on E of
// (1 + mu(B')).
double mt_bound(const BadEvent& e, const WeightMap& mu, const EventIndex& index, DepMode mode);

}  // namespace permlll
