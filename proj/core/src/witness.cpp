#include "permlll/witness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permlll {

int WitnessTree::max_depth() const {
  int d = 0;
  for (const WitnessNode& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::vector<std::vector<int>> WitnessTree::children() const {
  std::vector<std::vector<int>> kids(nodes_.size());
  for (std::size_t i = 1; i < nodes_.size(); ++i) kids[nodes_[i].parent].push_back(static_cast<int>(i));
  return kids;
}

namespace {
std::string signature_of(const std::vector<WitnessNode>& nodes,
                         const std::vector<std::vector<int>>& kids, int v) {
  std::string s = "(" + std::to_string(nodes[v].event_id);
  std::vector<std::string> parts;
  for (int c : kids[v]) parts.push_back(signature_of(nodes, kids, c));
  std::sort(parts.begin(), parts.end());
  for (const std::string& p : parts) s += p;
  s += ")";
  return s;
}
}  // namespace

std::string WitnessTree::signature() const {
  return signature_of(nodes_, children(), 0);
}

WitnessTree build_witness_tree(std::span<const LogEntry> log, std::uint64_t t, DepMode mode) {
  if (t < 1 || t > log.size()) throw std::invalid_argument("build_witness_tree: time out of range");
  std::vector<WitnessNode> nodes;
  const LogEntry& root = log[t - 1];
  nodes.push_back({root.event_id, root.triples, root.t, 0, -1});
  for (std::uint64_t s = t - 1; s >= 1; --s) {
    const LogEntry& entry = log[s - 1];
    // Attach to the deepest dependent node; ties go to the earliest-added
    // node at that depth (= smallest index, since nodes are appended).
    int best = -1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (!depends(std::span<const Triple>(entry.triples), entry.event_id,
                   std::span<const Triple>(nodes[i].triples), nodes[i].event_id, mode))
        continue;
      if (best == -1 || nodes[i].depth > nodes[best].depth) best = static_cast<int>(i);
    }
    if (best == -1) continue;
    nodes.push_back({entry.event_id, entry.triples, entry.t, nodes[best].depth + 1, best});
  }
  return WitnessTree(std::move(nodes));
}

WitnessSubdag project_witness_subdag(const WitnessTree& tree, int k) {
  // Sweep shallow-to-deep, event id ascending within a level, keeping the
  // most recent projected node per domain slice and per range slice.
  std::vector<int> order(tree.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  const auto& nodes = tree.nodes();
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (nodes[a].depth != nodes[b].depth) return nodes[a].depth < nodes[b].depth;
    if (nodes[a].event_id != nodes[b].event_id) return nodes[a].event_id < nodes[b].event_id;
    return a < b;
  });

  WitnessSubdag dag;
  std::map<int, int> last_x;  // domain point -> subdag node
  std::map<int, int> last_y;  // range value -> subdag node
  for (int v : order) {
    for (const Triple& t : nodes[v].triples) {
      if (t.k != k) continue;
      const int id = static_cast<int>(dag.nodes.size());
      dag.nodes.push_back({t.x, t.y, nodes[v].event_id, v});
      const auto ix = last_x.find(t.x);
      const auto iy = last_y.find(t.y);
      if (ix != last_x.end()) dag.edges.emplace_back(id, ix->second);
      if (iy != last_y.end() && (ix == last_x.end() || iy->second != ix->second))
        dag.edges.emplace_back(id, iy->second);
      last_x[t.x] = id;
      last_y[t.y] = id;
    }
  }
  return dag;
}

double mt_bound(const BadEvent& e, const WeightMap& mu, const EventIndex& index, DepMode mode) {
  double bound = to_double(prob_omega(e, index.sizes()));
  for (int j : index.neighborhood(e, mode)) bound *= 1.0 + mu.at(index.at(j).id());
  return bound;
}

}  // namespace permlll
