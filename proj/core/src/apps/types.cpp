#include "permlll/apps/types.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permlll::apps {

ColorMatrix ColorMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty matrix");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix must be square");

  ColorMatrix m;
  m.n_ = n;
  m.cells_.resize(static_cast<std::size_t>(n) * n);
  std::map<int, int> dense;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int raw = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      auto [it, fresh] = dense.try_emplace(raw, static_cast<int>(m.raw_labels_.size()));
      if (fresh) {
        m.raw_labels_.push_back(raw);
        m.occ_.emplace_back();
      }
      m.cells_[static_cast<std::size_t>(i) * n + j] = it->second;
      m.occ_[static_cast<std::size_t>(it->second)].emplace_back(i, j);
    }
  }
  return m;
}

int ColorMatrix::max_multiplicity() const {
  std::size_t best = 0;
  for (const auto& cells : occ_) best = std::max(best, cells.size());
  return static_cast<int>(best);
}

BlockGraph BlockGraph::make(int vertices, std::vector<std::pair<int, int>> edges,
                            std::vector<std::vector<int>> blocks) {
  if (vertices < 1) throw std::invalid_argument("need at least one vertex");
  if (blocks.empty()) throw std::invalid_argument("need at least one block");
  const std::size_t size = blocks[0].size();
  if (size == 0) throw std::invalid_argument("blocks must be nonempty");

  BlockGraph g;
  g.adj_.resize(static_cast<std::size_t>(vertices));
  g.block_of_.assign(static_cast<std::size_t>(vertices), -1);
  g.index_in_block_.assign(static_cast<std::size_t>(vertices), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() != size) throw std::invalid_argument("blocks must have equal sizes");
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      const int v = blocks[b][i];
      if (v < 0 || v >= vertices) throw std::invalid_argument("block vertex out of range");
      if (g.block_of_[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("vertex in two blocks");
      g.block_of_[static_cast<std::size_t>(v)] = static_cast<int>(b);
      g.index_in_block_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < vertices; ++v)
    if (g.block_of_[static_cast<std::size_t>(v)] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is in no block");

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= vertices || v < 0 || v >= vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  g.edges_ = std::move(edges);
  g.blocks_ = std::move(blocks);
  return g;
}

int BlockGraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return static_cast<int>(best);
}

int Hypergraph::max_edge_degree() const {
  std::vector<std::vector<int>> touching(static_cast<std::size_t>(vertices));
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (int v : edges[e]) touching[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  int best = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::vector<int> others;
    for (int v : edges[e])
      for (int f : touching[static_cast<std::size_t>(v)])
        if (f != static_cast<int>(e)) others.push_back(f);
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());
    best = std::max(best, static_cast<int>(others.size()));
  }
  return best;
}

}  // namespace permlll::apps
