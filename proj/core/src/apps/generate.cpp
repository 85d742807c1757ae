#include "permlll/apps/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "permlll/rng.hpp"

namespace permlll::apps {

ColorMatrix diagonal_run_matrix(int n, int delta) {
  if (n < 1 || delta < 1) throw std::invalid_argument("need n >= 1 and delta >= 1");
  const int runs_per_diagonal = (n + delta - 1) / delta;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < n; ++i) {
      const int j = (i + d) % n;
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          d * runs_per_diagonal + i / delta;
    }
  return ColorMatrix::from_rows(rows);
}

BlockGraph random_block_graph(int blocks, int block_size, int max_degree, std::uint64_t seed) {
  if (blocks < 2 || block_size < 1 || max_degree < 1)
    throw std::invalid_argument("need at least two blocks, positive sizes");
  const int n = blocks * block_size;
  std::vector<std::vector<int>> partition(static_cast<std::size_t>(blocks));
  for (int v = 0; v < n; ++v)
    partition[static_cast<std::size_t>(v / block_size)].push_back(v);

  Rng rng(derive_seed(seed, 0xb10c));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> present;
  std::vector<std::pair<int, int>> edges;
  const std::uint64_t attempts = static_cast<std::uint64_t>(n) * max_degree * 3;
  for (std::uint64_t a = 0; a < attempts; ++a) {
    int u = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    if (u / block_size == v / block_size) continue;
    if (u > v) std::swap(u, v);
    if (degree[static_cast<std::size_t>(u)] >= max_degree ||
        degree[static_cast<std::size_t>(v)] >= max_degree)
      continue;
    if (!present.insert({u, v}).second) continue;
    edges.emplace_back(u, v);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  return BlockGraph::make(n, std::move(edges), std::move(partition));
}

Hypergraph random_hypergraph(int vertices, int edges, int edge_size, std::uint64_t seed) {
  if (vertices < 1 || edges < 0 || edge_size < 1 || edge_size > vertices)
    throw std::invalid_argument("bad hypergraph parameters");
  Rng rng(derive_seed(seed, 0xedfe));
  std::set<std::vector<int>> seen;
  Hypergraph h;
  h.vertices = vertices;
  h.edge_size = edge_size;
  std::uint64_t guard = 0;
  while (static_cast<int>(h.edges.size()) < edges) {
    if (++guard > 1000ULL * static_cast<std::uint64_t>(edges) + 1000)
      throw std::runtime_error("could not draw enough distinct edges");
    std::vector<int> pool(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < edge_size; ++i) {
      const int j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(vertices - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> edge(pool.begin(), pool.begin() + edge_size);
    std::sort(edge.begin(), edge.end());
    if (!seen.insert(edge).second) continue;
    h.edges.push_back(std::move(edge));
  }
  return h;
}

std::vector<int> cycle_cover_permutation(int n) {
  if (n < 3) throw std::invalid_argument("need n >= 3 for a permutation without short cycles");
  std::vector<int> forward(static_cast<std::size_t>(n));
  int start = 0;
  int remaining = n;
  while (remaining > 0) {
    int len = 3;
    if (remaining % 3 == 1) len = 4;
    if (remaining % 3 == 2) len = 5;
    if (remaining < len) len = remaining;  // unreachable for n >= 3, kept defensive
    for (int i = 0; i < len; ++i)
      forward[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
    remaining -= len;
  }
  return forward;
}

}  // namespace permlll::apps
