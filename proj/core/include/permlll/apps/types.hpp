#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permlll/engine.hpp"
#include "permlll/events.hpp"

namespace permlll::apps {

enum class SolveStatus { success, iteration_limit, criterion_failed };

// Result of the advisory sufficient-condition check a solver runs before
// touching the instance. An unsatisfied criterion aborts the run unless the
// caller forces it.
struct CriterionSummary {
  bool satisfied = false;
  double alpha = -1.0;  // uniform event weight backing the run, when one is used
  std::string description;
};

struct AppConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_resamplings = 10'000'000;
  SelectionRule selection = SelectionRule::first_true;
  bool force = false;         // run even when the criterion check fails
  bool use_parallel = false;  // use the round-based variant where supported
  std::uint64_t max_rounds = 10'000;
  bool record_log = false;
};

// Square matrix of colors with dense ids and per-color occurrence lists.
class ColorMatrix {
 public:
  static ColorMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int colors() const { return static_cast<int>(occ_.size()); }
  int color(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
  int raw_label(int c) const { return raw_labels_[static_cast<std::size_t>(c)]; }
  const std::vector<std::pair<int, int>>& occurrences(int c) const {
    return occ_[static_cast<std::size_t>(c)];
  }
  // Largest number of cells sharing one color.
  int max_multiplicity() const;

 private:
  int n_ = 0;
  std::vector<int> cells_;
  std::vector<int> raw_labels_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
};

// Graph whose vertices are partitioned into equal-size blocks.
class BlockGraph {
 public:
  static BlockGraph make(int vertices, std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> blocks);

  int vertices() const { return static_cast<int>(adj_.size()); }
  int blocks() const { return static_cast<int>(blocks_.size()); }
  int block_size() const { return blocks_.empty() ? 0 : static_cast<int>(blocks_[0].size()); }
  int block_of(int v) const { return block_of_[static_cast<std::size_t>(v)]; }
  int index_in_block(int v) const { return index_in_block_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& block(int b) const { return blocks_[static_cast<std::size_t>(b)]; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int vertex(int b, int i) const { return blocks_[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]; }
  int max_degree() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
  std::vector<int> index_in_block_;
};

struct Hypergraph {
  int vertices = 0;
  int edge_size = 0;
  std::vector<std::vector<int>> edges;

  // Largest number of other edges any edge intersects.
  int max_edge_degree() const;
};

}  // namespace permlll::apps
