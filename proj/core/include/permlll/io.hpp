#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permlll/events.hpp"

namespace permlll {

// Thrown by all parsers; message includes a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Explicit event list: a header `perms k n_1 ... n_k` followed by one line
// per event, `event t k_1 x_1 y_1 ... k_t x_t y_t`, all indices 1-based.
// Blank lines and lines starting with '#' are ignored. Events are numbered
// 1..m in file order.
struct EventListInput {
  std::vector<int> sizes;
  std::vector<BadEvent> events;
};
EventListInput parse_event_list(std::istream& in);
EventListInput load_event_list(const std::string& path);

// Square matrix of integer colors, one CSV row per line.
std::vector<std::vector<int>> parse_matrix_csv(std::istream& in);
std::vector<std::vector<int>> load_matrix_csv(const std::string& path);

// Vertex-blocked graph: header `n m b s` (vertices, edges, blocks, block
// size), then m edge lines `u v`, then b block lines of s vertex ids each;
// the blocks must partition 1..n. All ids 1-based.
struct BlockGraphInput {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;      // 0-based endpoints
  std::vector<std::vector<int>> blocks;        // 0-based vertex ids
};
BlockGraphInput parse_block_graph(std::istream& in);
BlockGraphInput load_block_graph(const std::string& path);

// Uniform hypergraph: header `v e r`, then e lines of r vertex ids (1-based).
struct HypergraphInput {
  int vertices = 0;
  int edge_size = 0;
  std::vector<std::vector<int>> edges;  // 0-based vertex ids
};
HypergraphInput parse_hypergraph(std::istream& in);
HypergraphInput load_hypergraph(const std::string& path);

// Permutation: the size n followed by n 1-based images, any whitespace
// layout. Returns the 0-based forward array.
std::vector<int> parse_permutation(std::istream& in);
std::vector<int> load_permutation(const std::string& path);

// Event weights: one `id value` pair per line (value may be a decimal or a
// fraction `p/q`); blank lines and '#' comments are ignored.
std::vector<std::pair<int, double>> parse_weights(std::istream& in);
std::vector<std::pair<int, double>> load_weights(const std::string& path);

}  // namespace permlll
