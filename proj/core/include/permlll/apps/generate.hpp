#pragma once

#include <cstdint>
#include <vector>

#include "permlll/apps/types.hpp"

namespace permlll::apps {

// Color matrix in which every color occupies up to `delta` cells of one
// wrap-around diagonal, so all of a color's cells sit in distinct rows and
// distinct columns and no color appears more than delta times.
ColorMatrix diagonal_run_matrix(int n, int delta);

// Random graph on blocks*block_size vertices (vertex v is in block
// v / block_size) whose maximum degree stays at most max_degree; edges join
// different blocks.
BlockGraph random_block_graph(int blocks, int block_size, int max_degree, std::uint64_t seed);

// Random r-uniform hypergraph with distinct edges.
Hypergraph random_hypergraph(int vertices, int edges, int edge_size, std::uint64_t seed);

// A permutation of [n] without fixed points or 2-cycles (cycle lengths 3..5);
// requires n >= 3. Returned as a 0-based forward array.
std::vector<int> cycle_cover_permutation(int n);

}  // namespace permlll::apps
