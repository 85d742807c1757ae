#pragma once

#include <string>
#include <vector>

#include "permlll/apps/types.hpp"

namespace permlll::apps {

// Independent result validators: every function re-derives the property
// from the raw inputs with direct scans and returns an empty string when
// the result is valid, otherwise a description of the first violation.
// They deliberately share no state or helper code with the solvers.

// columns[i] is the column picked in row i; the cells must form a
// transversal (each column once) with pairwise distinct colors.
std::string validate_latin_transversal(const std::vector<std::vector<int>>& colors,
                                       const std::vector<int>& columns);

// As above, but every color may appear at most s-1 times.
std::string validate_multiplicity_transversal(const std::vector<std::vector<int>>& colors,
                                              const std::vector<int>& columns, int s);

// sigma conjugates tau; the cells (i, sigma^-1(tau(sigma(i)))) must have
// pairwise distinct colors.
std::string validate_rainbow_conjugate(const std::vector<std::vector<int>>& colors,
                                       const std::vector<int>& tau, const std::vector<int>& sigma);

// color_of is a proper coloring, and within each block every color
// 0..block_size-1 appears exactly once.
std::string validate_strong_coloring(const BlockGraph& g, const std::vector<int>& color_of);

// chosen[b] lies in block b and the chosen vertices are pairwise
// non-adjacent.
std::string validate_independent_transversal(const BlockGraph& g, const std::vector<int>& chosen);

// phi2 injects h2's vertices into 0..n-1 so that no h2 edge lands (as a
// set) on an h1 edge, h1 being embedded by the identity.
std::string validate_packing(const Hypergraph& h1, const Hypergraph& h2, int n,
                             const std::vector<int>& phi2);

}  // namespace permlll::apps
