#include "permlll/apps/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace permlll::apps {

namespace {

std::string check_is_permutation(const std::vector<int>& values, int n, const char* what) {
  if (static_cast<int>(values.size()) != n) {
    std::ostringstream os;
    os << what << " has " << values.size() << " entries, expected " << n;
    return os.str();
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const int v = values[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n) {
      std::ostringstream os;
      os << what << " entry " << i + 1 << " is out of range";
      return os.str();
    }
    if (seen[static_cast<std::size_t>(v)]) {
      std::ostringstream os;
      os << what << " repeats value " << v + 1;
      return os.str();
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return {};
}

std::string check_color_counts(const std::vector<std::vector<int>>& colors,
                               const std::vector<int>& columns, int limit) {
  const int n = static_cast<int>(colors.size());
  std::map<int, std::vector<int>> rows_of_color;
  for (int i = 0; i < n; ++i)
    rows_of_color[colors[static_cast<std::size_t>(i)]
                         [static_cast<std::size_t>(columns[static_cast<std::size_t>(i)])]]
        .push_back(i);
  for (const auto& [c, rows] : rows_of_color) {
    if (static_cast<int>(rows.size()) > limit) {
      std::ostringstream os;
      os << "color " << c << " appears " << rows.size() << " times (limit " << limit
         << "), e.g. rows " << rows[0] + 1 << " and " << rows[1] + 1;
      return os.str();
    }
  }
  return {};
}

}  // namespace

std::string validate_latin_transversal(const std::vector<std::vector<int>>& colors,
                                       const std::vector<int>& columns) {
  const int n = static_cast<int>(colors.size());
  if (auto err = check_is_permutation(columns, n, "column choice"); !err.empty()) return err;
  return check_color_counts(colors, columns, 1);
}

std::string validate_multiplicity_transversal(const std::vector<std::vector<int>>& colors,
                                              const std::vector<int>& columns, int s) {
  const int n = static_cast<int>(colors.size());
  if (s < 2) return "the multiplicity threshold must be at least 2";
  if (auto err = check_is_permutation(columns, n, "column choice"); !err.empty()) return err;
  return check_color_counts(colors, columns, s - 1);
}

std::string validate_rainbow_conjugate(const std::vector<std::vector<int>>& colors,
                                       const std::vector<int>& tau, const std::vector<int>& sigma) {
  const int n = static_cast<int>(colors.size());
  if (auto err = check_is_permutation(tau, n, "tau"); !err.empty()) return err;
  if (auto err = check_is_permutation(sigma, n, "sigma"); !err.empty()) return err;
  std::vector<int> sigma_inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma_inv[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])] = i;
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pi[static_cast<std::size_t>(i)] =
        sigma_inv[static_cast<std::size_t>(tau[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])])];
  return check_color_counts(colors, pi, 1);
}

std::string validate_strong_coloring(const BlockGraph& g, const std::vector<int>& color_of) {
  const int n = g.vertices();
  const int b = g.block_size();
  if (static_cast<int>(color_of.size()) != n) return "coloring has the wrong length";
  for (int v = 0; v < n; ++v) {
    const int c = color_of[static_cast<std::size_t>(v)];
    if (c < 0 || c >= b) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " has out-of-range color " << c;
      return os.str();
    }
  }
  for (int bi = 0; bi < g.blocks(); ++bi) {
    std::vector<char> used(static_cast<std::size_t>(b), 0);
    for (int v : g.block(bi)) {
      const int c = color_of[static_cast<std::size_t>(v)];
      if (used[static_cast<std::size_t>(c)]) {
        std::ostringstream os;
        os << "block " << bi + 1 << " uses color " << c + 1 << " twice";
        return os.str();
      }
      used[static_cast<std::size_t>(c)] = 1;
    }
  }
  for (const auto& [u, v] : g.edges()) {
    if (color_of[static_cast<std::size_t>(u)] == color_of[static_cast<std::size_t>(v)]) {
      std::ostringstream os;
      os << "edge " << u + 1 << "-" << v + 1 << " is monochromatic in color "
         << color_of[static_cast<std::size_t>(u)] + 1;
      return os.str();
    }
  }
  return {};
}

std::string validate_independent_transversal(const BlockGraph& g, const std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) != g.blocks()) return "need exactly one vertex per block";
  std::set<int> picked;
  for (int b = 0; b < g.blocks(); ++b) {
    const int v = chosen[static_cast<std::size_t>(b)];
    if (v < 0 || v >= g.vertices()) {
      std::ostringstream os;
      os << "entry " << b + 1 << " is out of range";
      return os.str();
    }
    const auto& block = g.block(b);
    if (std::find(block.begin(), block.end(), v) == block.end()) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " is not in block " << b + 1;
      return os.str();
    }
    picked.insert(v);
  }
  for (const auto& [u, v] : g.edges()) {
    if (picked.count(u) != 0 && picked.count(v) != 0) {
      std::ostringstream os;
      os << "chosen vertices " << u + 1 << " and " << v + 1 << " are adjacent";
      return os.str();
    }
  }
  return {};
}

std::string validate_packing(const Hypergraph& h1, const Hypergraph& h2, int n,
                             const std::vector<int>& phi2) {
  if (h1.vertices > n || h2.vertices > n) return "ground set too small for the hypergraphs";
  if (h1.edge_size != h2.edge_size) return "the hypergraphs must have one common edge size";
  if (static_cast<int>(phi2.size()) != h2.vertices) return "embedding has the wrong length";
  std::set<int> images;
  for (int v = 0; v < h2.vertices; ++v) {
    const int img = phi2[static_cast<std::size_t>(v)];
    if (img < 0 || img >= n) {
      std::ostringstream os;
      os << "vertex " << v + 1 << " maps out of range";
      return os.str();
    }
    if (!images.insert(img).second) {
      std::ostringstream os;
      os << "embedding is not injective at image " << img + 1;
      return os.str();
    }
  }
  std::set<std::vector<int>> h1_edges;
  for (const auto& e : h1.edges) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    h1_edges.insert(sorted);
  }
  for (std::size_t e = 0; e < h2.edges.size(); ++e) {
    std::vector<int> image;
    for (int v : h2.edges[e]) image.push_back(phi2[static_cast<std::size_t>(v)]);
    std::sort(image.begin(), image.end());
    if (h1_edges.count(image) != 0) {
      std::ostringstream os;
      os << "edge " << e + 1 << " of the second hypergraph lands on an edge of the first";
      return os.str();
    }
  }
  return {};
}

}  // namespace permlll::apps
