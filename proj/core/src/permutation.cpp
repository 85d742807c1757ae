#include "permlll/permutation.hpp"

#include <algorithm>

namespace permlll {

std::vector<int> cycle_type(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = x; !seen[y]; y = p(y)) {
      seen[y] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

namespace detail {
void check_sources(int n, std::span<const int> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0 || xs[i] >= n)
      throw std::invalid_argument("swap: source position out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("swap: duplicate source position");
  }
}
}  // namespace detail

void apply_transpositions(Permutation& pi, std::span<const std::pair<int, int>> ts) {
  const int n = pi.size();
  for (const auto& [a, b] : ts) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("apply_transpositions: position out of range");
  }
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) pi.transpose(it->first, it->second);
}

}  // namespace permlll
