#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permlll/rng.hpp"

namespace permlll {

// A permutation of {0, ..., n-1} with a synchronized inverse, so that
// both pi(x) and pi^{-1}(y) are O(1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : forward_(n), inverse_(n) {
    std::iota(forward_.begin(), forward_.end(), 0);
    std::iota(inverse_.begin(), inverse_.end(), 0);
  }
  static Permutation identity(int n) { return Permutation(n); }

  // Build from an explicit image list; throws if not a permutation.
  static Permutation from_forward(std::vector<int> forward) {
    Permutation p;
    const int n = static_cast<int>(forward.size());
    p.forward_ = std::move(forward);
    p.inverse_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      const int y = p.forward_[x];
      if (y < 0 || y >= n || p.inverse_[y] != -1)
        throw std::invalid_argument("Permutation::from_forward: not a permutation");
      p.inverse_[y] = x;
    }
    return p;
  }

  int size() const { return static_cast<int>(forward_.size()); }
  int operator()(int x) const { return forward_[x]; }
  int image(int x) const { return forward_[x]; }
  int preimage(int y) const { return inverse_[y]; }
  const std::vector<int>& forward() const { return forward_; }
  const std::vector<int>& inverse() const { return inverse_; }

  // Exchange the entries at positions a and b (right-multiplication by the
  // transposition (a b)); keeps the inverse synchronized.
  void transpose(int a, int b) {
    if (a == b) return;
    const int ya = forward_[a];
    const int yb = forward_[b];
    forward_[a] = yb;
    forward_[b] = ya;
    inverse_[ya] = b;
    inverse_[yb] = a;
  }

  Permutation inverted() const {
    Permutation p;
    p.forward_ = inverse_;
    p.inverse_ = forward_;
    return p;
  }

  // (this o other): maps x to this(other(x)).
  Permutation composed(const Permutation& other) const {
    const int n = size();
    std::vector<int> fwd(n);
    for (int x = 0; x < n; ++x) fwd[x] = forward_[other.forward_[x]];
    return from_forward(std::move(fwd));
  }

  bool consistent() const {
    const int n = size();
    if (static_cast<int>(inverse_.size()) != n) return false;
    for (int x = 0; x < n; ++x) {
      if (forward_[x] < 0 || forward_[x] >= n) return false;
      if (inverse_[forward_[x]] != x) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<int> forward_;
  std::vector<int> inverse_;
};

// Sorted multiset of cycle lengths (fixed points included).
std::vector<int> cycle_type(const Permutation& p);

namespace detail {
// Throws unless xs are distinct positions inside [0, n).
void check_sources(int n, std::span<const int> xs);
}  // namespace detail

// Uniform draw from {0,...,n-1} minus the (distinct) excluded values, using
// exactly one uniform_below(n - |excluded|) call.
template <class R>
int draw_excluding(R& rng, int n, std::span<const int> excluded) {
  const int m = static_cast<int>(excluded.size());
  int candidate = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - m)));
  // Map the draw onto the m smallest gaps: shift past excluded values in order.
  int sorted[16];
  int* begin = sorted;
  std::vector<int> heap_sorted;
  if (m > 16) {
    heap_sorted.assign(excluded.begin(), excluded.end());
    begin = heap_sorted.data();
  } else {
    std::copy(excluded.begin(), excluded.end(), sorted);
  }
  std::sort(begin, begin + m);
  for (int i = 0; i < m; ++i)
    if (begin[i] <= candidate) ++candidate;
  return candidate;
}

// Plan the swap mates for sources xs on a ground set of size n: mate i is
// uniform over [n] minus {xs[0..i-1]}. The draw never looks at the
// permutation itself, which is what lets the parallel variant pre-select
// mates before applying any of them.
template <class R>
std::vector<int> plan_swap(int n, std::span<const int> xs, R& rng) {
  detail::check_sources(n, xs);
  std::vector<int> mates;
  mates.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mates.push_back(draw_excluding(rng, n, xs.subspan(0, i)));
  }
  return mates;
}

// Partial Fisher-Yates resampling step: for i = 1..r, pick a mate uniformly
// from [n] minus the previously processed sources and exchange the entries at
// xs[i] and the mate. on_transpose(i, xs[i], mate) runs after each exchange.
template <class R, class F>
void swap_with(Permutation& pi, std::span<const int> xs, R& rng, F&& on_transpose) {
  const std::vector<int> mates = plan_swap(pi.size(), xs, rng);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    pi.transpose(xs[i], mates[i]);
    on_transpose(static_cast<int>(i), xs[i], mates[i]);
  }
}

template <class R>
void swap(Permutation& pi, std::span<const int> xs, R& rng, std::vector<int>* mates_out = nullptr) {
  swap_with(pi, xs, rng, [&](int, int, int mate) {
    if (mates_out) mates_out->push_back(mate);
  });
}

// Range-side variant: mates are drawn among range values [n] minus the
// previously processed ys, and the exchange happens at the preimages. The
// outcome distribution equals swap(pi, xs) with x_i = pi^{-1}(y_i).
template <class R>
void swap_range(Permutation& pi, std::span<const int> ys, R& rng,
                std::vector<int>* mates_out = nullptr) {
  detail::check_sources(pi.size(), ys);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const int mate = draw_excluding(rng, pi.size(), ys.subspan(0, i));
    pi.transpose(pi.preimage(ys[i]), pi.preimage(mate));
    if (mates_out) mates_out->push_back(mate);
  }
}

// Compose pi with the listed transpositions, first listed innermost:
// pi <- pi . (x_l z_l) ... (x_1 z_1). Equivalently the entries of pi are
// exchanged in reverse list order.
void apply_transpositions(Permutation& pi, std::span<const std::pair<int, int>> ts);

// Uniformly random permutation via full Fisher-Yates (a swap over all
// positions of the identity).
template <class R>
Permutation random_permutation(int n, R& rng) {
  Permutation pi(n);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  swap(pi, all, rng);
  return pi;
}

}  // namespace permlll
