#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "permlll/parallel.hpp"
#include "permlll/permutation.hpp"
#include "permlll/rational.hpp"

namespace permlll {

// Deterministic stand-in for Rng that replays a fixed list of choices; used
// to drive the production swap code through every branch of its decision
// tree. uniform_below(b) returns the next scripted value and throws if the
// script is exhausted or the value is out of range.
class ScriptedRng {
 public:
  explicit ScriptedRng(std::vector<std::uint64_t> choices) : choices_(std::move(choices)) {}
  std::uint64_t uniform_below(std::uint64_t bound);
  bool exhausted() const { return next_ == choices_.size(); }

 private:
  std::vector<std::uint64_t> choices_;
  std::size_t next_ = 0;
};

// Exact distribution over permutations of one size, as forward arrays with
// rational probabilities.
struct ExactDistribution {
  std::map<std::vector<int>, Rational> prob;
  bool operator==(const ExactDistribution&) const = default;
  Rational total() const;
};

// Exact output distribution of the partial swap started from the given
// permutation: mates are drawn uniformly excluding earlier sources, and the
// corresponding entries are transposed. Independent re-derivation on raw
// arrays; guards n <= 8 and |xs| <= 4.
ExactDistribution enumerate_swap(const std::vector<int>& forward, std::span<const int> xs);

// Range-side variant: positions are addressed by their current images ys.
ExactDistribution enumerate_swap_range(const std::vector<int>& forward, std::span<const int> ys);

// Same distributions computed by running the production swap code over
// every possible scripted choice sequence.
ExactDistribution enumerate_impl_swap(const std::vector<int>& forward, std::span<const int> xs);
ExactDistribution enumerate_impl_swap_range(const std::vector<int>& forward,
                                            std::span<const int> ys);
ExactDistribution enumerate_impl_random_permutation(int n);

// Restriction of a distribution to the value tuple at the given positions.
std::map<std::vector<int>, Rational> joint_values(const ExactDistribution& dist,
                                                  std::span<const int> positions);

// Upper bound (n-r)! (n-q)! / (n! (n-q-r+s)!) on the probability that a
// swap with r sources satisfies q equality constraints pi(x'_j) = y'_j with
// distinct x' and distinct y', where s of the constraints are aligned with
// a prefix of the swap's own sources. Requires 0 <= s <= min(q, r) and
// q + (r - s) <= n.
Rational g_bound(int n, int r, int s, int q);

struct CheckReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::string detail;  // description of the first failure, empty when ok
};

// Swap of a uniform permutation is uniform: for random base permutations
// and source tuples, the joint distribution of the images at the sources is
// exactly uniform over ordered distinct tuples.
CheckReport check_swap_uniform(int n_max = 5, int r_max = 3, int bases_per_case = 20,
                               std::uint64_t seed = 1);

// Exhaustive identities of the swap distribution: invariance under
// reordering of the sources, equivariance under composition with fixed
// permutations on either side, and agreement between source-addressed and
// range-addressed swaps.
CheckReport check_appendix_a(int n_max = 4, int r_max = 3);

// Exhaustive (n <= 4) plus sampled (n = 5, 6) verification that every
// constrained swap probability is at most g_bound at the aligned prefix
// length, comparing exact rationals.
CheckReport check_prop51(int n_max = 6, int samples_per_n = 1000, std::uint64_t seed = 1);

// Definitional check of the lexicographically-first MIS: on random
// rank-oriented graphs, iterated source peeling must match a greedy scan in
// rank order.
CheckReport check_lfmis(int graphs = 1000, int max_vertices = 30, std::uint64_t seed = 1);

// Greedy scan reference: include each vertex (in the given rank order)
// unless an already-included in-neighbor excludes it.
std::vector<int> lfmis_reference(const ConflictGraph& g, std::span<const int> rank_order);

// Estimate an indicator's probability over `trials` runs of `runner`
// (called with trial indices 0..trials-1, returning 0 or 1, or a
// nonnegative count when binomial_se is false) and compare the mean
// against bound + 4 standard errors.
struct McResult {
  bool pass = false;
  double empirical = 0.0;
  double bound = 0.0;
  double se = 0.0;
  std::uint64_t trials = 0;
};
McResult monte_carlo_bound(const std::function<double(std::uint64_t)>& runner, double bound,
                           std::uint64_t trials, bool binomial_se = true);

// Accumulates per-trial samples for a statistic whose mean is being
// compared against an upper bound; assess() applies the same 4-sigma rule.
class BoundAccumulator {
 public:
  void add(double value);
  McResult assess(double bound, bool binomial_se = true) const;

 private:
  std::uint64_t n_ = 0;
  double sum_ = 0.0;
  double sum_sq_ = 0.0;
};

}  // namespace permlll
