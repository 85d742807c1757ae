#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "permlll/parallel.hpp"
#include "permlll/rational.hpp"
#include "permlll/verify.hpp"

using namespace permlll;

TEST_CASE("scripted generator replays choices and rejects misuse") {
  ScriptedRng rng({2, 0});
  CHECK(rng.uniform_below(5) == 2);
  CHECK(rng.uniform_below(3) == 0);
  CHECK_THROWS(rng.uniform_below(4));          // exhausted
  ScriptedRng bad({7});
  CHECK_THROWS(bad.uniform_below(5));          // out of range for the bound
}

TEST_CASE("model swap distribution sums to one and matches support size") {
  // n = 4, r = 2 sources: support is ordered pairs of distinct images at the
  // sources combined with the forced arrangement elsewhere; the distribution
  // over full permutations still sums to 1.
  const std::vector<int> base = {0, 1, 2, 3};
  const auto dist = enumerate_swap(base, std::vector<int>{0, 1});
  CHECK(dist.total() == Rational(1));
  const auto impl = enumerate_impl_swap(base, std::vector<int>{0, 1});
  CHECK(impl.total() == Rational(1));
  CHECK(dist == impl);
}

TEST_CASE("joint marginal at the sources is uniform over falling factorial") {
  const std::vector<int> base = {2, 0, 3, 1};
  const std::vector<int> xs = {1, 3};
  const auto dist = enumerate_swap(base, xs);
  const auto joint = joint_values(dist, xs);
  CHECK(joint.size() == 12);  // 4 * 3 ordered distinct pairs
  for (const auto& [vals, pr] : joint) CHECK(pr == Rational(1, 12));
}

TEST_CASE("range-addressed swap induces the same distribution") {
  const std::vector<int> base = {1, 3, 0, 2};
  const auto by_source = enumerate_swap(base, std::vector<int>{2, 0});
  const auto impl_range = enumerate_impl_swap_range(base, std::vector<int>{0, 1});
  CHECK(by_source.total() == Rational(1));
  CHECK(impl_range.total() == Rational(1));
  // Range swap on values {0, 1} equals source swap at their preimages {2, 0}
  // only in distribution when sources line up; here we just pin totals and
  // cross-check the dedicated identity checker on small sizes.
  const auto report = check_appendix_a(3, 2);
  CHECK(report.ok);
  CHECK(report.checked > 0);
}

TEST_CASE("swap uniformity checker passes on its default budget") {
  const auto report = check_swap_uniform(4, 3, 6, 11);
  CHECK(report.ok);
  CHECK(report.detail.empty());
  CHECK(report.checked > 0);
}

TEST_CASE("constrained-probability bound values") {
  CHECK(g_bound(3, 1, 1, 1) == Rational(1, 3));
  CHECK(g_bound(3, 1, 0, 1) == Rational(2, 3));
  CHECK(g_bound(4, 2, 0, 0) == Rational(1));  // no constraints: bound is 1
  CHECK(g_bound(5, 2, 2, 2) == Rational(1, 20));
  CHECK_THROWS_AS(g_bound(3, 1, 2, 1), std::invalid_argument);  // s > min(q, r)
  CHECK_THROWS_AS(g_bound(3, 2, 0, 2), std::invalid_argument);  // q + r - s > n
}

TEST_CASE("constrained-probability checker passes exhaustively on small sizes") {
  const auto report = check_prop51(4, 0, 3);
  CHECK(report.ok);
  CHECK(report.checked > 1000);
}

TEST_CASE("first-in-rank-order independent set: peel equals greedy reference") {
  ConflictGraph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  int depth = 0;
  const auto mis = lfmis_peel(g, &depth);
  CHECK(mis == std::vector<int>({0, 1}));
  CHECK(depth >= 1);
  const std::vector<int> ranks = {0, 1, 2, 3};
  CHECK(lfmis_reference(g, ranks) == mis);
  const auto report = check_lfmis(200, 20, 3);
  CHECK(report.ok);
}

TEST_CASE("monte carlo bound harness") {
  // Indicator with true probability 1/2 against a bound of 0.6 passes...
  auto coin = [](std::uint64_t trial) { return double(trial % 2 == 0); };
  const auto pass = monte_carlo_bound(coin, 0.6, 10'000);
  CHECK(pass.pass);
  CHECK(pass.trials == 10'000);
  CHECK(std::abs(pass.empirical - 0.5) < 0.02);
  // ... and against a bound of 0.4 fails by far more than 4 standard errors.
  const auto fail = monte_carlo_bound(coin, 0.4, 10'000);
  CHECK_FALSE(fail.pass);
}

TEST_CASE("bound accumulator with sample standard errors") {
  BoundAccumulator acc;
  for (int i = 0; i < 1000; ++i) acc.add((i % 4 == 0) ? 3.0 : 1.0);  // mean 1.5
  const auto ok = acc.assess(1.6, /*binomial_se=*/false);
  CHECK(ok.pass);
  const auto bad = acc.assess(1.2, /*binomial_se=*/false);
  CHECK_FALSE(bad.pass);
  CHECK(bad.empirical == doctest::Approx(1.5));
}
