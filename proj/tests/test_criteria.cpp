#include <cmath>
#include <optional>
#include <vector>

#include "doctest.h"
#include "permlll/criteria.hpp"
#include "permlll/events.hpp"
#include "permlll/rational.hpp"

using namespace permlll;

namespace {

EventIndex tangent_index() {
  // One permutation of size 4; two events on the same domain point plus one
  // independent event. With mu = (1, 1, 1/3) both constraint sides touch.
  const std::vector<int> sizes = {4};
  std::vector<BadEvent> events;
  events.push_back(BadEvent::make(1, {{0, 0, 0}}, sizes));
  events.push_back(BadEvent::make(2, {{0, 0, 1}}, sizes));
  events.push_back(BadEvent::make(3, {{0, 2, 2}}, sizes));
  return EventIndex(sizes, events);
}

}  // namespace

TEST_CASE("weight maps") {
  const auto index = tangent_index();
  WeightMap mu = WeightMap::uniform(index, 0.25);
  CHECK(mu.size() == 3);
  CHECK(mu.at(2) == 0.25);
  mu.set(2, 0.5);
  CHECK(mu.at(2) == 0.5);
  CHECK(mu.contains(3));
  CHECK_FALSE(mu.contains(99));
  CHECK_THROWS(mu.at(99));
}

TEST_CASE("per-event inequality at exact tangency") {
  const auto index = tangent_index();
  WeightMap mu;
  mu.set(1, 1.0);
  mu.set(2, 1.0);
  mu.set(3, 1.0 / 3.0);
  const auto report = check_asymmetric(index, mu, DepMode::standard);
  CHECK(report.satisfied);
  CHECK(report.epsilon == doctest::Approx(0.0).epsilon(1e-9));
  REQUIRE(report.slacks.size() == 3);
  // Events 1 and 2: rhs = 1/4 * (1+1)(1+1) = 1 = mu, slack exactly zero.
  CHECK(report.slacks[0].rhs == doctest::Approx(1.0));
  CHECK(report.slacks[0].slack == doctest::Approx(0.0));
  CHECK(report.slacks[1].rhs == doctest::Approx(1.0));
  // Event 3 depends only on itself: rhs = 1/4 * (1 + 1/3) = 1/3.
  CHECK(report.slacks[2].rhs == doctest::Approx(1.0 / 3.0));
  CHECK(report.slacks[2].slack == doctest::Approx(0.0));

  // Shrinking any weight breaks it.
  mu.set(1, 0.9);
  const auto broken = check_asymmetric(index, mu, DepMode::standard);
  CHECK_FALSE(broken.satisfied);
  CHECK(broken.worst_event == 1);
  CHECK(broken.min_slack < 0);
  CHECK(broken.epsilon == -1);
}

TEST_CASE("uniform weights on the tangent pair work only at exactly one") {
  // For two events sharing a domain point, a uniform weight u must satisfy
  // u >= (1/4)(1+u)^2, i.e. (u-1)^2 <= 0: only u = 1 works.
  const auto index = tangent_index();
  for (double u : {2.0, 1.25, 0.9, 0.5}) {
    CHECK_FALSE(check_asymmetric(index, WeightMap::uniform(index, u), DepMode::standard).satisfied);
  }
  CHECK(check_asymmetric(index, WeightMap::uniform(index, 1.0), DepMode::standard).satisfied);
}

TEST_CASE("slackness gives a positive epsilon") {
  // Two mutually independent events: rhs = (1/4)(1+u), satisfied iff u >= 1/3.
  const std::vector<int> sizes = {4};
  std::vector<BadEvent> events;
  events.push_back(BadEvent::make(1, {{0, 0, 0}}, sizes));
  events.push_back(BadEvent::make(2, {{0, 2, 2}}, sizes));
  const EventIndex index(sizes, events);

  CHECK_FALSE(check_asymmetric(index, WeightMap::uniform(index, 0.3), DepMode::standard).satisfied);
  const auto report = check_asymmetric(index, WeightMap::uniform(index, 0.5), DepMode::standard);
  CHECK(report.satisfied);
  // rhs = 0.375 for both; epsilon = 0.5/0.375 - 1 = 1/3.
  CHECK(report.epsilon == doctest::Approx(1.0 / 3.0));
  CHECK(report.min_slack == doctest::Approx(0.125));
}

TEST_CASE("lopsided neighborhoods shrink the right-hand side") {
  const auto index = tangent_index();
  WeightMap mu;
  mu.set(1, 1.0);
  mu.set(2, 1.0);
  mu.set(3, 1.0 / 3.0);
  const auto lop = check_asymmetric(index, mu, DepMode::lopsided);
  CHECK(lop.satisfied);
  // Under the lopsided relation events 1 and 2 still see each other (same
  // domain point, different value) and themselves (same id): identical rhs.
  CHECK(lop.slacks[0].rhs == doctest::Approx(1.0));
  CHECK(lop.epsilon == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("symmetric corollary boundary") {
  // e * p * (d+1) <= 1.
  CHECK(check_symmetric(0.1, 2));       // 0.8155
  CHECK_FALSE(check_symmetric(0.1, 3)); // 1.0873
  CHECK(check_symmetric(0.0, 1000000));
  CHECK(check_symmetric(1.0 / (2.718281828459045 * 4.0), 3));  // exactly 1 up to rounding
}

TEST_CASE("weight conversion from classic form") {
  CHECK(mu_from_x(0.0) == doctest::Approx(0.0));
  CHECK(mu_from_x(0.5) == doctest::Approx(1.0));
  CHECK(mu_from_x(0.25) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("fixed point of alpha = P(1 + c alpha)^m") {
  // c = 0: alpha = P exactly.
  auto a0 = solve_alpha(0.01, 0.0, 4);
  REQUIRE(a0.has_value());
  CHECK(*a0 == doctest::Approx(0.01));

  // m = 1: alpha = P / (1 - P c) when P c < 1.
  auto a1 = solve_alpha(0.01, 10.0, 1);
  REQUIRE(a1.has_value());
  CHECK(*a1 == doctest::Approx(0.01 / (1 - 0.1)));

  // A root must satisfy the equation to high accuracy and be the smallest:
  // slightly below it the curve is above alpha.
  auto root = solve_alpha(1.0 / 132.0, 8.0, 4);
  REQUIRE(root.has_value());
  const double a = *root;
  CHECK(a == doctest::Approx((1.0 / 132.0) * std::pow(1 + 8 * a, 4)).epsilon(1e-9));

  // Beyond the solvability threshold there is no root: P c m ~ 4(D-1)/(n-1)
  // crossing 27/256 * (m/(m-1))^... for these shapes, 1/56 with c = 8 fails.
  CHECK_FALSE(solve_alpha(1.0 / 56.0, 8.0, 4).has_value());

  // Monotonicity in P near the boundary.
  CHECK(solve_alpha(1.0 / 200.0, 8.0, 4).has_value());
}

TEST_CASE("bounded-multiplicity criterion, frozen instances and exact cross-check") {
  CHECK(check_szabo(100, 9, 3, 200));
  CHECK_FALSE(check_szabo(100, 9, 3, 300));
  // Cross-validate the log-space evaluation against exact rationals
  // sandwiching 1/e: e * lhs <= 1 iff lhs <= 1/e.
  const auto [lo, hi] = inv_e_bounds();
  CHECK(lo < hi);
  for (long long delta : {150, 200, 250, 280, 290, 293, 294, 300, 400}) {
    const Rational lhs = szabo_lhs_exact(100, 9, 3, delta);
    const bool log_result = check_szabo(100, 9, 3, delta);
    if (lhs <= lo) CHECK(log_result);
    if (lhs >= hi) CHECK_FALSE(log_result);
  }
}

TEST_CASE("packing criterion") {
  // (d1+1)*m2 + (d2+1)*m1 < C(n,r)/e. C(40,3) = 9880, 9880/e = 3634.6...
  CHECK(check_packing(15, 15, 14, 14, 40, 3));      // 450 < 3634
  CHECK_FALSE(check_packing(2000, 2000, 0, 0, 40, 3));  // 4000 > 3634
  CHECK_FALSE(check_packing(1818, 1818, 0, 0, 40, 3));  // 3636 > 3634.6
  CHECK(check_packing(1817, 1817, 0, 0, 40, 3));        // 3634 < 3634.6
}
