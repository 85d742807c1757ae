#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "permlll/events.hpp"
#include "permlll/rational.hpp"

namespace permlll {

// Weights mu(B) keyed by event id.
class WeightMap {
 public:
  WeightMap() = default;
  static WeightMap uniform(const EventIndex& index, double value);

  void set(std::int64_t id, double mu) { mu_[id] = mu; }
  double at(std::int64_t id) const;
  bool contains(std::int64_t id) const { return mu_.count(id) != 0; }
  std::size_t size() const { return mu_.size(); }

 private:
  std::unordered_map<std::int64_t, double> mu_;
};

struct EventSlack {
  std::int64_t id = -1;
  double mu = 0;
  double rhs = 0;    // P(B) * prod over dependent B' of (1 + mu(B'))
  double slack = 0;  // mu - rhs
};

struct CriterionReport {
  bool satisfied = false;
  // Largest eps >= 0 with mu(B) >= (1+eps) * rhs for every event;
  // -1 when the criterion is unsatisfied.
  double epsilon = -1;
  std::int64_t worst_event = -1;  // event with the smallest slack; -1 if no events
  double min_slack = 0;
  std::vector<EventSlack> slacks;
};

// Asymmetric criterion: every event must satisfy
//   mu(B) >= P_Omega(B) * prod_{B' dependent on B} (1 + mu(B')),
// with the product running over the full dependency neighborhood of B
// (B itself included). Slacks within -tol of zero count as satisfied.
CriterionReport check_asymmetric(const EventIndex& index, const WeightMap& mu, DepMode mode,
                                 double tol = 1e-9);

// Symmetric corollary: e * p * (d + 1) <= 1 (with d the maximum dependency
// degree and p the maximum event probability).
bool check_symmetric(double p, long long d);

// Convert a classic LLL weight x in [0, 1) to mu = x / (1 - x).
double mu_from_x(double x);

// Smallest positive root of alpha = P * (1 + c*alpha)^m, if one exists
// (bisection to 1e-12; by convexity the equation either has a smallest root
// or alpha > P(1+c*alpha)^m never holds).
std::optional<double> solve_alpha(double P, double c, int m);

// Transversal-with-bounded-multiplicity criterion, evaluated in log space:
//   e * C(s,r)^{-1} * (n-r)!/n! * (2 r n C(delta,r-1) + C(delta,r)) <= 1.
bool check_szabo(long long n, long long s, long long r, long long delta);

// The e-free factor of the check_szabo left-hand side as an exact rational;
// the criterion is e * szabo_lhs_exact(...) <= 1.
Rational szabo_lhs_exact(long long n, long long s, long long r, long long delta);

// Hypergraph packing criterion, evaluated in log space:
//   (d1+1)*m2 + (d2+1)*m1 < C(n,r) / e.
bool check_packing(long long m1, long long m2, long long d1, long long d2, long long n,
                   long long r);

// Rational lo < 1/e < hi, tight to ~20 decimal digits; used by the exact
// cross-validation path for the log-space criteria.
std::pair<Rational, Rational> inv_e_bounds();

}  // namespace permlll
