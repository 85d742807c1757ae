#include "permlll/criteria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace permlll {

namespace {
constexpr double kE = 2.718281828459045235360287471352662497757;

double log_binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

double log_sum_exp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}
}  // namespace

WeightMap WeightMap::uniform(const EventIndex& index, double value) {
  WeightMap w;
  for (const BadEvent& b : index.events()) w.set(b.id(), value);
  return w;
}

double WeightMap::at(std::int64_t id) const {
  const auto it = mu_.find(id);
  if (it == mu_.end()) throw std::invalid_argument("WeightMap: no weight for event id");
  return it->second;
}

CriterionReport check_asymmetric(const EventIndex& index, const WeightMap& mu, DepMode mode,
                                 double tol) {
  CriterionReport report;
  report.satisfied = true;
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const BadEvent& b : index.events()) {
    const double p = to_double(prob_omega(b, index.sizes()));
    double rhs = p;
    for (int j : index.neighborhood(b, mode)) rhs *= 1.0 + mu.at(index.at(j).id());
    EventSlack es;
    es.id = b.id();
    es.mu = mu.at(b.id());
    es.rhs = rhs;
    es.slack = es.mu - rhs;
    if (report.slacks.empty() || es.slack < report.min_slack) {
      report.min_slack = es.slack;
      report.worst_event = es.id;
    }
    min_ratio = std::min(min_ratio, rhs > 0 ? es.mu / rhs : std::numeric_limits<double>::infinity());
    if (es.slack < -tol * std::max(1.0, std::abs(es.mu))) report.satisfied = false;
    report.slacks.push_back(es);
  }
  if (report.slacks.empty()) {
    report.satisfied = true;
    report.epsilon = 0;
    report.min_slack = 0;
    return report;
  }
  report.epsilon = report.satisfied ? std::max(0.0, min_ratio - 1.0) : -1.0;
  return report;
}

bool check_symmetric(double p, long long d) {
  if (p < 0 || d < 0) throw std::invalid_argument("check_symmetric: negative argument");
  return kE * p * static_cast<double>(d + 1) <= 1.0 + 1e-12;
}

double mu_from_x(double x) {
  if (!(x >= 0.0) || x >= 1.0) throw std::invalid_argument("mu_from_x: requires 0 <= x < 1");
  return x / (1.0 - x);
}

std::optional<double> solve_alpha(double P, double c, int m) {
  if (!(P > 0) || c < 0 || m < 1) throw std::invalid_argument("solve_alpha: invalid arguments");
  if (c == 0) return P;
  auto f = [&](double a) { return P * std::pow(1.0 + c * a, m) - a; };
  // f(0) = P > 0 and f is convex; a root exists iff f dips to <= 0 at its
  // stationary point.
  if (P * c * m >= 1.0) return std::nullopt;  // f' >= 0 everywhere, f stays positive
  double hi;
  if (m == 1) {
    hi = 2.0 * P / (1.0 - P * c);
  } else {
    const double base = std::pow(1.0 / (P * c * m), 1.0 / (m - 1));
    hi = (base - 1.0) / c;  // stationary point of f
    if (hi <= 0) return std::nullopt;
  }
  if (f(hi) > 0) return std::nullopt;
  double lo = 0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

bool check_szabo(long long n, long long s, long long r, long long delta) {
  if (n < 1 || r < 1 || s < r || r > n || delta < 0)
    throw std::invalid_argument("check_szabo: invalid arguments");
  const double log_a = std::log(2.0 * static_cast<double>(r) * static_cast<double>(n)) +
                       log_binomial(delta, r - 1);
  const double log_b = log_binomial(delta, r);
  const double log_sum = log_sum_exp(log_a, log_b);
  if (std::isinf(log_sum) && log_sum < 0) return true;  // both binomials vanish
  const double log_falling =
      std::lgamma(static_cast<double>(n - r) + 1) - std::lgamma(static_cast<double>(n) + 1);
  const double log_lhs = 1.0 - log_binomial(s, r) + log_falling + log_sum;
  return log_lhs <= 1e-9;
}

Rational szabo_lhs_exact(long long n, long long s, long long r, long long delta) {
  if (n < 1 || r < 1 || s < r || r > n || delta < 0)
    throw std::invalid_argument("szabo_lhs_exact: invalid arguments");
  const BigInt sum = BigInt(2 * r * n) * binomial(delta, r - 1) + binomial(delta, r);
  return Rational(sum, binomial(s, r) * falling_factorial(static_cast<unsigned>(n),
                                                          static_cast<unsigned>(r)));
}

bool check_packing(long long m1, long long m2, long long d1, long long d2, long long n,
                   long long r) {
  if (m1 < 0 || m2 < 0 || d1 < 0 || d2 < 0 || n < 0 || r < 0)
    throw std::invalid_argument("check_packing: negative argument");
  const double log_rhs = log_binomial(n, r) - 1.0;
  if (std::isinf(log_rhs) && log_rhs < 0) return false;  // C(n,r) = 0
  const double lhs =
      static_cast<double>(d1 + 1) * static_cast<double>(m2) +
      static_cast<double>(d2 + 1) * static_cast<double>(m1);
  if (lhs == 0) return true;
  return std::log(lhs) < log_rhs + 1e-9;
}

std::pair<Rational, Rational> inv_e_bounds() {
  // 1/e = 0.36787944117144232159552377016146...
  const BigInt scale = BigInt("100000000000000000000");
  return {Rational(BigInt("36787944117144232159"), scale),
          Rational(BigInt("36787944117144232160"), scale)};
}

}  // namespace permlll
