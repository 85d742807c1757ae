#include "permlll/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace permlll {

std::uint64_t ScriptedRng::uniform_below(std::uint64_t bound) {
  if (next_ >= choices_.size()) throw std::runtime_error("scripted rng exhausted");
  const std::uint64_t v = choices_[next_++];
  if (v >= bound) throw std::runtime_error("scripted rng choice out of range");
  return v;
}

Rational ExactDistribution::total() const {
  Rational t = 0;
  for (const auto& [perm, p] : prob) t += p;
  return t;
}

namespace {

constexpr int kEnumMaxN = 8;
constexpr int kEnumMaxR = 4;

void check_enum_guards(std::size_t n, std::size_t r) {
  if (n == 0 || n > kEnumMaxN) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  if (r > kEnumMaxR) throw std::invalid_argument("enumeration supports at most 4 sources");
  if (r > n) throw std::invalid_argument("more sources than positions");
}

void check_positions(std::size_t n, std::span<const int> xs, bool values_mode,
                     const std::vector<int>& forward) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0 || xs[i] >= static_cast<int>(n)) throw std::invalid_argument("index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("duplicate index");
  }
  if (values_mode) {
    // Addressed values must actually occur (forward is a permutation, so
    // range checking already guarantees that); nothing further to check.
    (void)forward;
  }
}

ExactDistribution from_counts(const std::map<std::vector<int>, std::uint64_t>& counts,
                              std::uint64_t total) {
  ExactDistribution dist;
  for (const auto& [perm, c] : counts) dist.prob[perm] = Rational(c, total);
  return dist;
}

std::uint64_t branch_total(std::size_t n, std::size_t r) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < r; ++i) t *= static_cast<std::uint64_t>(n - i);
  return t;
}

}  // namespace

ExactDistribution enumerate_swap(const std::vector<int>& forward, std::span<const int> xs) {
  const std::size_t n = forward.size();
  check_enum_guards(n, xs.size());
  check_positions(n, xs, false, forward);

  std::map<std::vector<int>, std::uint64_t> counts;
  std::vector<int> cur = forward;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == xs.size()) {
      ++counts[cur];
      return;
    }
    for (int v = 0; v < static_cast<int>(n); ++v) {
      bool excluded = false;
      for (std::size_t j = 0; j < i; ++j)
        if (xs[j] == v) {
          excluded = true;
          break;
        }
      if (excluded) continue;
      std::swap(cur[xs[i]], cur[v]);
      self(self, i + 1);
      std::swap(cur[xs[i]], cur[v]);
    }
  };
  walk(walk, 0);
  return from_counts(counts, branch_total(n, xs.size()));
}

ExactDistribution enumerate_swap_range(const std::vector<int>& forward, std::span<const int> ys) {
  const std::size_t n = forward.size();
  check_enum_guards(n, ys.size());
  check_positions(n, ys, true, forward);

  std::map<std::vector<int>, std::uint64_t> counts;
  std::vector<int> cur = forward;
  const auto position_of = [&](int value) {
    for (std::size_t p = 0; p < n; ++p)
      if (cur[p] == value) return static_cast<int>(p);
    throw std::logic_error("value not found");
  };
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == ys.size()) {
      ++counts[cur];
      return;
    }
    for (int w = 0; w < static_cast<int>(n); ++w) {
      bool excluded = false;
      for (std::size_t j = 0; j < i; ++j)
        if (ys[j] == w) {
          excluded = true;
          break;
        }
      if (excluded) continue;
      const int p = position_of(ys[i]);
      const int q = position_of(w);
      std::swap(cur[p], cur[q]);
      self(self, i + 1);
      std::swap(cur[p], cur[q]);
    }
  };
  walk(walk, 0);
  return from_counts(counts, branch_total(n, ys.size()));
}

namespace {

// Runs `body` once for every choice vector within the given per-step
// limits, passing the scripted choices.
template <typename Body>
void for_each_script(const std::vector<std::uint64_t>& limits, Body&& body) {
  std::vector<std::uint64_t> script(limits.size(), 0);
  while (true) {
    body(script);
    std::size_t i = script.size();
    while (i > 0) {
      --i;
      if (++script[i] < limits[i]) break;
      script[i] = 0;
      if (i == 0) return;
    }
    if (limits.empty()) return;
  }
}

std::vector<std::uint64_t> step_limits(std::size_t n, std::size_t r) {
  std::vector<std::uint64_t> limits;
  for (std::size_t i = 0; i < r; ++i) limits.push_back(static_cast<std::uint64_t>(n - i));
  return limits;
}

}  // namespace

ExactDistribution enumerate_impl_swap(const std::vector<int>& forward, std::span<const int> xs) {
  const std::size_t n = forward.size();
  check_enum_guards(n, xs.size());
  std::map<std::vector<int>, std::uint64_t> counts;
  for_each_script(step_limits(n, xs.size()), [&](const std::vector<std::uint64_t>& script) {
    ScriptedRng rng(script);
    Permutation pi = Permutation::from_forward(forward);
    swap(pi, xs, rng);
    ++counts[pi.forward()];
  });
  return from_counts(counts, branch_total(n, xs.size()));
}

ExactDistribution enumerate_impl_swap_range(const std::vector<int>& forward,
                                            std::span<const int> ys) {
  const std::size_t n = forward.size();
  check_enum_guards(n, ys.size());
  std::map<std::vector<int>, std::uint64_t> counts;
  for_each_script(step_limits(n, ys.size()), [&](const std::vector<std::uint64_t>& script) {
    ScriptedRng rng(script);
    Permutation pi = Permutation::from_forward(forward);
    swap_range(pi, ys, rng);
    ++counts[pi.forward()];
  });
  return from_counts(counts, branch_total(n, ys.size()));
}

ExactDistribution enumerate_impl_random_permutation(int n) {
  if (n < 1 || n > kEnumMaxN) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  std::map<std::vector<int>, std::uint64_t> counts;
  for_each_script(step_limits(static_cast<std::size_t>(n), static_cast<std::size_t>(n)),
                  [&](const std::vector<std::uint64_t>& script) {
                    ScriptedRng rng(script);
                    const Permutation pi = random_permutation(n, rng);
                    ++counts[pi.forward()];
                  });
  return from_counts(counts, branch_total(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
}

std::map<std::vector<int>, Rational> joint_values(const ExactDistribution& dist,
                                                  std::span<const int> positions) {
  std::map<std::vector<int>, Rational> joint;
  for (const auto& [perm, p] : dist.prob) {
    std::vector<int> key;
    key.reserve(positions.size());
    for (int pos : positions) key.push_back(perm.at(static_cast<std::size_t>(pos)));
    joint[key] += p;
  }
  return joint;
}

Rational g_bound(int n, int r, int s, int q) {
  if (n < 0 || r < 0 || s < 0 || q < 0) throw std::invalid_argument("negative argument");
  if (r > n || q > n) throw std::invalid_argument("more sources or constraints than positions");
  if (s > std::min(q, r)) throw std::invalid_argument("aligned prefix longer than min(q, r)");
  if (q + (r - s) > n) throw std::invalid_argument("bound requires q + (r - s) <= n");
  return Rational(factorial(n - r) * factorial(n - q), factorial(n) * factorial(n - q - r + s));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return all;
}

void ordered_tuples(int n, int r, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
    cur.push_back(v);
    ordered_tuples(n, r, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> ordered_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  ordered_tuples(n, r, cur, out);
  return out;
}

std::string describe_case(const std::vector<int>& forward, std::span<const int> xs) {
  std::ostringstream os;
  os << "pi=[";
  for (std::size_t i = 0; i < forward.size(); ++i) os << (i ? "," : "") << forward[i];
  os << "] xs=[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

}  // namespace

CheckReport check_swap_uniform(int n_max, int r_max, int bases_per_case, std::uint64_t seed) {
  CheckReport report;
  Rng rng(seed);
  for (int n = 1; n <= n_max && report.ok; ++n) {
    for (int r = 0; r <= std::min(r_max, n) && report.ok; ++r) {
      const Rational expect = Rational(1, falling_factorial(n, r));
      for (int b = 0; b < bases_per_case && report.ok; ++b) {
        const Permutation pi = random_permutation(n, rng);
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int i = n - 1; i > 0; --i) {
          const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
          std::swap(pool[i], pool[j]);
        }
        const std::vector<int> xs(pool.begin(), pool.begin() + r);

        const ExactDistribution model = enumerate_swap(pi.forward(), xs);
        if (enumerate_impl_swap(pi.forward(), xs) != model) {
          report.ok = false;
          report.detail = "production swap deviates from model: " + describe_case(pi.forward(), xs);
          break;
        }
        std::vector<int> ys;
        for (int x : xs) ys.push_back(pi(x));
        if (enumerate_impl_swap_range(pi.forward(), ys) !=
            enumerate_swap_range(pi.forward(), ys)) {
          report.ok = false;
          report.detail =
              "production range swap deviates from model: " + describe_case(pi.forward(), xs);
          break;
        }

        const auto joint = joint_values(model, xs);
        if (static_cast<BigInt>(joint.size()) != falling_factorial(n, r)) {
          report.ok = false;
          report.detail = "support size wrong: " + describe_case(pi.forward(), xs);
          break;
        }
        for (const auto& [tuple, p] : joint) {
          if (p != expect) {
            report.ok = false;
            report.detail = "joint not uniform: " + describe_case(pi.forward(), xs);
            break;
          }
        }
        ++report.checked;
      }
    }
  }
  return report;
}

CheckReport check_appendix_a(int n_max, int r_max) {
  CheckReport report;
  for (int n = 1; n <= n_max && report.ok; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& pi : perms) {
      for (int r = 0; r <= std::min(r_max, n) && report.ok; ++r) {
        for (const auto& xs : ordered_tuples(n, r)) {
          const ExactDistribution base = enumerate_swap(pi, xs);

          // Invariance under reordering of the sources.
          std::vector<int> sorted_xs = xs;
          std::sort(sorted_xs.begin(), sorted_xs.end());
          std::vector<int> order = sorted_xs;
          do {
            if (enumerate_swap(pi, order) != base) {
              report.ok = false;
              report.detail = "source order changed the distribution: " + describe_case(pi, xs);
              break;
            }
            ++report.checked;
          } while (std::next_permutation(order.begin(), order.end()));
          if (!report.ok) break;

          // Equivariance under fixed right and left composition.
          for (const auto& tau : perms) {
            std::vector<int> tinv(n);
            for (int i = 0; i < n; ++i) tinv[tau[i]] = i;

            std::vector<int> pt(n), xs_t;
            for (int i = 0; i < n; ++i) pt[i] = pi[tau[i]];
            for (int x : xs) xs_t.push_back(tinv[x]);
            const ExactDistribution right = enumerate_swap(pt, xs_t);
            for (const auto& [sigma, p] : base.prob) {
              std::vector<int> st(n);
              for (int i = 0; i < n; ++i) st[i] = sigma[tau[i]];
              const auto it = right.prob.find(st);
              if (it == right.prob.end() || it->second != p) {
                report.ok = false;
                report.detail = "right composition broke equivariance: " + describe_case(pi, xs);
                break;
              }
            }
            if (!report.ok) break;

            std::vector<int> tp(n);
            for (int i = 0; i < n; ++i) tp[i] = tau[pi[i]];
            const ExactDistribution left = enumerate_swap(tp, xs);
            for (const auto& [sigma, p] : base.prob) {
              std::vector<int> ts(n);
              for (int i = 0; i < n; ++i) ts[i] = tau[sigma[i]];
              const auto it = left.prob.find(ts);
              if (it == left.prob.end() || it->second != p) {
                report.ok = false;
                report.detail = "left composition broke equivariance: " + describe_case(pi, xs);
                break;
              }
            }
            if (!report.ok) break;
            ++report.checked;
          }
          if (!report.ok) break;

          // Source-addressed and range-addressed swaps agree.
          std::vector<int> ys;
          for (int x : xs) ys.push_back(pi[x]);
          if (enumerate_swap_range(pi, ys) != base) {
            report.ok = false;
            report.detail = "range-addressed swap disagrees: " + describe_case(pi, xs);
            break;
          }
          ++report.checked;
        }
      }
    }
  }
  return report;
}

namespace {

// Counts the swap branches whose final permutation satisfies all of the
// constraints cur[xp[j]] == yp[j]; integer-only for speed.
void count_satisfying(std::vector<int>& cur, std::span<const int> xs, std::size_t i,
                      const std::vector<int>& xp, const std::vector<int>& yp,
                      std::uint64_t& favorable) {
  const int n = static_cast<int>(cur.size());
  if (i == xs.size()) {
    for (std::size_t j = 0; j < xp.size(); ++j)
      if (cur[xp[j]] != yp[j]) return;
    ++favorable;
    return;
  }
  for (int v = 0; v < n; ++v) {
    bool excluded = false;
    for (std::size_t j = 0; j < i; ++j)
      if (xs[j] == v) {
        excluded = true;
        break;
      }
    if (excluded) continue;
    std::swap(cur[xs[i]], cur[v]);
    count_satisfying(cur, xs, i + 1, xp, yp, favorable);
    std::swap(cur[xs[i]], cur[v]);
  }
}

// Checks one configuration against the selection bound; returns false (and
// fills detail) on violation. Skips configurations outside the bound's
// domain.
bool check_one_prop51(const std::vector<int>& forward, const std::vector<int>& xs,
                      const std::vector<int>& xp, const std::vector<int>& yp,
                      const std::vector<std::uint64_t>& fact, std::uint64_t& checked,
                      std::string& detail) {
  const int n = static_cast<int>(forward.size());
  const int r = static_cast<int>(xs.size());
  const int q = static_cast<int>(xp.size());
  int s = 0;
  const int s_cap = std::min(q, r);
  while (s < s_cap && (xp[s] == xs[s] || yp[s] == forward[xs[s]])) ++s;
  if (q + (r - s) > n) return true;  // outside the bound's domain

  std::uint64_t favorable = 0;
  std::vector<int> cur = forward;
  count_satisfying(cur, xs, 0, xp, yp, favorable);
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) total *= static_cast<std::uint64_t>(n - i);

  const std::uint64_t lhs = favorable * fact[n] * fact[n - q - r + s];
  const std::uint64_t rhs = total * fact[n - r] * fact[n - q];
  ++checked;
  if (lhs <= rhs) return true;
  std::ostringstream os;
  os << "selection bound violated: " << describe_case(forward, xs) << " q=" << q << " s=" << s
     << " favorable=" << favorable << "/" << total;
  detail = os.str();
  return false;
}

void constraint_lists(int n, int q, std::vector<int>& xp, std::vector<int>& yp,
                      const std::function<void()>& visit) {
  if (static_cast<int>(xp.size()) == q) {
    visit();
    return;
  }
  for (int x = 0; x < n; ++x) {
    if (std::find(xp.begin(), xp.end(), x) != xp.end()) continue;
    for (int y = 0; y < n; ++y) {
      if (std::find(yp.begin(), yp.end(), y) != yp.end()) continue;
      xp.push_back(x);
      yp.push_back(y);
      constraint_lists(n, q, xp, yp, visit);
      xp.pop_back();
      yp.pop_back();
    }
  }
}

}  // namespace

CheckReport check_prop51(int n_max, int samples_per_n, std::uint64_t seed) {
  CheckReport report;
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(std::max(n_max, 1)) + 1, 1);
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;

  for (int n = 1; n <= std::min(n_max, 4) && report.ok; ++n) {
    for (const auto& pi : all_permutations(n)) {
      for (int r = 0; r <= std::min(4, n) && report.ok; ++r) {
        for (const auto& xs : ordered_tuples(n, r)) {
          for (int q = 0; q <= n && report.ok; ++q) {
            std::vector<int> xp, yp;
            constraint_lists(n, q, xp, yp, [&] {
              if (!report.ok) return;
              if (!check_one_prop51(pi, xs, xp, yp, fact, report.checked, report.detail))
                report.ok = false;
            });
          }
          if (!report.ok) break;
        }
      }
      if (!report.ok) break;
    }
  }

  Rng rng(seed);
  const auto shuffled = [&](int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(v[i], v[j]);
    }
    return v;
  };
  for (int n = 5; n <= n_max && report.ok; ++n) {
    for (int trial = 0; trial < samples_per_n && report.ok; ++trial) {
      const std::vector<int> pi = shuffled(n);
      const int r = static_cast<int>(rng.uniform_below(5));
      const int q = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n) + 1));
      std::vector<int> xs = shuffled(n);
      xs.resize(static_cast<std::size_t>(r));
      std::vector<int> xp = shuffled(n);
      xp.resize(static_cast<std::size_t>(q));
      std::vector<int> yp = shuffled(n);
      yp.resize(static_cast<std::size_t>(q));
      // Bias half the trials toward aligned prefixes so s > 0 shows up.
      if (trial % 2 == 1) {
        for (int i = 0; i < std::min(q, r); ++i) {
          if (rng.uniform_below(2) == 0)
            xp[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(i)];
          else
            yp[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(xs[i])];
        }
        std::vector<char> seen_x(static_cast<std::size_t>(n), 0),
            seen_y(static_cast<std::size_t>(n), 0);
        bool distinct = true;
        for (int j = 0; j < q; ++j) {
          if (seen_x[static_cast<std::size_t>(xp[j])] || seen_y[static_cast<std::size_t>(yp[j])])
            distinct = false;
          seen_x[static_cast<std::size_t>(xp[j])] = 1;
          seen_y[static_cast<std::size_t>(yp[j])] = 1;
        }
        if (!distinct) continue;  // resampled alignment produced a clash; skip this trial
      }
      if (!check_one_prop51(pi, xs, xp, yp, fact, report.checked, report.detail))
        report.ok = false;
    }
  }
  return report;
}

std::vector<int> lfmis_reference(const ConflictGraph& g, std::span<const int> rank_order) {
  std::vector<char> included(static_cast<std::size_t>(g.size()), 0);
  for (int v : rank_order) {
    bool blocked = false;
    for (int u : g.in[static_cast<std::size_t>(v)])
      if (included[static_cast<std::size_t>(u)]) {
        blocked = true;
        break;
      }
    if (!blocked) included[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> result;
  for (int v = 0; v < g.size(); ++v)
    if (included[static_cast<std::size_t>(v)]) result.push_back(v);
  return result;
}

CheckReport check_lfmis(int graphs, int max_vertices, std::uint64_t seed) {
  CheckReport report;
  Rng rng(seed);
  for (int trial = 0; trial < graphs && report.ok; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(max_vertices - 1)));
    std::vector<int> rank_order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rank_order[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
      std::swap(rank_order[static_cast<std::size_t>(i)], rank_order[static_cast<std::size_t>(j)]);
    }
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(rank_order[static_cast<std::size_t>(i)])] = i;

    const int promille = trial % 3 == 0 ? 100 : (trial % 3 == 1 ? 300 : 600);
    ConflictGraph graph(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (static_cast<int>(rng.uniform_below(1000)) >= promille) continue;
        if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)])
          graph.add_edge(a, b);
        else
          graph.add_edge(b, a);
      }

    int depth = 0;
    const std::vector<int> peel = lfmis_peel(graph, &depth);
    const std::vector<int> ref = lfmis_reference(graph, rank_order);
    if (peel != ref) {
      std::ostringstream os;
      os << "peeling disagrees with rank-order scan on graph " << trial << " (n=" << n << ")";
      report.ok = false;
      report.detail = os.str();
      break;
    }
    if (depth < 1 || depth > n) {
      report.ok = false;
      report.detail = "implausible peel depth";
      break;
    }
    ++report.checked;
  }
  return report;
}

void BoundAccumulator::add(double value) {
  ++n_;
  sum_ += value;
  sum_sq_ += value * value;
}

McResult BoundAccumulator::assess(double bound, bool binomial_se) const {
  McResult r;
  r.trials = n_;
  r.bound = bound;
  if (n_ == 0) return r;
  const double mean = sum_ / static_cast<double>(n_);
  r.empirical = mean;
  if (binomial_se) {
    const double p = std::clamp(mean, 0.0, 1.0);
    r.se = std::sqrt(p * (1.0 - p) / static_cast<double>(n_));
  } else if (n_ >= 2) {
    const double var =
        std::max(0.0, (sum_sq_ - static_cast<double>(n_) * mean * mean) /
                          static_cast<double>(n_ - 1));
    r.se = std::sqrt(var / static_cast<double>(n_));
  }
  r.pass = mean <= bound + 4.0 * r.se;
  return r;
}

McResult monte_carlo_bound(const std::function<double(std::uint64_t)>& runner, double bound,
                           std::uint64_t trials, bool binomial_se) {
  BoundAccumulator acc;
  for (std::uint64_t t = 0; t < trials; ++t) acc.add(runner(t));
  return acc.assess(bound, binomial_se);
}

}  // namespace permlll
