#include "permlll/apps/transversals.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permlll/criteria.hpp"
#include "permlll/parallel.hpp"

namespace permlll::apps {

namespace {

// Shared bookkeeping for transversal oracles: the current cell color of
// every row, rows grouped by color, and the colors at or above a
// multiplicity threshold.
class ColorTracker {
 public:
  void init(int n, int threshold) {
    threshold_ = threshold;
    color_of_row_.assign(static_cast<std::size_t>(n), -1);
    rows_by_color_.clear();
    violating_.clear();
  }

  void set_row(int row, int color) {
    const int old = color_of_row_[static_cast<std::size_t>(row)];
    if (old == color) return;
    if (old >= 0) {
      auto& rows = rows_by_color_[old];
      rows.erase(row);
      if (static_cast<int>(rows.size()) < threshold_) violating_.erase(old);
      if (rows.empty()) rows_by_color_.erase(old);
    }
    color_of_row_[static_cast<std::size_t>(row)] = color;
    auto& rows = rows_by_color_[color];
    rows.insert(row);
    if (static_cast<int>(rows.size()) >= threshold_) violating_.insert(color);
  }

  const std::set<int>& violating() const { return violating_; }
  const std::set<int>& rows_of(int color) const { return rows_by_color_.at(color); }

 private:
  int threshold_ = 2;
  std::vector<int> color_of_row_;
  std::map<int, std::set<int>> rows_by_color_;
  std::set<int> violating_;
};

BadEvent pair_event(int i1, int i2, const Permutation& pi) {
  std::vector<Triple> triples{{0, i1, pi(i1)}, {0, i2, pi(i2)}};
  return BadEvent::make(static_cast<std::int64_t>(triples_hash(triples)), std::move(triples));
}

// Two transversal cells sharing a color.
class LatinOracle final : public ViolationOracle {
 public:
  explicit LatinOracle(const ColorMatrix& m) : m_(m) {}

  std::vector<int> sizes() const override { return {m_.n()}; }

  void reset(const PermSet& perms) override {
    tracker_.init(m_.n(), 2);
    for (int i = 0; i < m_.n(); ++i) tracker_.set_row(i, m_.color(i, perms[0](i)));
  }

  std::optional<BadEvent> find_true(const PermSet& perms) override {
    if (tracker_.violating().empty()) return std::nullopt;
    const auto& rows = tracker_.rows_of(*tracker_.violating().begin());
    auto it = rows.begin();
    const int i1 = *it++;
    return pair_event(i1, *it, perms[0]);
  }

  std::vector<BadEvent> all_true(const PermSet& perms) override {
    std::vector<BadEvent> events;
    for (int c : tracker_.violating()) {
      const auto& rows = tracker_.rows_of(c);
      for (auto a = rows.begin(); a != rows.end(); ++a)
        for (auto b = std::next(a); b != rows.end(); ++b)
          events.push_back(pair_event(*a, *b, perms[0]));
    }
    std::sort(events.begin(), events.end(),
              [](const BadEvent& a, const BadEvent& b) { return a.id() < b.id(); });
    return events;
  }

  void apply_transposition(int, int a, int b, const PermSet& perms) override {
    tracker_.set_row(a, m_.color(a, perms[0](a)));
    tracker_.set_row(b, m_.color(b, perms[0](b)));
  }

  std::string classify(const BadEvent&) const override { return "pair"; }

 private:
  const ColorMatrix& m_;
  ColorTracker tracker_;
};

// A color reaching s transversal cells; resampling touches r of them.
class MultiplicityOracle final : public ViolationOracle {
 public:
  MultiplicityOracle(const ColorMatrix& m, int s, int r) : m_(m), s_(s), r_(r) {}

  std::vector<int> sizes() const override { return {m_.n()}; }

  void reset(const PermSet& perms) override {
    tracker_.init(m_.n(), s_);
    for (int i = 0; i < m_.n(); ++i) tracker_.set_row(i, m_.color(i, perms[0](i)));
  }

  std::optional<BadEvent> find_true(const PermSet& perms) override {
    if (tracker_.violating().empty()) return std::nullopt;
    const auto& rows = tracker_.rows_of(*tracker_.violating().begin());
    return subset_event(std::vector<int>(rows.begin(), rows.end()), perms, nullptr);
  }

  // One canonical event per violating color (the full subset family would
  // be combinatorial).
  std::vector<BadEvent> all_true(const PermSet& perms) override {
    std::vector<BadEvent> events;
    for (int c : tracker_.violating()) {
      const auto& rows = tracker_.rows_of(c);
      events.push_back(subset_event(std::vector<int>(rows.begin(), rows.end()), perms, nullptr));
    }
    std::sort(events.begin(), events.end(),
              [](const BadEvent& a, const BadEvent& b) { return a.id() < b.id(); });
    return events;
  }

  // Smallest violating color (or a uniform one under the random rule), then
  // a uniformly random r-subset of its cells.
  std::optional<BadEvent> select_event(const PermSet& perms, Rng& rng, SelectionRule rule,
                                       std::span<const std::int64_t>) override {
    if (tracker_.violating().empty()) return std::nullopt;
    int color = *tracker_.violating().begin();
    if (rule == SelectionRule::uniform_random) {
      auto it = tracker_.violating().begin();
      std::advance(it, static_cast<long>(rng.uniform_below(tracker_.violating().size())));
      color = *it;
    }
    const auto& rows = tracker_.rows_of(color);
    return subset_event(std::vector<int>(rows.begin(), rows.end()), perms, &rng);
  }

  void apply_transposition(int, int a, int b, const PermSet& perms) override {
    tracker_.set_row(a, m_.color(a, perms[0](a)));
    tracker_.set_row(b, m_.color(b, perms[0](b)));
  }

  std::string classify(const BadEvent&) const override { return "overfull-color"; }

 private:
  // r_ rows out of the violating color's cells: the first ones when rng is
  // null, else a uniform subset (in sorted order either way).
  BadEvent subset_event(std::vector<int> rows, const PermSet& perms, Rng* rng) const {
    if (rng != nullptr) {
      for (int i = 0; i < r_; ++i) {
        const int j =
            i + static_cast<int>(rng->uniform_below(static_cast<std::uint64_t>(rows.size() - i)));
        std::swap(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
      }
    }
    rows.resize(static_cast<std::size_t>(r_));
    std::sort(rows.begin(), rows.end());
    std::vector<Triple> triples;
    for (int i : rows) triples.push_back({0, i, perms[0](i)});
    return BadEvent::make(static_cast<std::int64_t>(triples_hash(triples)), std::move(triples));
  }

  const ColorMatrix& m_;
  int s_;
  int r_;
  ColorTracker tracker_;
};

// Two equal-colored cells of pi = sigma^-1 tau sigma, expressed as
// requirements on sigma (the resampled permutation).
class ConjugateOracle final : public ViolationOracle {
 public:
  ConjugateOracle(const ColorMatrix& m, std::vector<int> tau) : m_(m), tau_(std::move(tau)) {
    tau_inv_.resize(tau_.size());
    for (std::size_t i = 0; i < tau_.size(); ++i)
      tau_inv_[static_cast<std::size_t>(tau_[i])] = static_cast<int>(i);
  }

  std::vector<int> sizes() const override { return {m_.n()}; }

  void reset(const PermSet& perms) override {
    const int n = m_.n();
    tracker_.init(n, 2);
    pi_row_.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) refresh_row(x, perms[0]);
  }

  std::optional<BadEvent> find_true(const PermSet& perms) override {
    if (tracker_.violating().empty()) return std::nullopt;
    const auto& rows = tracker_.rows_of(*tracker_.violating().begin());
    auto it = rows.begin();
    const int x1 = *it++;
    return cell_pair_event(x1, *it, perms[0]);
  }

  std::vector<BadEvent> all_true(const PermSet& perms) override {
    std::vector<BadEvent> events;
    for (int c : tracker_.violating()) {
      const auto& rows = tracker_.rows_of(c);
      for (auto a = rows.begin(); a != rows.end(); ++a)
        for (auto b = std::next(a); b != rows.end(); ++b)
          events.push_back(cell_pair_event(*a, *b, perms[0]));
    }
    std::sort(events.begin(), events.end(),
              [](const BadEvent& a, const BadEvent& b) { return a.id() < b.id(); });
    return events;
  }

  void apply_transposition(int, int a, int b, const PermSet& perms) override {
    const Permutation& sigma = perms[0];
    std::set<int> affected{a, b, sigma.preimage(tau_inv_[static_cast<std::size_t>(sigma(a))]),
                           sigma.preimage(tau_inv_[static_cast<std::size_t>(sigma(b))])};
    for (int x : affected) refresh_row(x, sigma);
  }

  std::string classify(const BadEvent& e) const override {
    return e.size() == 3 ? "three-point" : "four-point";
  }

  std::vector<int> pi_rows() const { return pi_row_; }

 private:
  void refresh_row(int x, const Permutation& sigma) {
    const int y = sigma.preimage(tau_[static_cast<std::size_t>(sigma(x))]);
    pi_row_[static_cast<std::size_t>(x)] = y;
    tracker_.set_row(x, m_.color(x, y));
  }

  // The sigma-requirements behind cells (x1, pi(x1)) and (x2, pi(x2)):
  // tau(sigma(x)) = sigma(pi(x)), so the event pins sigma at the distinct
  // points among x1, pi(x1), x2, pi(x2) (three of them when the cells
  // chain, four otherwise).
  BadEvent cell_pair_event(int x1, int x2, const Permutation& sigma) const {
    std::set<int> domains{x1, pi_row_[static_cast<std::size_t>(x1)], x2,
                          pi_row_[static_cast<std::size_t>(x2)]};
    std::vector<Triple> triples;
    for (int d : domains) triples.push_back({0, d, sigma(d)});
    return BadEvent::make(static_cast<std::int64_t>(triples_hash(triples)), std::move(triples));
  }

  const ColorMatrix& m_;
  std::vector<int> tau_;
  std::vector<int> tau_inv_;
  std::vector<int> pi_row_;
  ColorTracker tracker_;
};

SolveStatus map_status(Status s) {
  return s == Status::success ? SolveStatus::success : SolveStatus::iteration_limit;
}

}  // namespace

TransversalResult solve_latin(const ColorMatrix& m, const AppConfig& config) {
  const int n = m.n();
  const int delta = m.max_multiplicity();
  TransversalResult res;
  if (n == 1) {
    res.criterion.satisfied = true;
    res.criterion.description = "single cell, trivially satisfiable";
  } else {
    const double P = 1.0 / (static_cast<double>(n) * (n - 1));
    const double c = static_cast<double>(n) * (delta - 1);
    const auto alpha = solve_alpha(P, c, 4);
    res.criterion.satisfied = alpha.has_value();
    res.criterion.alpha = alpha.value_or(-1.0);
    std::ostringstream os;
    os << "multiplicity " << delta << " on n=" << n << ": alpha = P(1+c*alpha)^4 with P=1/"
       << static_cast<long long>(n) * (n - 1) << ", c=" << static_cast<long long>(c)
       << (alpha ? " has root " : " has no root") << (alpha ? std::to_string(*alpha) : "");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  LatinOracle oracle(m);
  if (config.use_parallel) {
    ParallelResult run = run_parallel(
        oracle, ParallelConfig{config.seed, config.max_rounds, DepMode::standard});
    res.status = map_status(run.status);
    res.columns = run.perms[0].forward();
    res.resamplings = run.stats.resamplings;
    res.rounds = run.stats.rounds;
  } else {
    EngineConfig ec;
    ec.selection = config.selection;
    ec.max_resamplings = config.max_resamplings;
    ec.seed = config.seed;
    ec.record_log = config.record_log;
    RunResult run = permlll::run(oracle, ec);
    res.status = map_status(run.status);
    res.columns = run.perms[0].forward();
    res.resamplings = run.stats.resamplings;
    res.stats = std::move(run.stats);
    res.log = std::move(run.log);
  }
  return res;
}

TransversalResult solve_multiplicity(const ColorMatrix& m, int s, const AppConfig& config) {
  if (s < 2) throw std::invalid_argument("the multiplicity threshold must be at least 2");
  if (config.use_parallel)
    throw std::invalid_argument("the round-based variant does not support this solver");
  const int n = m.n();
  const int delta = m.max_multiplicity();
  const int r = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(s))));

  TransversalResult res;
  res.criterion.satisfied = check_szabo(n, s, r, delta);
  {
    std::ostringstream os;
    os << "n=" << n << " s=" << s << " r=" << r << " multiplicity " << delta
       << ": bounded-multiplicity condition "
       << (res.criterion.satisfied ? "holds" : "fails");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  MultiplicityOracle oracle(m, s, r);
  EngineConfig ec;
  ec.selection = config.selection;
  ec.max_resamplings = config.max_resamplings;
  ec.seed = config.seed;
  ec.record_log = config.record_log;
  RunResult run = permlll::run(oracle, ec);
  res.status = map_status(run.status);
  res.columns = run.perms[0].forward();
  res.resamplings = run.stats.resamplings;
  res.stats = std::move(run.stats);
  res.log = std::move(run.log);
  return res;
}

RainbowResult solve_rainbow_conjugate(const ColorMatrix& m, const std::vector<int>& tau,
                                      const AppConfig& config) {
  const int n = m.n();
  if (static_cast<int>(tau.size()) != n)
    throw std::invalid_argument("tau must have one image per matrix row");
  Permutation tau_perm = Permutation::from_forward(tau);  // validates
  for (int i = 0; i < n; ++i) {
    if (tau_perm(i) == i) throw std::invalid_argument("tau must not have fixed points");
    if (tau_perm(tau_perm(i)) == i) throw std::invalid_argument("tau must not have 2-cycles");
  }

  const int delta = m.max_multiplicity();
  RainbowResult res;
  res.criterion.satisfied = 1000LL * delta <= 27LL * n;
  {
    std::ostringstream os;
    os << "multiplicity " << delta << " vs limit 27n/1000 = " << 27.0 * n / 1000.0 << ": "
       << (res.criterion.satisfied ? "holds" : "fails");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  ConjugateOracle oracle(m, tau);
  PermSet final_perms;
  if (config.use_parallel) {
    ParallelResult run = run_parallel(
        oracle, ParallelConfig{config.seed, config.max_rounds, DepMode::standard});
    res.status = map_status(run.status);
    res.resamplings = run.stats.resamplings;
    res.rounds = run.stats.rounds;
    final_perms = std::move(run.perms);
  } else {
    EngineConfig ec;
    ec.selection = config.selection;
    ec.max_resamplings = config.max_resamplings;
    ec.seed = config.seed;
    ec.record_log = config.record_log;
    RunResult run = permlll::run(oracle, ec);
    res.status = map_status(run.status);
    res.resamplings = run.stats.resamplings;
    res.stats = std::move(run.stats);
    final_perms = std::move(run.perms);
  }
  const Permutation& sigma = final_perms[0];
  res.sigma = sigma.forward();
  res.pi.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    res.pi[static_cast<std::size_t>(i)] = sigma.preimage(tau_perm(sigma(i)));
  return res;
}

}  // namespace permlll::apps
