#include "permlll/apps/packing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permlll/criteria.hpp"
#include "permlll/parallel.hpp"

namespace permlll::apps {

namespace {

// An edge of h2 whose image under the ground permutation is an edge of h1.
class PackingOracle final : public ViolationOracle {
 public:
  PackingOracle(const Hypergraph& h1, const Hypergraph& h2, int n) : h2_(h2), n_(n) {
    for (std::size_t e = 0; e < h1.edges.size(); ++e) {
      std::vector<int> sorted = h1.edges[e];
      std::sort(sorted.begin(), sorted.end());
      h1_lookup_.insert(std::move(sorted));
    }
    edges_at_.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < h2_.edges.size(); ++e)
      for (int v : h2_.edges[e]) edges_at_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }

  std::vector<int> sizes() const override { return {n_}; }

  void reset(const PermSet& perms) override {
    violating_.clear();
    for (std::size_t e = 0; e < h2_.edges.size(); ++e)
      if (collides(static_cast<int>(e), perms)) violating_.insert(static_cast<int>(e));
  }

  std::optional<BadEvent> find_true(const PermSet& perms) override {
    if (violating_.empty()) return std::nullopt;
    return edge_event(*violating_.begin(), perms);
  }

  std::vector<BadEvent> all_true(const PermSet& perms) override {
    std::vector<BadEvent> events;
    for (int e : violating_) events.push_back(edge_event(e, perms));
    std::sort(events.begin(), events.end(),
              [](const BadEvent& a, const BadEvent& b) { return a.id() < b.id(); });
    return events;
  }

  void apply_transposition(int, int a, int b, const PermSet& perms) override {
    for (int pos : {a, b}) {
      if (pos >= static_cast<int>(edges_at_.size())) continue;
      for (int e : edges_at_[static_cast<std::size_t>(pos)]) {
        if (collides(e, perms))
          violating_.insert(e);
        else
          violating_.erase(e);
      }
    }
  }

  std::string classify(const BadEvent&) const override { return "edge-collision"; }

 private:
  bool collides(int e, const PermSet& perms) const {
    std::vector<int> image;
    for (int v : h2_.edges[static_cast<std::size_t>(e)]) image.push_back(perms[0](v));
    std::sort(image.begin(), image.end());
    return h1_lookup_.count(image) != 0;
  }

  BadEvent edge_event(int e, const PermSet& perms) const {
    std::vector<Triple> triples;
    for (int v : h2_.edges[static_cast<std::size_t>(e)]) triples.push_back({0, v, perms[0](v)});
    return BadEvent::make(static_cast<std::int64_t>(triples_hash(triples)), std::move(triples));
  }

  const Hypergraph& h2_;
  int n_;
  std::set<std::vector<int>> h1_lookup_;
  std::vector<std::vector<int>> edges_at_;  // h2 edges touching each ground element
  std::set<int> violating_;
};

}  // namespace

PackingResult pack_hypergraphs(const Hypergraph& h1, const Hypergraph& h2, int n,
                               const AppConfig& config) {
  if (h1.vertices > n || h2.vertices > n)
    throw std::invalid_argument("ground set too small for the hypergraphs");
  if (h1.edge_size != h2.edge_size)
    throw std::invalid_argument("the hypergraphs must share one edge size");
  if (h1.edge_size < 1) throw std::invalid_argument("edges must be nonempty");

  PackingResult res;
  {
    const long long m1 = static_cast<long long>(h1.edges.size());
    const long long m2 = static_cast<long long>(h2.edges.size());
    const long long d1 = h1.max_edge_degree();
    const long long d2 = h2.max_edge_degree();
    res.criterion.satisfied = check_packing(m1, m2, d1, d2, n, h1.edge_size);
    std::ostringstream os;
    os << "(d1+1)*m2 + (d2+1)*m1 = " << (d1 + 1) * m2 + (d2 + 1) * m1 << " vs C(" << n << ","
       << h1.edge_size << ")/e: " << (res.criterion.satisfied ? "holds" : "fails");
    res.criterion.description = os.str();
  }
  if (!res.criterion.satisfied && !config.force) return res;

  PackingOracle oracle(h1, h2, n);
  PermSet final_perms;
  if (config.use_parallel) {
    ParallelResult run = run_parallel(
        oracle, ParallelConfig{config.seed, config.max_rounds, DepMode::standard});
    res.status = run.status == Status::success ? SolveStatus::success : SolveStatus::iteration_limit;
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
    res.status = run.status == Status::success ? SolveStatus::success : SolveStatus::iteration_limit;
    res.resamplings = run.stats.resamplings;
    res.stats = std::move(run.stats);
    res.log = std::move(run.log);
    final_perms = std::move(run.perms);
  }
  res.phi2.resize(static_cast<std::size_t>(h2.vertices));
  for (int v = 0; v < h2.vertices; ++v) res.phi2[static_cast<std::size_t>(v)] = final_perms[0](v);
  return res;
}

}  // namespace permlll::apps
