#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "permlll/permutation.hpp"
#include "permlll/rational.hpp"
#include "permlll/rng.hpp"

namespace permlll {

using PermSet = std::vector<Permutation>;

// One atomic requirement pi_k(x) = y, all indices 0-based.
struct Triple {
  int k = 0;
  int x = 0;
  int y = 0;
  auto operator<=>(const Triple&) const = default;
};

// A bad event: a conjunction of triples. Within one permutation no two
// triples may share a domain point or a range value (the conjunction would
// be contradictory), and the triple list is kept canonically sorted.
class BadEvent {
 public:
  BadEvent() = default;

  // Validates, sorts, and returns the event; throws on an empty or
  // contradictory triple list or on out-of-range coordinates (checked
  // against sizes when provided).
  static BadEvent make(std::int64_t id, std::vector<Triple> triples,
                       std::span<const int> sizes = {});

  std::int64_t id() const { return id_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::size_t size() const { return triples_.size(); }

  friend bool operator==(const BadEvent& a, const BadEvent& b) {
    return a.id_ == b.id_ && a.triples_ == b.triples_;
  }

 private:
  std::int64_t id_ = -1;
  std::vector<Triple> triples_;
};

// Stable 64-bit content hash of a sorted triple list; used as the synthetic
// id for solver-generated events so that equal conjunctions get equal ids.
std::uint64_t triples_hash(std::span<const Triple> triples);

// Probability that all triples hold under independent uniformly random
// permutations of the given sizes: the product over permutations of
// (n_k - r_k)! / n_k!, computed as falling-factorial reciprocals.
Rational prob_omega(std::span<const Triple> triples, std::span<const int> sizes);
Rational prob_omega(const BadEvent& b, std::span<const int> sizes);

bool is_true(const BadEvent& b, const PermSet& perms);

enum class DepMode {
  standard,  // share a domain slice (k,x,*) or a range slice (k,*,y)
  lopsided,  // same event id, or shared slice with a differing other coordinate
};

bool depends(std::span<const Triple> a, std::int64_t id_a, std::span<const Triple> b,
             std::int64_t id_b, DepMode mode);
bool depends(const BadEvent& a, const BadEvent& b, DepMode mode);

// An event list with slice indexes (k,x) -> events and (k,y) -> events for
// neighborhood queries and incremental truth maintenance.
class EventIndex {
 public:
  EventIndex() = default;
  EventIndex(std::vector<int> sizes, std::vector<BadEvent> events);

  const std::vector<int>& sizes() const { return sizes_; }
  const std::vector<BadEvent>& events() const { return events_; }
  const BadEvent& at(std::size_t i) const { return events_[i]; }
  std::size_t count() const { return events_.size(); }

  // Indices (into events()) of all events touching the slice.
  std::span<const int> domain_slice(int k, int x) const;
  std::span<const int> range_slice(int k, int y) const;

  // Indices of events dependent on b under the mode, sorted ascending.
  // b itself is included when it is dependent on itself (always in standard
  // mode; via the id rule in lopsided mode). b need not be a member.
  std::vector<int> neighborhood(const BadEvent& b, DepMode mode) const;

 private:
  std::vector<int> sizes_;
  std::vector<BadEvent> events_;
  std::map<std::pair<int, int>, std::vector<int>> by_domain_;
  std::map<std::pair<int, int>, std::vector<int>> by_range_;
};

enum class SelectionRule { first_true, uniform_random, priority_order };

// Detects currently-true bad events against a set of permutations. The
// engine notifies the oracle after every entry exchange so implementations
// can maintain truth incrementally instead of rescanning the event space.
class ViolationOracle {
 public:
  virtual ~ViolationOracle() = default;

  virtual std::vector<int> sizes() const = 0;

  // Rebuild internal state from scratch for the given permutations.
  virtual void reset(const PermSet& perms) = 0;

  // The canonical (lowest) currently-true event, or nullopt when none is.
  virtual std::optional<BadEvent> find_true(const PermSet& perms) = 0;

  // Every currently-true event exactly once, sorted ascending by id.
  virtual std::vector<BadEvent> all_true(const PermSet& perms) = 0;

  // Called after entries a and b of permutation k were exchanged.
  virtual void apply_transposition(int k, int a, int b, const PermSet& perms) = 0;

  // Selection step for the sequential engine. The default implements the
  // three standard rules; solvers with randomized partial resampling
  // override it (rng draws are part of the reproducibility contract).
  virtual std::optional<BadEvent> select_event(const PermSet& perms, Rng& rng, SelectionRule rule,
                                               std::span<const std::int64_t> priority);

  // Short label used for per-class resampling statistics.
  virtual std::string classify(const BadEvent&) const { return "event"; }
};

// Oracle over an explicit event list; maintains the set of true events
// incrementally through slice lookups.
class ExplicitOracle final : public ViolationOracle {
 public:
  explicit ExplicitOracle(EventIndex index);

  std::vector<int> sizes() const override { return index_.sizes(); }
  void reset(const PermSet& perms) override;
  std::optional<BadEvent> find_true(const PermSet& perms) override;
  std::vector<BadEvent> all_true(const PermSet& perms) override;
  void apply_transposition(int k, int a, int b, const PermSet& perms) override;

  const EventIndex& index() const { return index_; }
  const std::set<int>& true_set() const { return true_; }

 private:
  void refresh(int idx, const PermSet& perms);
  EventIndex index_;
  std::set<int> true_;  // indices into index_.events(), ordered = id order
};

}  // namespace permlll
