#include "permlll/events.hpp"

#include <algorithm>
#include <stdexcept>

namespace permlll {

BadEvent BadEvent::make(std::int64_t id, std::vector<Triple> triples, std::span<const int> sizes) {
  if (triples.empty()) throw std::invalid_argument("BadEvent: empty triple list");
  std::sort(triples.begin(), triples.end());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (t.k < 0 || t.x < 0 || t.y < 0) throw std::invalid_argument("BadEvent: negative coordinate");
    if (!sizes.empty()) {
      if (t.k >= static_cast<int>(sizes.size()))
        throw std::invalid_argument("BadEvent: permutation index out of range");
      if (t.x >= sizes[t.k] || t.y >= sizes[t.k])
        throw std::invalid_argument("BadEvent: coordinate out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Triple& u = triples[j];
      if (u.k == t.k && (u.x == t.x || u.y == t.y))
        throw std::invalid_argument(
            "BadEvent: two triples in one permutation share a domain point or range value");
    }
  }
  BadEvent b;
  b.id_ = id;
  b.triples_ = std::move(triples);
  return b;
}

std::uint64_t triples_hash(std::span<const Triple> triples) {
  std::uint64_t state = 0x7f4a7c15ULL + triples.size();
  auto mix = [&state](std::uint64_t v) {
    state ^= v + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
    state = detail::splitmix64(state);
  };
  for (const Triple& t : triples) {
    mix(static_cast<std::uint64_t>(t.k));
    mix(static_cast<std::uint64_t>(t.x));
    mix(static_cast<std::uint64_t>(t.y));
  }
  return state;
}

Rational prob_omega(std::span<const Triple> triples, std::span<const int> sizes) {
  // r_k = number of triples in permutation k; the probability is
  // prod_k 1 / (n_k (n_k - 1) ... (n_k - r_k + 1)).
  std::vector<int> r(sizes.size(), 0);
  for (const Triple& t : triples) ++r[t.k];
  BigInt denom = 1;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (r[k] > sizes[k]) throw std::invalid_argument("prob_omega: more triples than positions");
    denom *= falling_factorial(static_cast<unsigned>(sizes[k]), static_cast<unsigned>(r[k]));
  }
  return Rational(1, denom);
}

Rational prob_omega(const BadEvent& b, std::span<const int> sizes) {
  return prob_omega(std::span<const Triple>(b.triples()), sizes);
}

bool is_true(const BadEvent& b, const PermSet& perms) {
  for (const Triple& t : b.triples())
    if (perms[t.k](t.x) != t.y) return false;
  return true;
}

bool depends(std::span<const Triple> a, std::int64_t id_a, std::span<const Triple> b,
             std::int64_t id_b, DepMode mode) {
  if (mode == DepMode::lopsided && id_a == id_b) return true;
  for (const Triple& s : a) {
    for (const Triple& t : b) {
      if (s.k != t.k) continue;
      if (mode == DepMode::standard) {
        if (s.x == t.x || s.y == t.y) return true;
      } else {
        // Lopsided: an identical shared triple does not create dependency.
        if ((s.x == t.x) != (s.y == t.y)) return true;
      }
    }
  }
  return false;
}

bool depends(const BadEvent& a, const BadEvent& b, DepMode mode) {
  return depends(std::span<const Triple>(a.triples()), a.id(),
                 std::span<const Triple>(b.triples()), b.id(), mode);
}

EventIndex::EventIndex(std::vector<int> sizes, std::vector<BadEvent> events)
    : sizes_(std::move(sizes)), events_(std::move(events)) {
  for (int n : sizes_)
    if (n <= 0) throw std::invalid_argument("EventIndex: permutation sizes must be positive");
  for (std::size_t i = 0; i < events_.size(); ++i) {
    // Revalidate against the sizes (events may come from elsewhere).
    BadEvent::make(events_[i].id(), events_[i].triples(), sizes_);
    for (const Triple& t : events_[i].triples()) {
      by_domain_[{t.k, t.x}].push_back(static_cast<int>(i));
      by_range_[{t.k, t.y}].push_back(static_cast<int>(i));
    }
  }
}

std::span<const int> EventIndex::domain_slice(int k, int x) const {
  const auto it = by_domain_.find({k, x});
  if (it == by_domain_.end()) return {};
  return it->second;
}

std::span<const int> EventIndex::range_slice(int k, int y) const {
  const auto it = by_range_.find({k, y});
  if (it == by_range_.end()) return {};
  return it->second;
}

std::vector<int> EventIndex::neighborhood(const BadEvent& b, DepMode mode) const {
  std::vector<int> candidates;
  for (const Triple& t : b.triples()) {
    const auto dom = domain_slice(t.k, t.x);
    candidates.insert(candidates.end(), dom.begin(), dom.end());
    const auto rng = range_slice(t.k, t.y);
    candidates.insert(candidates.end(), rng.begin(), rng.end());
  }
  // In lopsided mode the event itself is a neighbor by the id rule even if
  // every shared slice is an identical triple.
  if (mode == DepMode::lopsided) {
    for (std::size_t i = 0; i < events_.size(); ++i)
      if (events_[i].id() == b.id()) candidates.push_back(static_cast<int>(i));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<int> result;
  for (int idx : candidates)
    if (depends(b, events_[idx], mode)) result.push_back(idx);
  return result;
}

std::optional<BadEvent> ViolationOracle::select_event(const PermSet& perms, Rng& rng,
                                                      SelectionRule rule,
                                                      std::span<const std::int64_t> priority) {
  switch (rule) {
    case SelectionRule::first_true:
      return find_true(perms);
    case SelectionRule::uniform_random: {
      std::vector<BadEvent> open = all_true(perms);
      if (open.empty()) return std::nullopt;
      return open[rng.uniform_below(open.size())];
    }
    case SelectionRule::priority_order: {
      std::vector<BadEvent> open = all_true(perms);
      if (open.empty()) return std::nullopt;
      auto rank = [&priority](std::int64_t id) -> std::size_t {
        for (std::size_t i = 0; i < priority.size(); ++i)
          if (priority[i] == id) return i;
        return priority.size();
      };
      std::size_t best = 0;
      for (std::size_t i = 1; i < open.size(); ++i) {
        const auto ri = rank(open[i].id());
        const auto rb = rank(open[best].id());
        if (ri < rb || (ri == rb && open[i].id() < open[best].id())) best = i;
      }
      return open[best];
    }
  }
  return std::nullopt;
}

ExplicitOracle::ExplicitOracle(EventIndex index) : index_(std::move(index)) {}

void ExplicitOracle::reset(const PermSet& perms) {
  true_.clear();
  for (std::size_t i = 0; i < index_.count(); ++i)
    if (is_true(index_.at(i), perms)) true_.insert(static_cast<int>(i));
}

std::optional<BadEvent> ExplicitOracle::find_true(const PermSet&) {
  if (true_.empty()) return std::nullopt;
  return index_.at(*true_.begin());
}

std::vector<BadEvent> ExplicitOracle::all_true(const PermSet&) {
  std::vector<BadEvent> out;
  out.reserve(true_.size());
  for (int i : true_) out.push_back(index_.at(i));
  return out;
}

void ExplicitOracle::refresh(int idx, const PermSet& perms) {
  if (is_true(index_.at(idx), perms))
    true_.insert(idx);
  else
    true_.erase(idx);
}

void ExplicitOracle::apply_transposition(int k, int a, int b, const PermSet& perms) {
  if (a == b) return;
  // Only events touching the two changed domain slices or the two (swapped)
  // range values can change truth.
  const int ya = perms[k](a);
  const int yb = perms[k](b);
  for (int idx : index_.domain_slice(k, a)) refresh(idx, perms);
  for (int idx : index_.domain_slice(k, b)) refresh(idx, perms);
  for (int idx : index_.range_slice(k, ya)) refresh(idx, perms);
  for (int idx : index_.range_slice(k, yb)) refresh(idx, perms);
}

}  // namespace permlll
