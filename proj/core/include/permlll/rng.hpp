#pragma once

#include <cstdint>

namespace permlll {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// Deterministic 64-bit generator (xoshiro256**, seeded through splitmix64).
// All randomized operations in this library draw from this generator only,
// so identical seeds and call sequences reproduce identical results on every
// platform. Streams are split by hashing (seed, stream id) chains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = detail::splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform over {0, 1, ..., bound-1}; bound must be positive.
  // Unbiased via rejection on the top of the 64-bit range.
  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int uniform_int(int bound) { return static_cast<int>(uniform_below(static_cast<std::uint64_t>(bound))); }

  // Derived generator for an independent named stream.
  Rng split(std::uint64_t stream) const {
    std::uint64_t sm = s_[0] ^ (s_[3] + 0x6a09e667f3bcc909ULL);
    std::uint64_t h = detail::splitmix64(sm);
    sm = h ^ stream;
    return Rng(detail::splitmix64(sm));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

// Hash-chain for deriving sub-seeds from a master seed and nested stream ids.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
  std::uint64_t sm = master ^ 0x2545f4914f6cdd1dULL;
  std::uint64_t h = detail::splitmix64(sm);
  sm = h ^ a;
  h = detail::splitmix64(sm);
  sm = h ^ b;
  h = detail::splitmix64(sm);
  sm = h ^ c;
  return detail::splitmix64(sm);
}

}  // namespace permlll
