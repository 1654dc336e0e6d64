#pragma once

#include <cstdint>
#include <random>

namespace uxc {

// Deterministic stream of pseudo-random words. Every randomized result in the
// library is a pure function of (input, seed, samples, primes), so reports can
// be replayed bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound); bound > 0. Rejection sampling keeps the stream
  // independent of the platform's distribution implementations.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Derived independent stream; advances this one.
  Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0xbf58476d1ce4e5b9ull)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace uxc
