#pragma once

#include <cstdint>
#include <random>

namespace addeq {

// std::uniform_int_distribution is implementation-defined, which would break
// the byte-identical-output contract across standard libraries. These two
// samplers are fully specified on top of the mt19937_64 stream.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  const auto threshold =
      static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
  return (rng() >> 11) < threshold;
}

}  // namespace addeq
