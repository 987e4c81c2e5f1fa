#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace skfp::detail {

// Unbiased uniform draw from [0, bound). std::uniform_int_distribution is
// implementation-defined, so seeded outputs must not go through it; this
// rejection sampler plus the fully specified mt19937_64 engine keeps every
// seeded operation reproducible across platforms.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = uniform_below(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace skfp::detail
