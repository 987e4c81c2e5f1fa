#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "skfp/text_prep.hpp"

namespace skfp {

/// Word-gram extraction parameters. A k-skip-n-gram is an n-token
/// subsequence whose span exceeds n by at most k tokens; k = 0 gives classic
/// contiguous n-grams. When `sorted` is set the words of each gram are
/// reordered alphabetically before the canonical form is built, which makes
/// matching insensitive to word order.
struct GramConfig {
  std::uint32_t n = 3;
  std::uint32_t k = 1;
  bool sorted = true;
};

struct Gram {
  std::vector<std::string> words;  // alphabetically sorted when config.sorted
  std::string canonical_form;      // words joined by single spaces
};

/// Enumerates every index subset i0 < ... < i(n-1) of a `count`-token
/// sequence with span at most n + k, in deterministic order: by start index,
/// then total skips, then skip pattern (lexicographic gap vector). `fn`
/// receives a pointer to the n indices.
template <typename Fn>
void for_each_gram_index(std::size_t count, const GramConfig& config, Fn&& fn) {
  const std::uint32_t n = config.n;
  if (n == 0 || count < n) return;
  std::vector<std::size_t> idx(n);
  const std::size_t max_start = count - n;
  for (std::size_t start = 0; start <= max_start; ++start) {
    idx[0] = start;
    if (n == 1) {
      fn(idx.data(), n);
      continue;
    }
    const std::size_t smax = std::min<std::size_t>(config.k, max_start - start);
    for (std::size_t s = 0; s <= smax; ++s) {
      // Distribute exactly s skips over the n-1 gaps, in lexicographic order.
      auto place = [&](auto&& self, std::uint32_t pos, std::size_t rem) -> void {
        if (pos == n - 1) {
          idx[pos] = idx[pos - 1] + 1 + rem;
          fn(idx.data(), n);
          return;
        }
        for (std::size_t gap = 0; gap <= rem; ++gap) {
          idx[pos] = idx[pos - 1] + 1 + gap;
          self(self, pos + 1, rem - gap);
        }
      };
      place(place, 1, s);
    }
  }
}

/// Materializes all grams of `tokens` in enumeration order. Duplicate
/// canonical forms are retained; deduplication happens at the fingerprint
/// layer.
std::vector<Gram> extract(const TokenSequence& tokens, const GramConfig& config);

/// Exact number of k-skip-n-grams in a sequence of `length` tokens. Uses the
/// closed form
///   sum_{i=0..k} (L - n - i + 1) * (n-2+i)! / ((n-2)! i!)
/// when n >= 2 and L > k + 2, and falls back to brute-force enumeration for
/// shorter sequences and for n = 1 (the closed form's (n-2)! requires n >= 2).
std::uint64_t count_exact(std::uint64_t length, std::uint32_t n, std::uint32_t k);

/// Fast upper-bound approximation L * (k+n-1)! / (k! (n-1)!); its relative
/// error vanishes as the sequence grows.
std::uint64_t count_approx(std::uint64_t length, std::uint32_t n, std::uint32_t k);

}  // namespace skfp
