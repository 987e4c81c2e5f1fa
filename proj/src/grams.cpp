#include "skfp/grams.hpp"

#include <stdexcept>

namespace skfp {

namespace {

// Exact binomial via stepwise multiply/divide; every intermediate is an
// integer, so this is exact as long as the result fits in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t result = 1;
  for (std::uint64_t j = 1; j <= b; ++j) {
    result = result * (a - b + j) / j;
  }
  return result;
}

std::uint64_t count_by_enumeration(std::uint64_t length, std::uint32_t n, std::uint32_t k) {
  std::uint64_t count = 0;
  GramConfig config{n, k, false};
  for_each_gram_index(static_cast<std::size_t>(length), config,
                      [&](const std::size_t*, std::uint32_t) { ++count; });
  return count;
}

}  // namespace

std::vector<Gram> extract(const TokenSequence& tokens, const GramConfig& config) {
  if (config.n == 0) {
    throw std::invalid_argument("gram size n must be at least 1");
  }
  std::vector<Gram> grams;
  for_each_gram_index(tokens.tokens.size(), config,
                      [&](const std::size_t* idx, std::uint32_t n) {
    Gram gram;
    gram.words.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      gram.words.push_back(tokens.tokens[idx[j]]);
    }
    if (config.sorted) {
      std::sort(gram.words.begin(), gram.words.end());
    }
    std::size_t bytes = n ? n - 1 : 0;
    for (const auto& w : gram.words) bytes += w.size();
    gram.canonical_form.reserve(bytes);
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j) gram.canonical_form.push_back(' ');
      gram.canonical_form += gram.words[j];
    }
    grams.push_back(std::move(gram));
  });
  return grams;
}

std::uint64_t count_exact(std::uint64_t length, std::uint32_t n, std::uint32_t k) {
  if (n == 0) {
    throw std::invalid_argument("gram size n must be at least 1");
  }
  if (n < 2 || length <= static_cast<std::uint64_t>(k) + 2) {
    // The closed form's (n-2)! term needs n >= 2, and short sequences fall
    // outside its validity condition; enumerate instead.
    return count_by_enumeration(length, n, k);
  }
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i <= k; ++i) {
    if (length + 1 < static_cast<std::uint64_t>(n) + i) continue;  // no room
    const std::uint64_t starts = length - n - i + 1;
    total += starts * binomial(n - 2 + i, i);
  }
  return total;
}

std::uint64_t count_approx(std::uint64_t length, std::uint32_t n, std::uint32_t k) {
  if (n == 0) {
    throw std::invalid_argument("gram size n must be at least 1");
  }
  return length * binomial(static_cast<std::uint64_t>(k) + n - 1, k);
}

}  // namespace skfp
