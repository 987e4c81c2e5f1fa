#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "skfp/grams.hpp"
#include "skfp/text_prep.hpp"

using namespace skfp;

namespace {

TokenSequence make_tokens(std::vector<std::string> words) {
  TokenSequence seq;
  seq.tokens = std::move(words);
  return seq;
}

std::vector<std::string> canonical_forms(const std::vector<Gram>& grams) {
  std::vector<std::string> out;
  out.reserve(grams.size());
  for (const auto& g : grams) out.push_back(g.canonical_form);
  return out;
}

// Independent oracle: walk every strictly increasing index n-tuple with the
// classic combination odometer and count the ones whose span fits n + k.
std::uint64_t count_by_combinations(std::uint64_t length, std::uint32_t n, std::uint32_t k) {
  if (n == 0 || length < n) return 0;
  std::vector<std::uint64_t> idx(n);
  for (std::uint32_t j = 0; j < n; ++j) idx[j] = j;
  std::uint64_t count = 0;
  while (true) {
    if (idx[n - 1] - idx[0] + 1 <= static_cast<std::uint64_t>(n) + k) ++count;
    int j = static_cast<int>(n) - 1;
    while (j >= 0 && idx[j] == length - n + j) --j;
    if (j < 0) return count;
    ++idx[j];
    for (std::uint32_t l = j + 1; l < n; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

TEST_CASE("extract enumerates by start index, then skips, then gap pattern") {
  GramConfig config{3, 1, false};
  auto grams = extract(make_tokens({"a", "b", "c", "d"}), config);
  CHECK(canonical_forms(grams) ==
        std::vector<std::string>{"a b c", "a b d", "a c d", "b c d"});

  // n = 2, k = 2 over five tokens: all pairs within span 4, starts ascending.
  GramConfig pairs{2, 2, false};
  auto pair_grams = extract(make_tokens({"a", "b", "c", "d", "e"}), pairs);
  CHECK(canonical_forms(pair_grams) ==
        std::vector<std::string>{"a b", "a c", "a d", "b c", "b d", "b e", "c d", "c e",
                                 "d e"});
}

TEST_CASE("extract sorts words alphabetically when configured") {
  GramConfig sorted_cfg{2, 0, true};
  auto grams = extract(make_tokens({"d", "c", "b", "a"}), sorted_cfg);
  CHECK(canonical_forms(grams) == std::vector<std::string>{"c d", "b c", "a b"});
  for (const auto& g : grams) {
    CHECK(std::is_sorted(g.words.begin(), g.words.end()));
  }

  GramConfig unsorted_cfg{2, 0, false};
  auto raw = extract(make_tokens({"d", "c", "b", "a"}), unsorted_cfg);
  CHECK(canonical_forms(raw) == std::vector<std::string>{"d c", "c b", "b a"});
}

TEST_CASE("extract on the prepared example sentence yields the known gram list") {
  PrepConfig prep;  // stemming + stopword removal on
  TokenSequence seq = prepare("Barack Obama invites Netanyahu for White House visit.", prep);
  REQUIRE(seq.tokens == std::vector<std::string>{"barack", "obama", "invit", "netanyahu",
                                                 "white", "hous", "visit"});
  GramConfig config{3, 1, true};
  auto grams = extract(seq, config);
  CHECK(canonical_forms(grams) == std::vector<std::string>{
                                      "barack invit obama",
                                      "barack netanyahu obama",
                                      "barack invit netanyahu",
                                      "invit netanyahu obama",
                                      "invit obama white",
                                      "netanyahu obama white",
                                      "invit netanyahu white",
                                      "hous invit netanyahu",
                                      "hous invit white",
                                      "hous netanyahu white",
                                      "netanyahu visit white",
                                      "hous netanyahu visit",
                                      "hous visit white",
                                  });
}

TEST_CASE("extract keeps duplicate canonical forms") {
  GramConfig config{2, 0, true};
  auto grams = extract(make_tokens({"a", "b", "a"}), config);
  CHECK(canonical_forms(grams) == std::vector<std::string>{"a b", "a b"});
}

TEST_CASE("extract edge cases") {
  GramConfig config{3, 1, true};
  CHECK(extract(make_tokens({}), config).empty());
  CHECK(extract(make_tokens({"a", "b"}), config).empty());

  // n = 1 produces one gram per token; k is irrelevant.
  GramConfig unigram{1, 2, true};
  CHECK(canonical_forms(extract(make_tokens({"a", "b", "c"}), unigram)) ==
        std::vector<std::string>{"a", "b", "c"});

  CHECK_THROWS_WITH_AS(extract(make_tokens({"a"}), GramConfig{0, 1, true}),
                       "gram size n must be at least 1", std::invalid_argument);
}

TEST_CASE("count_exact matches known values") {
  CHECK(count_exact(9, 3, 0) == 7);
  CHECK(count_exact(9, 3, 1) == 19);
  CHECK(count_exact(7, 3, 1) == 13);
  CHECK(count_exact(5, 2, 2) == 9);
  CHECK(count_exact(0, 3, 1) == 0);
  CHECK(count_exact(2, 3, 5) == 0);
  CHECK(count_exact(3, 3, 1) == 1);
  CHECK(count_exact(4, 2, 5) == 6);  // short-sequence fallback: all six pairs fit
  CHECK(count_exact(5, 1, 3) == 5);  // n = 1: one gram per token
  CHECK_THROWS_WITH_AS(count_exact(5, 0, 1), "gram size n must be at least 1",
                       std::invalid_argument);
}

TEST_CASE("count_exact equals the combination-walk oracle on a grid") {
  for (std::uint64_t length = 0; length <= 12; ++length) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 0; k <= 3; ++k) {
        CAPTURE(length);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(count_exact(length, n, k) == count_by_combinations(length, n, k));
      }
    }
  }
  // A few longer sequences where the closed form, not enumeration, is active.
  CHECK(count_exact(40, 3, 2) == count_by_combinations(40, 3, 2));
  CHECK(count_exact(33, 4, 3) == count_by_combinations(33, 4, 3));
  CHECK(count_exact(25, 2, 3) == count_by_combinations(25, 2, 3));
}

TEST_CASE("count_exact agrees with extract on random-ish shapes") {
  for (std::size_t length : {0u, 1u, 3u, 4u, 7u, 9u, 12u}) {
    std::vector<std::string> words;
    for (std::size_t i = 0; i < length; ++i) words.push_back("w" + std::to_string(i));
    for (std::uint32_t n : {1u, 2u, 3u}) {
      for (std::uint32_t k : {0u, 1u, 2u}) {
        GramConfig config{n, k, true};
        CAPTURE(length);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(extract(make_tokens(words), config).size() == count_exact(length, n, k));
      }
    }
  }
}

TEST_CASE("count_approx upper-bounds the exact count and matches known values") {
  CHECK(count_approx(9, 3, 1) == 27);
  CHECK(count_approx(1000, 3, 1) == 3000);
  CHECK(count_approx(5, 1, 0) == 5);
  CHECK_THROWS_WITH_AS(count_approx(5, 0, 1), "gram size n must be at least 1",
                       std::invalid_argument);
  for (std::uint64_t length = 0; length <= 12; ++length) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 0; k <= 3; ++k) {
        CAPTURE(length);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(count_approx(length, n, k) >= count_exact(length, n, k));
      }
    }
  }
}

TEST_CASE("raising k never loses grams") {
  auto tokens = make_tokens({"e", "a", "d", "b", "c", "a", "f"});
  for (std::uint32_t k = 0; k < 3; ++k) {
    auto narrow = extract(tokens, GramConfig{3, k, true});
    auto wide = extract(tokens, GramConfig{3, k + 1, true});
    std::set<std::string> wide_set;
    for (const auto& g : wide) wide_set.insert(g.canonical_form);
    for (const auto& g : narrow) {
      CAPTURE(k);
      CAPTURE(g.canonical_form);
      CHECK(wide_set.count(g.canonical_form) == 1);
    }
  }
}
