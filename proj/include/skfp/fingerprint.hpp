#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skfp/corpus.hpp"
#include "skfp/grams.hpp"
#include "skfp/text_prep.hpp"

namespace skfp {

inline constexpr std::uint64_t kFnv64OffsetBasis = 14695981039346656037ull;
inline constexpr std::uint64_t kFnv64Prime = 1099511628211ull;

/// Incremental FNV-1a 64. Used for gram hashing, stopword digests and
/// database checksums alike.
class Fnv1a64 {
 public:
  void update_byte(unsigned char byte) {
    state_ = (state_ ^ byte) * kFnv64Prime;
  }
  void update(std::string_view bytes) {
    for (unsigned char c : bytes) update_byte(c);
  }
  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = kFnv64OffsetBasis;
};

std::uint64_t fnv1a64(std::string_view bytes);

/// Hash of a gram's canonical form (UTF-8 bytes).
std::uint64_t hash_gram(const Gram& gram);

struct EngineConfig {
  PrepConfig prep;
  GramConfig gram;
  /// Hashes observed in at least `m` distinct non-confidential documents are
  /// dropped from confidential fingerprints at read time. Disabled when
  /// empty; must be >= 1 when present.
  std::optional<std::uint32_t> m = 1;

  /// Classic full fingerprinting: contiguous unsorted n-grams, no filtering.
  static EngineConfig full_fingerprinting(std::uint32_t n = 3);
};

/// Empty string when the two configs produce identical fingerprints and
/// filtering, otherwise a description of the first mismatch.
std::string config_mismatch(const EngineConfig& a, const EngineConfig& b);

/// A document reduced to its set of gram hashes.
struct Fingerprint {
  std::vector<std::uint64_t> hashes;  // sorted ascending, deduplicated
  std::uint64_t gram_count = 0;       // grams extracted before deduplication
  std::uint64_t char_count = 0;       // code points of the source text

  bool contains(std::uint64_t hash) const {
    return std::binary_search(hashes.begin(), hashes.end(), hash);
  }
};

Fingerprint fingerprint(const Document& doc, const EngineConfig& config);
Fingerprint fingerprint_text(std::string_view text, const EngineConfig& config);

}  // namespace skfp
