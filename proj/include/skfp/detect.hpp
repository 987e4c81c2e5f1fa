#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skfp/index.hpp"

namespace skfp {

struct DetectionReport {
  std::string doc_id;
  /// Maximum number of distinct hashes shared with any single confidential
  /// document's filtered fingerprint.
  std::uint64_t score = 0;
  /// Best-matching confidential doc id; empty when the score is 0. Ties go
  /// to the lexicographically smallest id.
  std::optional<std::string> best_match;
  /// The shared hashes with the best match, sorted ascending.
  std::vector<std::uint64_t> matched_hashes;
  /// Distinct hashes in the probe fingerprint (the m-filter is never applied
  /// to probes).
  std::uint64_t probe_hash_count = 0;
  /// score / probe_hash_count, 0 for an empty probe.
  double normalized_score = 0.0;
  std::chrono::duration<double> elapsed{0.0};
};

/// Fingerprints `probe` under the index's frozen config and scores it
/// against every confidential document via the inverted index, consulting
/// only hashes that survive the m-filter.
DetectionReport score(const FingerprintIndex& index, const Document& probe);

enum class Verdict { clean, leak };

/// Leak iff the (raw or normalized) score strictly exceeds `threshold`.
Verdict classify(const DetectionReport& report, double threshold, bool normalized);

}  // namespace skfp
