#include "skfp/detect.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace skfp {

DetectionReport score(const FingerprintIndex& index, const Document& probe) {
  const auto start = std::chrono::steady_clock::now();

  // Probes are never m-filtered; the filter applies to the stored side only.
  const Fingerprint fp = fingerprint(probe, index.config());

  // Ordered map so ties resolve to the lexicographically smallest id.
  std::map<std::string_view, std::uint64_t> tally;
  for (const std::uint64_t hash : fp.hashes) {
    if (!index.hash_kept(hash)) continue;
    const auto* docs = index.postings(hash);
    if (!docs) continue;
    for (const std::string& id : *docs) ++tally[id];
  }

  DetectionReport report;
  report.doc_id = probe.id;
  report.probe_hash_count = fp.hashes.size();
  for (const auto& [id, shared] : tally) {
    if (shared > report.score) {
      report.score = shared;
      report.best_match = std::string(id);
    }
  }
  if (report.best_match) {
    const Fingerprint best = index.filtered_fingerprint(*report.best_match);
    report.matched_hashes.reserve(report.score);
    std::set_intersection(fp.hashes.begin(), fp.hashes.end(),
                          best.hashes.begin(), best.hashes.end(),
                          std::back_inserter(report.matched_hashes));
  }
  if (report.probe_hash_count > 0) {
    report.normalized_score =
        static_cast<double>(report.score) / static_cast<double>(report.probe_hash_count);
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

Verdict classify(const DetectionReport& report, double threshold, bool normalized) {
  const double value =
      normalized ? report.normalized_score : static_cast<double>(report.score);
  return value > threshold ? Verdict::leak : Verdict::clean;
}

}  // namespace skfp
