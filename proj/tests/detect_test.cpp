#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "skfp/detect.hpp"
#include "skfp/index.hpp"

using namespace skfp;

namespace {

const char* kConfText = "Barack Obama invites Netanyahu for White House visit.";
const char* kNonConfText =
    "President Barack Obama has invited the Dalai Lama to visit the White House";
const char* kProbeText =
    "Barack Obama has issued an invitation to Israeli Premier Benjamin Netanyahu to "
    "visit the White House.";

std::uint64_t gram_hash(std::string_view canonical) {
  Gram g;
  g.canonical_form = std::string(canonical);
  return hash_gram(g);
}

FingerprintIndex golden_index() {
  FingerprintIndex index{EngineConfig{}};  // n=3 k=1 sorted, m=1
  index.add_document(
      make_document("confidential/obama.txt", kConfText, Label::confidential),
      Label::confidential);
  index.add_document(
      make_document("non_confidential/press.txt", kNonConfText, Label::non_confidential),
      Label::non_confidential);
  return index;
}

EngineConfig bare_unigrams() {
  EngineConfig config;
  config.prep.stemming = false;
  config.prep.stopword_removal = false;
  config.gram = {1, 0, true};
  config.m.reset();
  return config;
}

}  // namespace

TEST_CASE("the rephrased sentence scores three matches on the skip-gram index") {
  FingerprintIndex index = golden_index();
  DetectionReport report =
      score(index, make_document("probe.txt", kProbeText, Label::unknown));

  CHECK(report.doc_id == "probe.txt");
  CHECK(report.score == 3);
  REQUIRE(report.best_match.has_value());
  CHECK(*report.best_match == "confidential/obama.txt");
  CHECK(report.probe_hash_count == 25);
  CHECK(report.normalized_score == doctest::Approx(0.12));
  CHECK(report.elapsed.count() > 0.0);

  std::vector<std::uint64_t> expected = {
      gram_hash("netanyahu visit white"),
      gram_hash("hous netanyahu visit"),
      gram_hash("hous netanyahu white"),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(report.matched_hashes == expected);
  CHECK(std::is_sorted(report.matched_hashes.begin(), report.matched_hashes.end()));
}

TEST_CASE("the m-filter keeps shared press grams out of the match") {
  // The probe also contains "barack invit obama", which the confidential doc
  // has - but one non-confidential document contains it, so under m = 1 it
  // must not count toward the score.
  FingerprintIndex index = golden_index();
  DetectionReport report =
      score(index, make_document("probe.txt", kProbeText, Label::unknown));
  const std::uint64_t filtered = gram_hash("barack invit obama");
  CHECK_FALSE(std::binary_search(report.matched_hashes.begin(),
                                 report.matched_hashes.end(), filtered));

  // With the filter disabled the same probe also matches "barack invit obama"
  // and "hous visit white", scoring 5.
  EngineConfig config;
  config.m.reset();
  FingerprintIndex unfiltered{config};
  unfiltered.add_document(
      make_document("confidential/obama.txt", kConfText, Label::confidential),
      Label::confidential);
  unfiltered.add_document(
      make_document("non_confidential/press.txt", kNonConfText, Label::non_confidential),
      Label::non_confidential);
  DetectionReport unfiltered_report =
      score(unfiltered, make_document("probe.txt", kProbeText, Label::unknown));
  CHECK(unfiltered_report.score == 5);
}

TEST_CASE("full fingerprinting misses the rephrased sentence entirely") {
  FingerprintIndex index{EngineConfig::full_fingerprinting()};
  index.add_document(
      make_document("confidential/obama.txt", kConfText, Label::confidential),
      Label::confidential);
  CHECK(index.stats().record_count == 5);  // seven tokens, five contiguous trigrams

  DetectionReport report =
      score(index, make_document("probe.txt", kProbeText, Label::unknown));
  CHECK(report.score == 0);
  CHECK_FALSE(report.best_match.has_value());
  CHECK(report.matched_hashes.empty());
  CHECK(report.normalized_score == 0.0);
  CHECK(report.probe_hash_count > 0);
}

TEST_CASE("score takes the maximum over single documents, not the union") {
  FingerprintIndex index{bare_unigrams()};
  index.add_document(make_document("two.txt", "a b x", Label::confidential),
                     Label::confidential);
  index.add_document(make_document("one.txt", "c y z", Label::confidential),
                     Label::confidential);

  DetectionReport report = score(index, make_document("p", "a b c", Label::unknown));
  CHECK(report.score == 2);
  REQUIRE(report.best_match.has_value());
  CHECK(*report.best_match == "two.txt");
  CHECK(report.probe_hash_count == 3);
  CHECK(report.normalized_score == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("ties go to the lexicographically smallest document id") {
  FingerprintIndex index{bare_unigrams()};
  for (const char* id : {"zeta.txt", "beta.txt", "alpha.txt"}) {
    index.add_document(make_document(id, "same words here", Label::confidential),
                       Label::confidential);
  }
  DetectionReport report = score(index, make_document("p", "same words", Label::unknown));
  CHECK(report.score == 2);
  REQUIRE(report.best_match.has_value());
  CHECK(*report.best_match == "alpha.txt");
}

TEST_CASE("an empty probe scores zero with zero normalized score") {
  FingerprintIndex index = golden_index();
  DetectionReport report = score(index, make_document("empty.txt", "", Label::unknown));
  CHECK(report.score == 0);
  CHECK(report.probe_hash_count == 0);
  CHECK(report.normalized_score == 0.0);
  CHECK_FALSE(report.best_match.has_value());
  CHECK(report.matched_hashes.empty());
}

TEST_CASE("a probe against an index with no confidential documents scores zero") {
  EngineConfig config;
  FingerprintIndex index{config};
  index.add_document(
      make_document("non_confidential/press.txt", kNonConfText, Label::non_confidential),
      Label::non_confidential);
  DetectionReport report =
      score(index, make_document("probe.txt", kProbeText, Label::unknown));
  CHECK(report.score == 0);
  CHECK(report.probe_hash_count == 25);
  CHECK_FALSE(report.best_match.has_value());
}

TEST_CASE("classify compares strictly against the threshold") {
  DetectionReport report;
  report.score = 3;
  report.probe_hash_count = 25;
  report.normalized_score = 0.12;

  CHECK(classify(report, 2.0, false) == Verdict::leak);
  CHECK(classify(report, 2.9, false) == Verdict::leak);
  CHECK(classify(report, 3.0, false) == Verdict::clean);  // strictly greater only
  CHECK(classify(report, 4.0, false) == Verdict::clean);

  CHECK(classify(report, 0.11, true) == Verdict::leak);
  CHECK(classify(report, 0.12, true) == Verdict::clean);
  CHECK(classify(report, 0.5, true) == Verdict::clean);

  DetectionReport zero;
  CHECK(classify(zero, 0.0, false) == Verdict::clean);
  CHECK(classify(zero, -1.0, false) == Verdict::leak);
}
