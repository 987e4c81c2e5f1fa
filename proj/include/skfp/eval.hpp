#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skfp/corpus.hpp"
#include "skfp/detect.hpp"
#include "skfp/fingerprint.hpp"

namespace skfp {

/// word -> candidate synonyms. File format: one entry per line,
/// "word: synonym1, synonym2, ...".
using Thesaurus = std::map<std::string, std::vector<std::string>>;

Thesaurus load_thesaurus(const std::filesystem::path& path);
void save_thesaurus(const Thesaurus& thesaurus, const std::filesystem::path& path);

/// The document's leading tokens, at most `max_words` of them. When the
/// limit actually cuts the document, the cut moves back to the last sentence
/// boundary ('.', '!' or '?') inside the window, if there is one; a document
/// at or under the limit is returned whole.
TokenSequence extract_snippet(const Document& doc, std::size_t max_words);

/// Replaces every stride-th token (positions stride, 2*stride, ... counted
/// from 1) with a seeded-random synonym when the thesaurus has an entry for
/// it; other tokens and entry-less tokens pass through unchanged.
TokenSequence rephrase_synonyms(const TokenSequence& tokens,
                                const Thesaurus& thesaurus,
                                std::size_t stride,
                                std::uint64_t seed);

/// Inserts the snippet as its own paragraph at a seeded-random paragraph
/// boundary of the host text. An empty snippet leaves the host text
/// unchanged. The result carries `probe_id` and Label::unknown.
Document embed_snippet(const Document& host,
                       const TokenSequence& snippet,
                       std::uint64_t seed,
                       std::string probe_id);

struct IndexedDoc {
  Document doc;
  Label label = Label::unknown;
};

struct Probe {
  Document doc;
  bool is_leak = false;  // ground truth
};

struct EvalDataset {
  std::vector<IndexedDoc> index_docs;
  std::vector<Probe> probes;
  std::string provenance;  // builder, seed and parameters, for reports
};

/// Writes a dataset out for inspection: index docs under
/// index/{confidential,non_confidential}/ and probes under
/// probes/{leak,clean}/.
void write_dataset(const EvalDataset& dataset, const std::filesystem::path& root);

struct ScenarioParams {
  double index_fraction = 2.0 / 3.0;  // share of non-confidential docs indexed
  std::size_t snippet_max_words = 50;
  std::size_t synonym_stride = 3;
};

/// Known-document leak detection: index every confidential document plus
/// index_fraction of the non-confidential ones. All held-out
/// non-confidential docs are clean probes; an equal number of them (bounded
/// by the confidential count) additionally host embedded, synonym-rephrased
/// snippets of indexed confidential docs as leak probes.
EvalDataset build_scenario1(const Corpus& corpus,
                            const Thesaurus& thesaurus,
                            std::uint64_t seed,
                            const ScenarioParams& params = {});

/// Unseen-document detection: index index_fraction of both label classes;
/// held-out non-confidential docs are clean probes, and hosts among them
/// carry unrephrased snippets of held-out (never indexed) confidential docs.
EvalDataset build_scenario2(const Corpus& corpus,
                            std::uint64_t seed,
                            const ScenarioParams& params = {});

/// A corpus of topical clusters where every passage exists in an original
/// and a rephrased form, paired by file stem. Layout:
/// root/<cluster_id>/<passage>.orig.txt + <passage>.reph.txt.
struct PassagePair {
  std::string id;
  Document original;
  Document rephrased;
};
struct ClusteredCorpus {
  std::map<std::string, std::vector<PassagePair>> clusters;
  std::string source_path;
};
ClusteredCorpus load_clustered_corpus(const std::filesystem::path& root);

/// Rephrased-document detection: index the chosen cluster's originals as
/// confidential; its rephrased passages are leak probes and every other
/// cluster's rephrased passages are clean probes.
EvalDataset build_scenario3(const ClusteredCorpus& corpus,
                            const std::string& cluster_id);

/// Duplicate-detection datasets: leak probes are exact copies (full), copies
/// with one interior token substituted (near), or unrephrased snippets
/// embedded in held-out hosts (partial).
enum class DuplicateKind { full, near, partial };
EvalDataset build_duplicate_dataset(const Corpus& corpus,
                                    DuplicateKind kind,
                                    std::uint64_t seed,
                                    const ScenarioParams& params = {});

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocResult {
  std::vector<RocPoint> points;  // sorted by FPR, endpoints (0,0) and (1,1)
  double auc = 0.0;              // trapezoidal area under the points
};

/// ROC sweep over every distinct score of (score, is_leak) samples, with the
/// leak decision "score strictly greater than threshold". Throws when either
/// class is absent (AUC undefined).
RocResult roc_auc(const std::vector<std::pair<double, bool>>& scored);

struct Confusion {
  std::uint64_t tp = 0, fp = 0, fn = 0, tn = 0;
};

struct EvalOptions {
  double threshold = 0.0;
  bool normalized = false;  // sweep/classify normalized instead of raw scores
  unsigned jobs = 1;        // probe-scoring threads; 1 = single-threaded timing
};

struct EvalResult {
  RocResult roc;
  Confusion confusion;  // at options.threshold
  std::uint64_t record_count = 0;
  std::optional<double> space_efficiency;
  std::uint64_t probe_char_total = 0;
  double detect_seconds = 0.0;
  double throughput_cps = 0.0;  // probe chars per second of detection time
  EngineConfig config;
  EvalOptions options;
  std::vector<std::pair<DetectionReport, bool>> reports;  // report, is_leak
};

/// Builds a fresh index from the dataset's index docs, scores every probe,
/// and assembles ROC/AUC, the confusion at the chosen threshold, space
/// efficiency and throughput. Indexing time is excluded from throughput.
EvalResult run_eval(const EvalDataset& dataset,
                    const EngineConfig& config,
                    const EvalOptions& options = {});

}  // namespace skfp
