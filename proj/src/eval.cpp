#include "skfp/eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "io_util.hpp"
#include "rng_util.hpp"
#include "skfp/index.hpp"
#include "skfp/text_prep.hpp"
#include "token_spans.hpp"

namespace skfp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

Corpus subset_by_label(const Corpus& corpus, Label label) {
  Corpus out;
  out.source_path = corpus.source_path;
  for (const auto& doc : corpus.documents) {
    if (doc.label == label) out.documents.push_back(doc);
  }
  return out;
}

void require_both_classes(const Corpus& conf, const Corpus& nonconf) {
  if (conf.documents.empty() || nonconf.documents.empty()) {
    throw std::runtime_error(
        "scenario requires both confidential and non-confidential documents");
  }
}

void require_nonempty_holdout(const Corpus& holdout) {
  if (holdout.documents.empty()) {
    throw std::runtime_error("scenario holdout is empty; corpus too small");
  }
}

std::string format_params(std::uint64_t seed, const ScenarioParams& params) {
  std::ostringstream out;
  out << "seed=" << seed << " index_fraction=" << params.index_fraction
      << " snippet_max_words=" << params.snippet_max_words
      << " synonym_stride=" << params.synonym_stride;
  return out.str();
}

}  // namespace

Thesaurus load_thesaurus(const std::filesystem::path& path) {
  const std::string text = detail::read_text_file(path);
  Thesaurus out;
  std::istringstream lines{text};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t colon = stripped.find(':');
    if (colon == std::string_view::npos) {
      throw std::runtime_error("malformed thesaurus line " + std::to_string(line_no) +
                               ": " + path.string());
    }
    const std::string word{trim(stripped.substr(0, colon))};
    if (word.empty()) {
      throw std::runtime_error("malformed thesaurus line " + std::to_string(line_no) +
                               ": " + path.string());
    }
    std::vector<std::string> synonyms;
    std::string_view rest = stripped.substr(colon + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item =
          trim(comma == std::string_view::npos ? rest : rest.substr(0, comma));
      if (!item.empty()) synonyms.emplace_back(item);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    out[word] = std::move(synonyms);
  }
  return out;
}

void save_thesaurus(const Thesaurus& thesaurus, const std::filesystem::path& path) {
  std::string text;
  for (const auto& [word, synonyms] : thesaurus) {
    text += word;
    text += ':';
    for (std::size_t i = 0; i < synonyms.size(); ++i) {
      text += (i == 0) ? " " : ", ";
      text += synonyms[i];
    }
    text += '\n';
  }
  detail::write_text_file(path, text);
}

TokenSequence extract_snippet(const Document& doc, std::size_t max_words) {
  if (max_words == 0) {
    throw std::invalid_argument("snippet size must be at least one word");
  }
  const auto spans = detail::tokenize_spans(doc.text);
  if (spans.empty()) {
    throw std::runtime_error("document has no tokens: " + doc.id);
  }
  std::size_t take = spans.size();
  if (spans.size() > max_words) {
    take = max_words;
    for (std::size_t i = max_words; i-- > 0;) {
      // Cut after token i when the source text up to the next token contains
      // sentence punctuation.
      const std::string_view gap(doc.text.data() + spans[i].end,
                                 spans[i + 1].begin - spans[i].end);
      if (gap.find_first_of(".!?") != std::string_view::npos) {
        take = i + 1;
        break;
      }
    }
  }
  TokenSequence out;
  out.tokens.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.tokens.push_back(spans[i].token);
  for (const auto& token : out.tokens) out.source_char_count += count_code_points(token);
  out.source_char_count += out.tokens.size() - 1;  // single-space joins
  return out;
}

TokenSequence rephrase_synonyms(const TokenSequence& tokens,
                                const Thesaurus& thesaurus,
                                std::size_t stride,
                                std::uint64_t seed) {
  if (stride == 0) {
    throw std::invalid_argument("synonym stride must be at least 1");
  }
  TokenSequence out = tokens;
  std::mt19937_64 rng(seed);
  for (std::size_t pos = stride; pos <= out.tokens.size(); pos += stride) {
    std::string& token = out.tokens[pos - 1];
    const auto it = thesaurus.find(token);
    if (it == thesaurus.end() || it->second.empty()) continue;
    token = it->second[detail::uniform_below(rng, it->second.size())];
  }
  return out;
}

Document embed_snippet(const Document& host,
                       const TokenSequence& snippet,
                       std::uint64_t seed,
                       std::string probe_id) {
  const std::string snippet_text = join_tokens(snippet.tokens);
  if (snippet_text.empty()) {
    return make_document(std::move(probe_id), host.text, Label::unknown);
  }
  std::vector<std::string_view> paragraphs;
  const std::string_view text = host.text;
  std::size_t start = 0;
  while (true) {
    const std::size_t brk = text.find("\n\n", start);
    if (brk == std::string_view::npos) {
      paragraphs.push_back(text.substr(start));
      break;
    }
    paragraphs.push_back(text.substr(start, brk - start));
    start = brk + 2;
  }
  std::mt19937_64 rng(seed);
  const std::size_t slot = detail::uniform_below(rng, paragraphs.size() + 1);
  std::string out_text;
  auto append = [&](std::string_view piece) {
    if (piece.empty()) return;
    if (!out_text.empty()) out_text += "\n\n";
    out_text += piece;
  };
  for (std::size_t i = 0; i <= paragraphs.size(); ++i) {
    if (i == slot) append(snippet_text);
    if (i < paragraphs.size()) append(paragraphs[i]);
  }
  return make_document(std::move(probe_id), std::move(out_text), Label::unknown);
}

void write_dataset(const EvalDataset& dataset, const std::filesystem::path& root) {
  const auto sanitize = [](std::string id) {
    for (char& c : id) {
      if (c == '/' || c == '\\' || c == '#') c = '_';
    }
    return id;
  };
  const auto place = [&](const std::filesystem::path& dir, const Document& doc) {
    std::filesystem::create_directories(dir);
    std::string name = sanitize(doc.id);
    if (!name.ends_with(".txt")) name += ".txt";
    detail::write_text_file(dir / name, doc.text);
  };
  for (const auto& indexed : dataset.index_docs) {
    if (indexed.label != Label::confidential && indexed.label != Label::non_confidential) {
      throw std::invalid_argument("index document has no label: " + indexed.doc.id);
    }
    place(root / "index" / to_string(indexed.label), indexed.doc);
  }
  for (const auto& probe : dataset.probes) {
    place(root / "probes" / (probe.is_leak ? "leak" : "clean"), probe.doc);
  }
  if (!dataset.provenance.empty()) {
    detail::write_text_file(root / "provenance.txt", dataset.provenance + "\n");
  }
}

EvalDataset build_scenario1(const Corpus& corpus,
                            const Thesaurus& thesaurus,
                            std::uint64_t seed,
                            const ScenarioParams& params) {
  const Corpus conf = subset_by_label(corpus, Label::confidential);
  const Corpus nonconf = subset_by_label(corpus, Label::non_confidential);
  require_both_classes(conf, nonconf);

  std::mt19937_64 seeder(seed);
  const auto [train, holdout] =
      split_corpus(nonconf, 1.0 - params.index_fraction, seeder());
  require_nonempty_holdout(holdout);

  EvalDataset dataset;
  for (const auto& doc : conf.documents) {
    dataset.index_docs.push_back({doc, Label::confidential});
  }
  for (const auto& doc : train.documents) {
    dataset.index_docs.push_back({doc, Label::non_confidential});
  }
  for (const auto& doc : holdout.documents) {
    dataset.probes.push_back({doc, false});
  }
  const std::size_t leaks = std::min(conf.documents.size(), holdout.documents.size());
  for (std::size_t i = 0; i < leaks; ++i) {
    const Document& source = conf.documents[i];
    const Document& host = holdout.documents[i];
    TokenSequence snippet = extract_snippet(source, params.snippet_max_words);
    snippet = rephrase_synonyms(snippet, thesaurus, params.synonym_stride, seeder());
    dataset.probes.push_back(
        {embed_snippet(host, snippet, seeder(), host.id + "#leak"), true});
  }
  dataset.provenance = "scenario1 " + format_params(seed, params);
  return dataset;
}

EvalDataset build_scenario2(const Corpus& corpus,
                            std::uint64_t seed,
                            const ScenarioParams& params) {
  const Corpus conf = subset_by_label(corpus, Label::confidential);
  const Corpus nonconf = subset_by_label(corpus, Label::non_confidential);
  require_both_classes(conf, nonconf);

  std::mt19937_64 seeder(seed);
  const double holdout_fraction = 1.0 - params.index_fraction;
  const auto [conf_train, conf_holdout] = split_corpus(conf, holdout_fraction, seeder());
  const auto [nonconf_train, nonconf_holdout] =
      split_corpus(nonconf, holdout_fraction, seeder());
  require_nonempty_holdout(conf_holdout);
  require_nonempty_holdout(nonconf_holdout);

  EvalDataset dataset;
  for (const auto& doc : conf_train.documents) {
    dataset.index_docs.push_back({doc, Label::confidential});
  }
  for (const auto& doc : nonconf_train.documents) {
    dataset.index_docs.push_back({doc, Label::non_confidential});
  }
  for (const auto& doc : nonconf_holdout.documents) {
    dataset.probes.push_back({doc, false});
  }
  const std::size_t leaks =
      std::min(conf_holdout.documents.size(), nonconf_holdout.documents.size());
  for (std::size_t i = 0; i < leaks; ++i) {
    const Document& source = conf_holdout.documents[i];
    const Document& host = nonconf_holdout.documents[i];
    const TokenSequence snippet = extract_snippet(source, params.snippet_max_words);
    dataset.probes.push_back(
        {embed_snippet(host, snippet, seeder(), host.id + "#leak"), true});
  }
  dataset.provenance = "scenario2 " + format_params(seed, params);
  return dataset;
}

ClusteredCorpus load_clustered_corpus(const std::filesystem::path& root) {
  if (!std::filesystem::exists(root) || !std::filesystem::is_directory(root)) {
    throw std::runtime_error("clustered corpus root not found: " + root.string());
  }
  ClusteredCorpus out;
  out.source_path = root.string();
  std::vector<std::string> unpaired;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string cluster = entry.path().filename().string();
    // passage stem -> (original text, rephrased text)
    std::map<std::string, std::pair<std::optional<std::string>, std::optional<std::string>>>
        pending;
    for (const auto& file : std::filesystem::directory_iterator(entry.path())) {
      if (!file.is_regular_file()) continue;
      const std::string name = file.path().filename().string();
      constexpr std::string_view kOrig = ".orig.txt";
      constexpr std::string_view kReph = ".reph.txt";
      if (name.size() > kOrig.size() && name.ends_with(kOrig)) {
        pending[name.substr(0, name.size() - kOrig.size())].first =
            detail::read_text_file(file.path());
      } else if (name.size() > kReph.size() && name.ends_with(kReph)) {
        pending[name.substr(0, name.size() - kReph.size())].second =
            detail::read_text_file(file.path());
      }
    }
    std::vector<PassagePair> pairs;
    for (auto& [passage, texts] : pending) {
      if (!texts.first || !texts.second) {
        unpaired.push_back(cluster + "/" + passage);
        continue;
      }
      PassagePair pair;
      pair.id = cluster + "/" + passage;
      pair.original =
          make_document(pair.id + ".orig", std::move(*texts.first), Label::confidential);
      pair.rephrased =
          make_document(pair.id + ".reph", std::move(*texts.second), Label::unknown);
      pairs.push_back(std::move(pair));
    }
    if (!pairs.empty()) out.clusters.emplace(cluster, std::move(pairs));
  }
  if (!unpaired.empty()) {
    std::sort(unpaired.begin(), unpaired.end());
    std::string joined;
    for (const auto& name : unpaired) {
      if (!joined.empty()) joined += ", ";
      joined += name;
    }
    throw std::runtime_error("clustered corpus has unpaired passages: " + joined);
  }
  if (out.clusters.empty()) {
    throw std::runtime_error("clustered corpus has no clusters: " + root.string());
  }
  return out;
}

EvalDataset build_scenario3(const ClusteredCorpus& corpus, const std::string& cluster_id) {
  const auto it = corpus.clusters.find(cluster_id);
  if (it == corpus.clusters.end()) {
    throw std::runtime_error("unknown cluster: " + cluster_id);
  }
  EvalDataset dataset;
  for (const auto& pair : it->second) {
    dataset.index_docs.push_back({pair.original, Label::confidential});
  }
  for (const auto& [cluster, pairs] : corpus.clusters) {
    for (const auto& pair : pairs) {
      dataset.probes.push_back({pair.rephrased, cluster == cluster_id});
    }
  }
  dataset.provenance = "scenario3 cluster=" + cluster_id;
  return dataset;
}

EvalDataset build_duplicate_dataset(const Corpus& corpus,
                                    DuplicateKind kind,
                                    std::uint64_t seed,
                                    const ScenarioParams& params) {
  const Corpus conf = subset_by_label(corpus, Label::confidential);
  const Corpus nonconf = subset_by_label(corpus, Label::non_confidential);
  require_both_classes(conf, nonconf);

  std::mt19937_64 seeder(seed);
  const auto [train, holdout] =
      split_corpus(nonconf, 1.0 - params.index_fraction, seeder());
  require_nonempty_holdout(holdout);

  EvalDataset dataset;
  for (const auto& doc : conf.documents) {
    dataset.index_docs.push_back({doc, Label::confidential});
  }
  for (const auto& doc : train.documents) {
    dataset.index_docs.push_back({doc, Label::non_confidential});
  }
  for (const auto& doc : holdout.documents) {
    dataset.probes.push_back({doc, false});
  }

  std::string kind_name;
  switch (kind) {
    case DuplicateKind::full: {
      kind_name = "full";
      for (const auto& doc : conf.documents) {
        dataset.probes.push_back(
            {make_document(doc.id + "#copy", doc.text, Label::unknown), true});
      }
      break;
    }
    case DuplicateKind::near: {
      kind_name = "near";
      for (const auto& doc : conf.documents) {
        std::vector<std::string> tokens = tokenize(doc.text).tokens;
        if (tokens.size() >= 3) {
          // Substitute one interior token with a word no real document uses.
          const std::size_t pos = 1 + detail::uniform_below(seeder, tokens.size() - 2);
          tokens[pos] = "qzedited";
        }
        dataset.probes.push_back(
            {make_document(doc.id + "#copy", join_tokens(tokens), Label::unknown), true});
      }
      break;
    }
    case DuplicateKind::partial: {
      kind_name = "partial";
      const std::size_t leaks =
          std::min(conf.documents.size(), holdout.documents.size());
      for (std::size_t i = 0; i < leaks; ++i) {
        const TokenSequence snippet =
            extract_snippet(conf.documents[i], params.snippet_max_words);
        const Document& host = holdout.documents[i];
        dataset.probes.push_back(
            {embed_snippet(host, snippet, seeder(), host.id + "#leak"), true});
      }
      break;
    }
  }
  dataset.provenance = "duplicates kind=" + kind_name + " " + format_params(seed, params);
  return dataset;
}

RocResult roc_auc(const std::vector<std::pair<double, bool>>& scored) {
  std::uint64_t pos = 0, neg = 0;
  for (const auto& [value, is_leak] : scored) {
    ++(is_leak ? pos : neg);
  }
  if (pos == 0 || neg == 0) {
    throw std::runtime_error("AUC undefined: probes contain a single class");
  }

  std::vector<std::pair<double, bool>> samples = scored;
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  RocResult out;
  out.points.push_back({samples.front().first, 0.0, 0.0});
  const double total_pos = static_cast<double>(pos);
  const double total_neg = static_cast<double>(neg);
  std::uint64_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < samples.size()) {
    const double value = samples[i].first;
    while (i < samples.size() && samples[i].first == value) {
      ++(samples[i].second ? tp : fp);
      ++i;
    }
    // This point belongs to the next lower threshold: "score > t" has now
    // admitted every sample down to and including this value.
    const double threshold = (i < samples.size()) ? samples[i].first : -1.0;
    out.points.push_back({threshold, static_cast<double>(fp) / total_neg,
                          static_cast<double>(tp) / total_pos});
  }
  for (std::size_t p = 1; p < out.points.size(); ++p) {
    out.auc += (out.points[p].fpr - out.points[p - 1].fpr) *
               (out.points[p].tpr + out.points[p - 1].tpr) / 2.0;
  }
  return out;
}

EvalResult run_eval(const EvalDataset& dataset,
                    const EngineConfig& config,
                    const EvalOptions& options) {
  FingerprintIndex index(config);
  for (const auto& indexed : dataset.index_docs) {
    index.add_document(indexed.doc, indexed.label);
  }

  EvalResult result;
  result.config = config;
  result.options = options;
  const IndexStats stats = index.stats();
  result.record_count = stats.record_count;
  result.space_efficiency = stats.space_efficiency;

  const std::size_t count = dataset.probes.size();
  result.reports.resize(count);
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    double total = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      result.reports[i] = {score(index, dataset.probes[i].doc), dataset.probes[i].is_leak};
      total += result.reports[i].first.elapsed.count();
    }
    result.detect_seconds = total;
  } else {
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        result.reports[i] =
            {score(index, dataset.probes[i].doc), dataset.probes[i].is_leak};
      }
    };
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& thread : threads) thread.join();
    result.detect_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }

  for (const auto& probe : dataset.probes) {
    result.probe_char_total += probe.doc.char_count;
  }
  if (result.detect_seconds > 0.0) {
    result.throughput_cps =
        static_cast<double>(result.probe_char_total) / result.detect_seconds;
  }

  std::vector<std::pair<double, bool>> samples;
  samples.reserve(count);
  for (const auto& [report, is_leak] : result.reports) {
    samples.emplace_back(
        options.normalized ? report.normalized_score : static_cast<double>(report.score),
        is_leak);
  }
  result.roc = roc_auc(samples);

  for (const auto& [report, is_leak] : result.reports) {
    const bool predicted =
        classify(report, options.threshold, options.normalized) == Verdict::leak;
    if (is_leak) {
      ++(predicted ? result.confusion.tp : result.confusion.fn);
    } else {
      ++(predicted ? result.confusion.fp : result.confusion.tn);
    }
  }
  return result;
}

}  // namespace skfp
