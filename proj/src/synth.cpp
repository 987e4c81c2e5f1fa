#include "skfp/synth.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "io_util.hpp"
#include "rng_util.hpp"
#include "skfp/text_prep.hpp"

namespace skfp {

namespace {

// Pronounceable nonsense vocabulary. 'q' never appears, so the near-duplicate
// edit marker "qzedited" cannot collide with a generated word.
constexpr std::string_view kConsonants = "bdfgklmnprstvz";
constexpr std::string_view kVowels = "aeiou";

constexpr std::size_t kFamilies = 7;          // confidential topic families
constexpr std::size_t kCoveredFamilies = 3;   // families 0..2 get thesaurus entries
constexpr std::size_t kTopics = 12;           // non-confidential topics
constexpr std::size_t kFillerWords = 40;
constexpr std::size_t kBoilerWords = 14;
constexpr std::size_t kFamilyWords = 18;
constexpr std::size_t kTopicWords = 25;
constexpr std::size_t kClusterWords = 18;
constexpr std::size_t kSynonymsPerWord = 2;
constexpr std::size_t kMotifsPerFamily = 3;

using detail::uniform_below;

std::vector<std::string> make_word_list(std::mt19937_64& rng, std::size_t needed) {
  std::vector<std::string> words;
  words.reserve(kConsonants.size() * kVowels.size() * kConsonants.size() * kVowels.size());
  for (const char c1 : kConsonants) {
    for (const char v1 : kVowels) {
      for (const char c2 : kConsonants) {
        for (const char v2 : kVowels) {
          words.push_back({c1, v1, c2, v2});
        }
      }
    }
  }
  if (needed > words.size()) {
    throw std::invalid_argument("synthetic vocabulary exhausted; reduce cluster count");
  }
  detail::shuffle(words, rng);
  words.resize(needed);
  // A third syllable on every third word, for variety; distinct two-syllable
  // prefixes keep the extended words distinct too.
  for (std::size_t i = 2; i < words.size(); i += 3) {
    words[i] += kConsonants[uniform_below(rng, kConsonants.size())];
    words[i] += kVowels[uniform_below(rng, kVowels.size())];
  }
  return words;
}

// Topic words sit at every even position and at the very end, fillers in
// between. Any four consecutive tokens therefore contain a topic word, and
// paragraph boundaries are flanked by a double topic word, which keeps every
// sorted 1-skip-3-gram anchored to at least one pool-specific word.
std::string make_sentence(std::mt19937_64& rng,
                          const std::vector<std::string>& topic,
                          const std::vector<std::string>& filler) {
  const std::size_t length = 8 + 2 * uniform_below(rng, 3);  // 8, 10 or 12
  std::string out;
  for (std::size_t i = 0; i < length; ++i) {
    const bool topical = (i % 2 == 0) || (i + 1 == length);
    const auto& pool = topical ? topic : filler;
    if (!out.empty()) out += ' ';
    out += pool[uniform_below(rng, pool.size())];
  }
  out += '.';
  return out;
}

std::string make_paragraph(std::mt19937_64& rng,
                           std::size_t sentences,
                           const std::vector<std::string>& topic,
                           const std::vector<std::string>& filler) {
  std::string out;
  for (std::size_t i = 0; i < sentences; ++i) {
    if (!out.empty()) out += ' ';
    out += make_sentence(rng, topic, filler);
  }
  return out;
}

std::string pad_number(std::size_t value, std::size_t width) {
  std::string out = std::to_string(value);
  while (out.size() < width) out.insert(out.begin(), '0');
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

}  // namespace

SyntheticData generate_synthetic(const SynthParams& params, std::uint64_t seed) {
  std::mt19937_64 rng(seed);

  const std::size_t covered =
      kFillerWords + kCoveredFamilies * kFamilyWords + params.clusters * kClusterWords;
  const std::size_t needed = kFillerWords + kBoilerWords + kFamilies * kFamilyWords +
                             kTopics * kTopicWords + params.clusters * kClusterWords +
                             kSynonymsPerWord * covered;
  std::vector<std::string> words = make_word_list(rng, needed);

  std::size_t cursor = 0;
  auto take = [&](std::size_t count) {
    std::vector<std::string> out(words.begin() + static_cast<std::ptrdiff_t>(cursor),
                                 words.begin() + static_cast<std::ptrdiff_t>(cursor + count));
    cursor += count;
    return out;
  };
  const std::vector<std::string> filler = take(kFillerWords);
  const std::vector<std::string> boiler = take(kBoilerWords);
  std::vector<std::vector<std::string>> families;
  for (std::size_t f = 0; f < kFamilies; ++f) families.push_back(take(kFamilyWords));
  std::vector<std::vector<std::string>> topics;
  for (std::size_t t = 0; t < kTopics; ++t) topics.push_back(take(kTopicWords));
  std::vector<std::vector<std::string>> cluster_pools;
  for (std::size_t c = 0; c < params.clusters; ++c) {
    cluster_pools.push_back(take(kClusterWords));
  }

  SyntheticData data;
  auto cover = [&](const std::vector<std::string>& pool) {
    for (const auto& word : pool) data.thesaurus[word] = take(kSynonymsPerWord);
  };
  cover(filler);
  for (std::size_t f = 0; f < kCoveredFamilies; ++f) cover(families[f]);
  for (const auto& pool : cluster_pools) cover(pool);

  // Every document of a family opens with two of its three motif sentences,
  // so any two same-family documents share at least one full sentence; the
  // boilerplate paragraph is byte-identical wherever it appears.
  std::vector<std::vector<std::string>> motifs(kFamilies);
  for (std::size_t f = 0; f < kFamilies; ++f) {
    for (std::size_t m = 0; m < kMotifsPerFamily; ++m) {
      motifs[f].push_back(make_sentence(rng, families[f], filler));
    }
  }
  const std::string boiler_paragraph = make_paragraph(rng, 3, boiler, boiler);

  data.corpus.source_path = "synthetic";
  for (std::size_t i = 0; i < params.confidential_docs; ++i) {
    const std::size_t family = i % kFamilies;
    const std::size_t dropped = uniform_below(rng, kMotifsPerFamily);
    std::string opening;
    for (std::size_t m = 0; m < kMotifsPerFamily; ++m) {
      if (m == dropped) continue;
      if (!opening.empty()) opening += ' ';
      opening += motifs[family][m];
    }
    const std::size_t body_sentences = 6 + uniform_below(rng, 5);
    std::string text = opening;
    text += "\n\n";
    text += make_paragraph(rng, body_sentences, families[family], filler);
    text += "\n\n";
    text += boiler_paragraph;
    text += '\n';
    data.corpus.documents.push_back(make_document(
        "confidential/doc_" + pad_number(i, 3) + ".txt", std::move(text),
        Label::confidential));
  }
  for (std::size_t i = 0; i < params.non_confidential_docs; ++i) {
    const std::size_t topic = i % kTopics;
    std::string text =
        make_paragraph(rng, 5 + uniform_below(rng, 4), topics[topic], filler);
    text += "\n\n";
    text += make_paragraph(rng, 4 + uniform_below(rng, 4), topics[topic], filler);
    if (i % 7 == 0) {  // the standard-content false-alarm slice, roughly 15%
      text += "\n\n";
      text += boiler_paragraph;
    }
    text += '\n';
    data.corpus.documents.push_back(make_document(
        "non_confidential/doc_" + pad_number(i, 3) + ".txt", std::move(text),
        Label::non_confidential));
  }
  std::sort(data.corpus.documents.begin(), data.corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });

  data.clustered.source_path = "synthetic";
  for (std::size_t c = 0; c < params.clusters; ++c) {
    const std::string cluster = "cluster_" + pad_number(c, 2);
    std::vector<PassagePair> pairs;
    for (std::size_t p = 0; p < params.passages_per_cluster; ++p) {
      std::string original =
          make_paragraph(rng, 5 + uniform_below(rng, 4), cluster_pools[c], filler);
      original += '\n';
      const TokenSequence rephrased =
          rephrase_synonyms(tokenize(original), data.thesaurus, 3, rng());
      PassagePair pair;
      pair.id = cluster + "/passage_" + pad_number(p, 2);
      pair.original = make_document(pair.id + ".orig", std::move(original),
                                    Label::confidential);
      pair.rephrased = make_document(pair.id + ".reph",
                                     join_tokens(rephrased.tokens) + "\n",
                                     Label::unknown);
      pairs.push_back(std::move(pair));
    }
    data.clustered.clusters.emplace(cluster, std::move(pairs));
  }
  return data;
}

void write_synthetic(const SyntheticData& data, const std::filesystem::path& root) {
  std::filesystem::create_directories(root);
  write_corpus(data.corpus, root / "corpus");
  save_thesaurus(data.thesaurus, root / "thesaurus.txt");
  for (const auto& [cluster, pairs] : data.clustered.clusters) {
    const std::filesystem::path dir = root / "clustered" / cluster;
    std::filesystem::create_directories(dir);
    for (const auto& pair : pairs) {
      const std::string stem = pair.id.substr(cluster.size() + 1);
      detail::write_text_file(dir / (stem + ".orig.txt"), pair.original.text);
      detail::write_text_file(dir / (stem + ".reph.txt"), pair.rephrased.text);
    }
  }
}

}  // namespace skfp
