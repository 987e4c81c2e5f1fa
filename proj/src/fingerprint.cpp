#include "skfp/fingerprint.hpp"

#include <algorithm>
#include <sstream>

namespace skfp {

std::uint64_t fnv1a64(std::string_view bytes) {
  Fnv1a64 hash;
  hash.update(bytes);
  return hash.digest();
}

std::uint64_t hash_gram(const Gram& gram) {
  return fnv1a64(gram.canonical_form);
}

EngineConfig EngineConfig::full_fingerprinting(std::uint32_t n) {
  EngineConfig config;
  config.gram.n = n;
  config.gram.k = 0;
  config.gram.sorted = false;
  config.m.reset();
  return config;
}

std::string config_mismatch(const EngineConfig& a, const EngineConfig& b) {
  std::ostringstream out;
  auto flag = [](bool v) { return v ? "on" : "off"; };
  if (a.gram.n != b.gram.n) {
    out << "n differs (" << a.gram.n << " vs " << b.gram.n << ")";
  } else if (a.gram.k != b.gram.k) {
    out << "k differs (" << a.gram.k << " vs " << b.gram.k << ")";
  } else if (a.gram.sorted != b.gram.sorted) {
    out << "sorting differs (" << flag(a.gram.sorted) << " vs " << flag(b.gram.sorted) << ")";
  } else if (a.prep.stemming != b.prep.stemming) {
    out << "stemming differs (" << flag(a.prep.stemming) << " vs " << flag(b.prep.stemming) << ")";
  } else if (a.prep.stopword_removal != b.prep.stopword_removal) {
    out << "stopword removal differs (" << flag(a.prep.stopword_removal) << " vs "
        << flag(b.prep.stopword_removal) << ")";
  } else if (a.m != b.m) {
    out << "filter cutoff m differs (";
    if (a.m) out << *a.m; else out << "disabled";
    out << " vs ";
    if (b.m) out << *b.m; else out << "disabled";
    out << ")";
  } else if (stopword_digest(a.prep) != stopword_digest(b.prep)) {
    out << "stopword lists differ";
  }
  return out.str();
}

Fingerprint fingerprint_text(std::string_view text, const EngineConfig& config) {
  const TokenSequence seq = prepare(text, config.prep);
  Fingerprint fp;
  fp.char_count = seq.source_char_count;
  std::vector<std::string_view> words(config.gram.n);
  std::vector<std::uint64_t> hashes;
  for_each_gram_index(seq.tokens.size(), config.gram,
                      [&](const std::size_t* idx, std::uint32_t n) {
    for (std::uint32_t j = 0; j < n; ++j) {
      words[j] = seq.tokens[idx[j]];
    }
    if (config.gram.sorted) {
      std::sort(words.begin(), words.begin() + n);
    }
    Fnv1a64 hash;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (j) hash.update_byte(' ');
      hash.update(words[j]);
    }
    hashes.push_back(hash.digest());
  });
  fp.gram_count = hashes.size();
  std::sort(hashes.begin(), hashes.end());
  hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
  fp.hashes = std::move(hashes);
  return fp;
}

Fingerprint fingerprint(const Document& doc, const EngineConfig& config) {
  return fingerprint_text(doc.text, config);
}

}  // namespace skfp
