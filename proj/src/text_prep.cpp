#include "skfp/text_prep.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "skfp/fingerprint.hpp"
#include "token_spans.hpp"

namespace skfp {

namespace {

//============================ UTF-8 machinery ===============================

struct Decoded {
  char32_t cp = 0;
  unsigned length = 1;  // bytes consumed
  bool valid = false;
};

// Strict decoder: rejects overlong forms, surrogates and values > U+10FFFF.
Decoded decode_utf8(std::string_view bytes, std::size_t pos) {
  const auto b = [&](std::size_t i) -> unsigned {
    return static_cast<unsigned char>(bytes[pos + i]);
  };
  const std::size_t left = bytes.size() - pos;
  const unsigned b0 = b(0);
  Decoded out;
  if (b0 < 0x80) {
    return {b0, 1, true};
  }
  auto cont = [&](std::size_t i) { return i < left && (b(i) & 0xC0u) == 0x80u; };
  if ((b0 & 0xE0u) == 0xC0u) {
    if (!cont(1)) return out;
    const char32_t cp = ((b0 & 0x1Fu) << 6) | (b(1) & 0x3Fu);
    if (cp < 0x80) return out;  // overlong
    return {cp, 2, true};
  }
  if ((b0 & 0xF0u) == 0xE0u) {
    if (!cont(1) || !cont(2)) return out;
    const char32_t cp = ((b0 & 0x0Fu) << 12) | ((b(1) & 0x3Fu) << 6) | (b(2) & 0x3Fu);
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return out;
    return {cp, 3, true};
  }
  if ((b0 & 0xF8u) == 0xF0u) {
    if (!cont(1) || !cont(2) || !cont(3)) return out;
    const char32_t cp = ((b0 & 0x07u) << 18) | ((b(1) & 0x3Fu) << 12) |
                        ((b(2) & 0x3Fu) << 6) | (b(3) & 0x3Fu);
    if (cp < 0x10000 || cp > 0x10FFFF) return out;
    return {cp, 4, true};
  }
  return out;
}

void encode_utf8(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

//===================== character classification =============================

struct Range {
  char32_t lo, hi;
};

// Letter ranges of the major scripts; coarse on purpose (a handful of
// in-block punctuation marks slip through for Greek) but fixed, so the
// tokenizer behaves identically everywhere.
constexpr std::array<Range, 29> kLetterRanges{{
    {0x41, 0x5A},     {0x61, 0x7A},     {0xAA, 0xAA},     {0xB5, 0xB5},
    {0xBA, 0xBA},     {0xC0, 0xD6},     {0xD8, 0xF6},     {0xF8, 0x2AF},
    {0x370, 0x373},   {0x376, 0x377},   {0x37B, 0x37D},   {0x37F, 0x37F},
    {0x386, 0x386},   {0x388, 0x3FF},   {0x400, 0x481},   {0x48A, 0x52F},
    {0x531, 0x556},   {0x561, 0x587},   {0x5D0, 0x5EA},   {0x5F0, 0x5F2},
    {0x620, 0x64A},   {0x671, 0x6D3},   {0x904, 0x939},   {0x3041, 0x3096},
    {0x30A1, 0x30FA}, {0x4E00, 0x9FFF}, {0xAC00, 0xD7A3}, {0xFF21, 0xFF3A},
    {0xFF41, 0xFF5A},
}};

constexpr std::array<Range, 5> kDigitRanges{{
    {0x30, 0x39},
    {0x660, 0x669},
    {0x6F0, 0x6F9},
    {0x966, 0x96F},
    {0xFF10, 0xFF19},
}};

template <std::size_t N>
bool in_ranges(const std::array<Range, N>& ranges, char32_t cp) {
  auto it = std::upper_bound(ranges.begin(), ranges.end(), cp,
                             [](char32_t v, const Range& r) { return v < r.lo; });
  return it != ranges.begin() && cp <= std::prev(it)->hi;
}

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }
bool is_digit(char32_t cp) { return in_ranges(kDigitRanges, cp); }
bool is_word_char(char32_t cp) { return is_letter(cp) || is_digit(cp); }

// Simple one-to-one case folding: ASCII, Latin-1, Latin Extended-A, Greek,
// Cyrillic, Armenian and fullwidth forms. Unmapped code points pass through.
char32_t fold_case(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp >= 0x100 && cp <= 0x137) {
    if (cp == 0x130) return 0x69;  // dotted capital I -> i
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp == 0x17F) return 0x73;  // long s -> s
  if (cp == 0x386) return 0x3AC;
  if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
  if (cp == 0x38C) return 0x3CC;
  if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
  if (cp >= 0x391 && cp <= 0x3A1) return cp + 0x20;
  if (cp >= 0x3A3 && cp <= 0x3AB) return cp + 0x20;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
  if (cp >= 0x460 && cp <= 0x481) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x48A && cp <= 0x52E) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x531 && cp <= 0x556) return cp + 0x30;
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 0x20;
  return cp;
}

//============================= stopwords ====================================

constexpr const char* kDefaultStopwords[] = {
    "i",          "me",       "my",      "myself",  "we",         "our",
    "ours",       "ourselves", "you",    "your",    "yours",      "yourself",
    "yourselves", "he",       "him",     "his",     "himself",    "she",
    "her",        "hers",     "herself", "it",      "its",        "itself",
    "they",       "them",     "their",   "theirs",  "themselves", "what",
    "which",      "who",      "whom",    "this",    "that",       "these",
    "those",      "am",       "is",      "are",     "was",        "were",
    "be",         "been",     "being",   "have",    "has",        "had",
    "having",     "do",       "does",    "did",     "doing",      "a",
    "an",         "the",      "and",     "but",     "if",         "or",
    "because",    "as",       "until",   "while",   "of",         "at",
    "by",         "for",      "with",    "about",   "against",    "between",
    "into",       "through",  "during",  "before",  "after",      "above",
    "below",      "to",       "from",    "up",      "down",       "in",
    "out",        "on",       "off",     "over",    "under",      "again",
    "further",    "then",     "once",    "here",    "there",      "when",
    "where",      "why",      "how",     "all",     "any",        "both",
    "each",       "few",      "more",    "most",    "other",      "some",
    "such",       "no",       "nor",     "not",     "only",       "own",
    "same",       "so",       "than",    "too",     "very",       "s",
    "t",          "can",      "will",    "just",    "don",        "should",
    "now",
};

}  // namespace

const std::unordered_set<std::string>& default_stopwords() {
  static const std::unordered_set<std::string> words(std::begin(kDefaultStopwords),
                                                     std::end(kDefaultStopwords));
  return words;
}

std::unordered_set<std::string> load_stopword_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open stopword file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string content = buffer.str();
  if (!utf8_valid(content)) {
    throw std::runtime_error("stopword file is not valid UTF-8: " + path.string());
  }
  std::unordered_set<std::string> words;
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    // tokenize() folds case and drops surrounding punctuation/whitespace.
    for (auto& token : tokenize(line).tokens) {
      words.insert(std::move(token));
    }
  }
  return words;
}

std::uint64_t stopword_digest(const PrepConfig& config) {
  if (!config.stopword_removal) return 0;
  std::vector<std::string_view> sorted(config.stopword_list.begin(),
                                       config.stopword_list.end());
  std::sort(sorted.begin(), sorted.end());
  Fnv1a64 digest;
  for (const auto& word : sorted) {
    digest.update(word);
    digest.update_byte('\n');
  }
  return digest.digest();
}

//============================ tokenization ==================================

bool utf8_valid(std::string_view bytes, std::size_t* error_offset) {
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const Decoded d = decode_utf8(bytes, pos);
    if (!d.valid) {
      if (error_offset) *error_offset = pos;
      return false;
    }
    pos += d.length;
  }
  return true;
}

std::uint64_t count_code_points(std::string_view bytes) {
  std::uint64_t count = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    const Decoded d = decode_utf8(bytes, pos);
    pos += d.valid ? d.length : 1;  // an invalid byte counts as one unit
    ++count;
  }
  return count;
}

TokenSequence tokenize(std::string_view text) {
  TokenSequence out;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const Decoded d = decode_utf8(text, pos);
    ++out.source_char_count;
    if (d.valid && is_word_char(d.cp)) {
      encode_utf8(fold_case(d.cp), current);
    } else if (!current.empty()) {
      out.tokens.push_back(std::move(current));
      current.clear();
    }
    pos += d.valid ? d.length : 1;  // invalid bytes separate tokens
  }
  if (!current.empty()) out.tokens.push_back(std::move(current));
  return out;
}

std::vector<detail::SpannedToken> detail::tokenize_spans(std::string_view text) {
  std::vector<detail::SpannedToken> out;
  detail::SpannedToken current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const Decoded d = decode_utf8(text, pos);
    const std::size_t step = d.valid ? d.length : 1;
    if (d.valid && is_word_char(d.cp)) {
      if (current.token.empty()) current.begin = pos;
      encode_utf8(fold_case(d.cp), current.token);
      current.end = pos + step;
    } else if (!current.token.empty()) {
      out.push_back(std::move(current));
      current = {};
    }
    pos += step;
  }
  if (!current.token.empty()) out.push_back(std::move(current));
  return out;
}

TokenSequence prepare(std::string_view text, const PrepConfig& config) {
  if (config.stopword_removal && config.stopword_list.empty()) {
    throw std::invalid_argument("stopword removal enabled with an empty stopword list");
  }
  TokenSequence seq = tokenize(text);
  if (config.stopword_removal) {
    std::erase_if(seq.tokens, [&](const std::string& token) {
      return config.stopword_list.count(token) != 0;
    });
  }
  if (config.stemming) {
    for (auto& token : seq.tokens) {
      token = porter_stem(token);
    }
  }
  return seq;
}

}  // namespace skfp
