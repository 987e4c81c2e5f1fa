#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace skfp {

struct TokenSequence {
  std::vector<std::string> tokens;
  std::uint64_t source_char_count = 0;  // code points in the source text
};

/// The built-in English stopword list (127 common words).
const std::unordered_set<std::string>& default_stopwords();

/// Parses a stopword file: UTF-8, one word per line, '#' starts a comment.
std::unordered_set<std::string> load_stopword_file(const std::filesystem::path& path);

struct PrepConfig {
  bool stemming = true;
  bool stopword_removal = true;
  std::unordered_set<std::string> stopword_list = default_stopwords();
};

/// Order-independent 64-bit digest of the active stopword list, 0 when
/// stopword removal is disabled. Stored in fingerprint databases so a
/// detector can refuse to run with a different list than the indexer used.
std::uint64_t stopword_digest(const PrepConfig& config);

/// Splits text into maximal runs of alphanumeric code points, lowercased
/// with simple (locale-free) case folding. Everything else separates tokens.
TokenSequence tokenize(std::string_view text);

/// Porter suffix-stripping stem of a lowercase word. Tokens containing
/// digits or characters outside [a-z] are returned unchanged.
std::string porter_stem(std::string_view token);

/// tokenize, then stopword removal (matched on unstemmed tokens), then
/// stemming. Token order is preserved throughout.
TokenSequence prepare(std::string_view text, const PrepConfig& config);

// UTF-8 helpers shared by the corpus loader and the tokenizer.
bool utf8_valid(std::string_view bytes, std::size_t* error_offset = nullptr);
std::uint64_t count_code_points(std::string_view bytes);

}  // namespace skfp
