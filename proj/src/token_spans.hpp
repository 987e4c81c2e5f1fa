#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace skfp::detail {

/// A token together with the byte range it came from, so callers can inspect
/// the untokenized text between neighbouring tokens (e.g. for sentence
/// punctuation).
struct SpannedToken {
  std::string token;       // case-folded, as produced by tokenize()
  std::size_t begin = 0;   // byte offset of the first source byte
  std::size_t end = 0;     // one past the last source byte
};

std::vector<SpannedToken> tokenize_spans(std::string_view text);

}  // namespace skfp::detail
