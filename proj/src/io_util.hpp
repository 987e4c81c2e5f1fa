#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "skfp/text_prep.hpp"

namespace skfp::detail {

/// Reads a whole file, strips a UTF-8 BOM, and rejects invalid UTF-8.
inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string content = std::move(buffer).str();
  if (content.starts_with("\xEF\xBB\xBF")) {
    content.erase(0, 3);
  }
  std::size_t offset = 0;
  if (!utf8_valid(content, &offset)) {
    throw std::runtime_error("file is not valid UTF-8 (byte offset " +
                             std::to_string(offset) + "): " + path.string());
  }
  return content;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open file for writing: " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw std::runtime_error("failed to write file: " + path.string());
  }
}

}  // namespace skfp::detail
