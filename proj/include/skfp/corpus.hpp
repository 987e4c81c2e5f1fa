#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace skfp {

enum class Label { confidential, non_confidential, unknown };

std::string_view to_string(Label label);
Label label_from_string(std::string_view name);

/// One ingested text document. `char_count` is the code-point length of
/// `text`, not its byte length.
struct Document {
  std::string id;
  std::string text;
  Label label = Label::unknown;
  std::uint64_t char_count = 0;
};

/// Builds a Document with `char_count` computed from `text`.
Document make_document(std::string id, std::string text, Label label);

/// An ordered collection of documents with distinct ids, sorted by id.
struct Corpus {
  std::vector<Document> documents;
  std::string source_path;

  const Document* find(std::string_view id) const;
};

/// Loads a corpus from `root`, which must contain `confidential/` and
/// `non_confidential/` subdirectories (either may be empty) and may also
/// contain an optional `unlabeled/` directory. Every file must be UTF-8; a
/// leading BOM is stripped. Document ids are the slash-separated paths
/// relative to `root`.
Corpus load_corpus(const std::filesystem::path& root);

/// Writes `corpus` back out in the layout `load_corpus` reads. Each document
/// id must begin with the directory name matching its label.
void write_corpus(const Corpus& corpus, const std::filesystem::path& root);

/// Deterministic seeded partition: the holdout side receives
/// round(N * holdout_fraction) documents. Both sides come back sorted by id;
/// the same seed always produces the same split.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       double holdout_fraction,
                                       std::uint64_t seed);

}  // namespace skfp
