#include "skfp/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "io_util.hpp"
#include "rng_util.hpp"
#include "skfp/text_prep.hpp"

namespace skfp {

namespace {

using detail::read_text_file;

void load_label_dir(const std::filesystem::path& root, std::string_view subdir,
                    Label label, bool required, Corpus& corpus) {
  const std::filesystem::path dir = root / subdir;
  if (!std::filesystem::exists(dir)) {
    if (required) {
      throw std::runtime_error("corpus root is missing the '" + std::string(subdir) +
                               "/' subdirectory: " + root.string());
    }
    return;
  }
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string id = std::filesystem::relative(entry.path(), root).generic_string();
    corpus.documents.push_back(
        make_document(std::move(id), read_text_file(entry.path()), label));
  }
}

}  // namespace

std::string_view to_string(Label label) {
  switch (label) {
    case Label::confidential: return "confidential";
    case Label::non_confidential: return "non_confidential";
    case Label::unknown: return "unknown";
  }
  return "unknown";
}

Label label_from_string(std::string_view name) {
  if (name == "confidential") return Label::confidential;
  if (name == "non_confidential") return Label::non_confidential;
  if (name == "unknown") return Label::unknown;
  throw std::invalid_argument("unknown label: " + std::string(name));
}

Document make_document(std::string id, std::string text, Label label) {
  Document doc;
  doc.id = std::move(id);
  doc.char_count = count_code_points(text);
  doc.text = std::move(text);
  doc.label = label;
  return doc;
}

const Document* Corpus::find(std::string_view id) const {
  const auto it = std::lower_bound(
      documents.begin(), documents.end(), id,
      [](const Document& doc, std::string_view v) { return doc.id < v; });
  return (it != documents.end() && it->id == id) ? &*it : nullptr;
}

Corpus load_corpus(const std::filesystem::path& root) {
  if (!std::filesystem::exists(root) || !std::filesystem::is_directory(root)) {
    throw std::runtime_error("corpus root not found: " + root.string());
  }
  Corpus corpus;
  corpus.source_path = root.string();
  load_label_dir(root, "confidential", Label::confidential, true, corpus);
  load_label_dir(root, "non_confidential", Label::non_confidential, true, corpus);
  load_label_dir(root, "unlabeled", Label::unknown, false, corpus);
  std::sort(corpus.documents.begin(), corpus.documents.end(),
            [](const Document& a, const Document& b) { return a.id < b.id; });
  return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& root) {
  std::filesystem::create_directories(root / "confidential");
  std::filesystem::create_directories(root / "non_confidential");
  for (const auto& doc : corpus.documents) {
    const std::string prefix = std::string(to_string(doc.label)) + "/";
    if (!doc.id.starts_with(prefix)) {
      throw std::runtime_error("document id does not begin with its label directory: " +
                               doc.id);
    }
    const std::filesystem::path path = root / doc.id;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write file: " + path.string());
    }
    out.write(doc.text.data(), static_cast<std::streamsize>(doc.text.size()));
    if (!out) {
      throw std::runtime_error("write failed: " + path.string());
    }
  }
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus,
                                       double holdout_fraction,
                                       std::uint64_t seed) {
  if (!(holdout_fraction >= 0.0 && holdout_fraction <= 1.0)) {
    throw std::invalid_argument("holdout_fraction must be within [0, 1]");
  }
  std::vector<std::size_t> order(corpus.documents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  detail::shuffle(order, rng);

  const auto holdout_size = static_cast<std::size_t>(
      std::llround(static_cast<double>(order.size()) * holdout_fraction));

  Corpus train, holdout;
  train.source_path = corpus.source_path;
  holdout.source_path = corpus.source_path;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& side = (i < holdout_size) ? holdout : train;
    side.documents.push_back(corpus.documents[order[i]]);
  }
  auto by_id = [](const Document& a, const Document& b) { return a.id < b.id; };
  std::sort(train.documents.begin(), train.documents.end(), by_id);
  std::sort(holdout.documents.begin(), holdout.documents.end(), by_id);
  return {std::move(train), std::move(holdout)};
}

}  // namespace skfp
