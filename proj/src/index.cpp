#include "skfp/index.hpp"

#include <algorithm>
#include <stdexcept>

namespace skfp {

FingerprintIndex::FingerprintIndex(EngineConfig config) : config_(std::move(config)) {
  if (config_.gram.n == 0) {
    throw std::invalid_argument("gram size n must be at least 1");
  }
  if (config_.m && *config_.m == 0) {
    throw std::invalid_argument("filter cutoff m must be at least 1 when enabled");
  }
}

void FingerprintIndex::insert_posting(std::uint64_t hash, const std::string& id) {
  auto& ids = inverted_[hash];
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  ids.insert(it, id);
}

void FingerprintIndex::erase_posting(std::uint64_t hash, const std::string& id) {
  const auto entry = inverted_.find(hash);
  if (entry == inverted_.end()) return;
  auto& ids = entry->second;
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it != ids.end() && *it == id) ids.erase(it);
  if (ids.empty()) inverted_.erase(entry);
}

void FingerprintIndex::attach_confidential(const std::string& id, const Fingerprint& fp) {
  for (const std::uint64_t hash : fp.hashes) insert_posting(hash, id);
}

void FingerprintIndex::detach_confidential(const std::string& id, const Fingerprint& fp) {
  for (const std::uint64_t hash : fp.hashes) erase_posting(hash, id);
}

void FingerprintIndex::attach_non_confidential(const Fingerprint& fp) {
  for (const std::uint64_t hash : fp.hashes) ++df_[hash];
}

void FingerprintIndex::detach_non_confidential(const Fingerprint& fp) {
  for (const std::uint64_t hash : fp.hashes) {
    const auto it = df_.find(hash);
    if (it != df_.end() && --it->second == 0) df_.erase(it);
  }
}

void FingerprintIndex::add_document(const Document& doc, Label label) {
  if (read_only_) {
    throw std::runtime_error("detection index is read-only");
  }
  if (label == Label::unknown) {
    throw std::invalid_argument("cannot index a document with unknown label: " + doc.id);
  }
  if (contains(doc.id)) {
    throw std::runtime_error("document id already indexed: " + doc.id);
  }
  Fingerprint fp = fingerprint(doc, config_);
  char_total_ += fp.char_count;
  if (label == Label::confidential) {
    attach_confidential(doc.id, fp);
    confidential_.emplace(doc.id, std::move(fp));
  } else {
    attach_non_confidential(fp);
    non_confidential_.emplace(doc.id, std::move(fp));
  }
}

void FingerprintIndex::remove_document(const std::string& id) {
  if (read_only_) {
    throw std::runtime_error("detection index is read-only");
  }
  if (const auto it = confidential_.find(id); it != confidential_.end()) {
    detach_confidential(id, it->second);
    char_total_ -= it->second.char_count;
    confidential_.erase(it);
    return;
  }
  if (const auto it = non_confidential_.find(id); it != non_confidential_.end()) {
    detach_non_confidential(it->second);
    char_total_ -= it->second.char_count;
    non_confidential_.erase(it);
    return;
  }
  throw std::runtime_error("document not indexed: " + id);
}

void FingerprintIndex::reclassify(const std::string& id, Label new_label) {
  if (read_only_) {
    throw std::runtime_error("detection index is read-only");
  }
  if (new_label == Label::unknown) {
    throw std::invalid_argument("cannot reclassify to unknown label: " + id);
  }
  if (const auto it = confidential_.find(id); it != confidential_.end()) {
    if (new_label == Label::confidential) {
      throw std::runtime_error("document already has that label: " + id);
    }
    Fingerprint fp = std::move(it->second);
    confidential_.erase(it);
    detach_confidential(id, fp);
    attach_non_confidential(fp);
    non_confidential_.emplace(id, std::move(fp));
    return;
  }
  if (const auto it = non_confidential_.find(id); it != non_confidential_.end()) {
    if (new_label == Label::non_confidential) {
      throw std::runtime_error("document already has that label: " + id);
    }
    Fingerprint fp = std::move(it->second);
    non_confidential_.erase(it);
    detach_non_confidential(fp);
    attach_confidential(id, fp);
    confidential_.emplace(id, std::move(fp));
    return;
  }
  throw std::runtime_error("document not indexed: " + id);
}

bool FingerprintIndex::contains(const std::string& id) const {
  return confidential_.count(id) != 0 || non_confidential_.count(id) != 0;
}

std::uint32_t FingerprintIndex::non_confidential_df(std::uint64_t hash) const {
  const auto it = df_.find(hash);
  return it == df_.end() ? 0 : it->second;
}

bool FingerprintIndex::hash_kept(std::uint64_t hash) const {
  return !config_.m || non_confidential_df(hash) < *config_.m;
}

const std::vector<std::string>* FingerprintIndex::postings(std::uint64_t hash) const {
  const auto it = inverted_.find(hash);
  return it == inverted_.end() ? nullptr : &it->second;
}

Fingerprint FingerprintIndex::filtered_fingerprint(const std::string& id) const {
  const auto it = confidential_.find(id);
  if (it == confidential_.end()) {
    if (non_confidential_.count(id) != 0) {
      throw std::runtime_error("document is not confidential: " + id);
    }
    throw std::runtime_error("document not indexed: " + id);
  }
  Fingerprint filtered = it->second;
  std::erase_if(filtered.hashes,
                [this](std::uint64_t hash) { return !hash_kept(hash); });
  return filtered;
}

IndexStats FingerprintIndex::stats() const {
  IndexStats stats;
  stats.corpus_char_total = char_total_;
  for (const auto& [id, fp] : confidential_) {
    for (const std::uint64_t hash : fp.hashes) {
      if (hash_kept(hash)) ++stats.record_count;
    }
  }
  if (stats.record_count > 0) {
    stats.space_efficiency = static_cast<double>(stats.corpus_char_total) /
                             static_cast<double>(stats.record_count);
  }
  return stats;
}

std::vector<std::string> FingerprintIndex::confidential_ids() const {
  std::vector<std::string> ids;
  ids.reserve(confidential_.size());
  for (const auto& [id, fp] : confidential_) ids.push_back(id);
  return ids;
}

}  // namespace skfp
