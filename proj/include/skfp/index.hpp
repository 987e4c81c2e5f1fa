#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "skfp/fingerprint.hpp"

namespace skfp {

struct IndexStats {
  std::uint64_t record_count = 0;      // filtered confidential hashes
  std::uint64_t corpus_char_total = 0; // code points over all indexed docs
  /// chars per record; empty when there are no records (undefined, not inf).
  std::optional<double> space_efficiency;
};

/// Mutable store of confidential fingerprints plus the non-confidential
/// document-frequency table used to filter them. The engine config is frozen
/// at construction; every indexed or probed document is fingerprinted under
/// it. Safe for concurrent reads; writes require external exclusivity.
class FingerprintIndex {
 public:
  explicit FingerprintIndex(EngineConfig config);

  /// Fingerprints `doc` and files it under `label` (confidential or
  /// non_confidential only). The id must not already be present.
  void add_document(const Document& doc, Label label);

  /// Removes a document and exactly its bookkeeping (postings or df counts).
  void remove_document(const std::string& id);

  /// Moves a document's fingerprint to the other label class without
  /// re-fingerprinting; extensionally identical to remove + add.
  void reclassify(const std::string& id, Label new_label);

  bool contains(const std::string& id) const;

  /// The m-filtered fingerprint of a confidential document: hashes seen in
  /// fewer than m distinct non-confidential documents (all of them when the
  /// filter is disabled).
  Fingerprint filtered_fingerprint(const std::string& id) const;

  IndexStats stats() const;

  const EngineConfig& config() const { return config_; }
  bool read_only() const { return read_only_; }
  std::size_t confidential_count() const { return confidential_.size(); }
  std::size_t non_confidential_count() const { return non_confidential_.size(); }
  std::vector<std::string> confidential_ids() const;

  /// Distinct non-confidential documents containing `hash`.
  std::uint32_t non_confidential_df(std::uint64_t hash) const;
  /// True when `hash` survives the m-filter.
  bool hash_kept(std::uint64_t hash) const;
  /// Confidential doc ids containing `hash` (unfiltered posting list, sorted
  /// ascending), or nullptr when none do.
  const std::vector<std::string>* postings(std::uint64_t hash) const;

  // --- serialization -------------------------------------------------------

  /// Writes the m-filtered confidential fingerprints plus the frozen config
  /// in the canonical detection DB format (see index_io.cpp). Byte-identical
  /// output for extensionally identical indexes.
  void export_confidential(const std::filesystem::path& path) const;

  /// Reads a detection DB: an immutable index sufficient for detection only
  /// (no df table). When the DB was built with stopword removal enabled, the
  /// caller must be able to supply the same list: the built-in default is
  /// used when its digest matches, otherwise pass `stopwords`.
  static FingerprintIndex import_confidential(
      const std::filesystem::path& path,
      const std::optional<std::unordered_set<std::string>>& stopwords = std::nullopt);

  /// Full mutable state (both label classes and the stopword list) in the
  /// workspace container; reloadable with load_workspace.
  void save_workspace(const std::filesystem::path& path) const;
  static FingerprintIndex load_workspace(const std::filesystem::path& path);

 private:
  friend struct IndexIo;

  void insert_posting(std::uint64_t hash, const std::string& id);
  void erase_posting(std::uint64_t hash, const std::string& id);
  void attach_confidential(const std::string& id, const Fingerprint& fp);
  void detach_confidential(const std::string& id, const Fingerprint& fp);
  void attach_non_confidential(const Fingerprint& fp);
  void detach_non_confidential(const Fingerprint& fp);

  EngineConfig config_;
  bool read_only_ = false;
  std::map<std::string, Fingerprint> confidential_;
  std::map<std::string, Fingerprint> non_confidential_;
  std::unordered_map<std::uint64_t, std::uint32_t> df_;
  std::unordered_map<std::uint64_t, std::vector<std::string>> inverted_;
  std::uint64_t char_total_ = 0;
};

/// File kinds distinguishable from the leading magic bytes.
enum class DbKind { detection, workspace, other };
DbKind sniff_db(const std::filesystem::path& path);

}  // namespace skfp
