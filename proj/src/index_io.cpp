#include <cstring>
#include <fstream>
#include <stdexcept>

#include "skfp/index.hpp"

// On-disk containers. All integers little-endian.
//
// Detection DB ("SKFP", version 1) — the exported, m-filtered view:
//   magic[4] "SKFP"
//   u16 version
//   u16 n, u16 k
//   u8  flags: bit0 sorted, bit1 stemming, bit2 stopword removal
//   u32 m (0 = filter disabled)
//   u64 stopword-list digest (0 when removal disabled)
//   u32 record count
//   per record, sorted by id:
//     u16 id length, id bytes (UTF-8)
//     u64 char count
//     u32 hash count, u64 hashes sorted ascending
//   u64 FNV-1a checksum over all preceding bytes
//
// Workspace ("SKFW", version 1) — full mutable state:
//   same header (different magic), then the stopword list (u32 count, each
//   u16 length + bytes, sorted), then two record blocks (confidential,
//   non-confidential) whose records carry an extra u64 gram count, then the
//   same trailing checksum.

namespace skfp {

namespace {

constexpr char kDetectionMagic[4] = {'S', 'K', 'F', 'P'};
constexpr char kWorkspaceMagic[4] = {'S', 'K', 'F', 'W'};
constexpr std::uint16_t kFormatVersion = 1;

constexpr std::uint8_t kFlagSorted = 1u << 0;
constexpr std::uint8_t kFlagStemming = 1u << 1;
constexpr std::uint8_t kFlagStopwords = 1u << 2;

class Writer {
 public:
  void u8(std::uint8_t v) { buffer_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { raw(v); }
  void u32(std::uint32_t v) { raw(v); }
  void u64(std::uint64_t v) { raw(v); }
  void bytes(std::string_view v) { buffer_.append(v); }
  void sized_string(std::string_view v) {
    if (v.size() > 0xFFFF) {
      throw std::runtime_error("string too long for fingerprint database: " +
                               std::string(v.substr(0, 64)));
    }
    u16(static_cast<std::uint16_t>(v.size()));
    bytes(v);
  }
  std::string finish() {
    Fnv1a64 checksum;
    checksum.update(buffer_);
    u64(checksum.digest());
    return std::move(buffer_);
  }

 private:
  template <typename T>
  void raw(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      buffer_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }
  }
  std::string buffer_;
};

class Reader {
 public:
  Reader(std::string data, std::string path)
      : data_(std::move(data)), path_(std::move(path)) {}

  std::string_view magic() {
    if (data_.size() < 4) {
      throw std::runtime_error(not_a_db());
    }
    return std::string_view(data_).substr(0, 4);
  }

  void verify_magic(std::string_view expected, const std::string& error) {
    if (magic() != expected) {
      throw std::runtime_error(error);
    }
    pos_ = 4;
  }

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint16_t u16() { return raw<std::uint16_t>(); }
  std::uint32_t u32() { return raw<std::uint32_t>(); }
  std::uint64_t u64() { return raw<std::uint64_t>(); }
  std::string sized_string() {
    const std::uint16_t length = u16();
    return std::string(take(length));
  }

  // consume the trailing checksum and verify it covers everything before it
  void finish() {
    const std::size_t payload_end = pos_;
    const std::uint64_t stored = u64();
    if (pos_ != data_.size()) {
      throw std::runtime_error(checksum_error());  // trailing garbage
    }
    Fnv1a64 checksum;
    checksum.update(std::string_view(data_).substr(0, payload_end));
    if (checksum.digest() != stored) {
      throw std::runtime_error(checksum_error());
    }
  }

  std::string not_a_db() const { return "not a fingerprint database: " + path_; }
  std::string truncated() const { return "truncated fingerprint database: " + path_; }
  std::string checksum_error() const {
    return "fingerprint database checksum mismatch: " + path_;
  }
  const std::string& path() const { return path_; }

 private:
  std::string_view take(std::size_t count) {
    if (data_.size() - pos_ < count) {
      throw std::runtime_error(truncated());
    }
    const std::string_view view = std::string_view(data_).substr(pos_, count);
    pos_ += count;
    return view;
  }
  template <typename T>
  T raw() {
    const std::string_view v = take(sizeof(T));
    T out = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      out |= static_cast<T>(static_cast<unsigned char>(v[i])) << (8 * i);
    }
    return out;
  }

  std::string data_;
  std::string path_;
  std::size_t pos_ = 0;
};

std::string read_binary_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open fingerprint database: " + path.string());
  }
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return data;
}

void write_binary_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write fingerprint database: " + path.string());
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

void write_config(Writer& writer, const EngineConfig& config) {
  writer.u16(kFormatVersion);
  writer.u16(static_cast<std::uint16_t>(config.gram.n));
  writer.u16(static_cast<std::uint16_t>(config.gram.k));
  std::uint8_t flags = 0;
  if (config.gram.sorted) flags |= kFlagSorted;
  if (config.prep.stemming) flags |= kFlagStemming;
  if (config.prep.stopword_removal) flags |= kFlagStopwords;
  writer.u8(flags);
  writer.u32(config.m ? *config.m : 0);
  writer.u64(stopword_digest(config.prep));
}

struct ReadConfig {
  EngineConfig config;         // stopword_list left empty here
  std::uint64_t digest =  0;   // as stored in the file
};

ReadConfig read_config(Reader& reader, const char* what) {
  const std::uint16_t version = reader.u16();
  if (version != kFormatVersion) {
    throw std::runtime_error("unsupported " + std::string(what) + " version " +
                             std::to_string(version) + ": " + reader.path());
  }
  ReadConfig out;
  out.config.prep.stopword_list.clear();
  out.config.gram.n = reader.u16();
  out.config.gram.k = reader.u16();
  const std::uint8_t flags = reader.u8();
  out.config.gram.sorted = (flags & kFlagSorted) != 0;
  out.config.prep.stemming = (flags & kFlagStemming) != 0;
  out.config.prep.stopword_removal = (flags & kFlagStopwords) != 0;
  const std::uint32_t m = reader.u32();
  if (m == 0) {
    out.config.m.reset();
  } else {
    out.config.m = m;
  }
  out.digest = reader.u64();
  return out;
}

}  // namespace

struct IndexIo {
  static void export_confidential(const FingerprintIndex& index,
                                  const std::filesystem::path& path) {
    Writer writer;
    writer.bytes(std::string_view(kDetectionMagic, 4));
    write_config(writer, index.config_);
    writer.u32(static_cast<std::uint32_t>(index.confidential_.size()));
    for (const auto& [id, fp] : index.confidential_) {
      writer.sized_string(id);
      writer.u64(fp.char_count);
      std::uint32_t kept = 0;
      for (const std::uint64_t hash : fp.hashes) {
        if (index.hash_kept(hash)) ++kept;
      }
      writer.u32(kept);
      for (const std::uint64_t hash : fp.hashes) {
        if (index.hash_kept(hash)) writer.u64(hash);
      }
    }
    write_binary_file(path, writer.finish());
  }

  static FingerprintIndex import_confidential(
      const std::filesystem::path& path,
      const std::optional<std::unordered_set<std::string>>& stopwords) {
    Reader reader(read_binary_file(path), path.string());
    if (reader.magic() == std::string_view(kWorkspaceMagic, 4)) {
      throw std::runtime_error(
          "file is a fingerprint workspace, not an exported fingerprint database: " +
          path.string());
    }
    reader.verify_magic(std::string_view(kDetectionMagic, 4), reader.not_a_db());
    ReadConfig read = read_config(reader, "fingerprint database");

    // Parse and checksum everything before constructing anything.
    std::vector<std::pair<std::string, Fingerprint>> records;
    const std::uint32_t count = reader.u32();
    records.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i) {
      std::string id = reader.sized_string();
      Fingerprint fp;
      fp.char_count = reader.u64();
      const std::uint32_t hashes = reader.u32();
      fp.hashes.reserve(hashes);
      for (std::uint32_t j = 0; j < hashes; ++j) {
        fp.hashes.push_back(reader.u64());
      }
      fp.gram_count = fp.hashes.size();  // the pre-dedup count is not stored
      records.emplace_back(std::move(id), std::move(fp));
    }
    reader.finish();

    if (read.config.prep.stopword_removal) {
      PrepConfig candidate = read.config.prep;
      if (stopwords) {
        candidate.stopword_list = *stopwords;
      } else {
        candidate.stopword_list = default_stopwords();
      }
      if (stopword_digest(candidate) != read.digest) {
        throw std::runtime_error(
            "fingerprint database was built with a different stopword list; "
            "supply the original list: " + path.string());
      }
      read.config.prep.stopword_list = std::move(candidate.stopword_list);
    }

    FingerprintIndex index(read.config);
    index.read_only_ = true;
    for (auto& [id, fp] : records) {
      index.char_total_ += fp.char_count;
      index.attach_confidential(id, fp);
      index.confidential_.emplace(std::move(id), std::move(fp));
    }
    return index;
  }

  static void save_workspace(const FingerprintIndex& index,
                             const std::filesystem::path& path) {
    Writer writer;
    writer.bytes(std::string_view(kWorkspaceMagic, 4));
    write_config(writer, index.config_);

    std::vector<std::string_view> stopwords;
    if (index.config_.prep.stopword_removal) {
      stopwords.assign(index.config_.prep.stopword_list.begin(),
                       index.config_.prep.stopword_list.end());
      std::sort(stopwords.begin(), stopwords.end());
    }
    writer.u32(static_cast<std::uint32_t>(stopwords.size()));
    for (const auto word : stopwords) writer.sized_string(word);

    auto write_block = [&](const std::map<std::string, Fingerprint>& docs) {
      writer.u32(static_cast<std::uint32_t>(docs.size()));
      for (const auto& [id, fp] : docs) {
        writer.sized_string(id);
        writer.u64(fp.char_count);
        writer.u64(fp.gram_count);
        writer.u32(static_cast<std::uint32_t>(fp.hashes.size()));
        for (const std::uint64_t hash : fp.hashes) writer.u64(hash);
      }
    };
    write_block(index.confidential_);
    write_block(index.non_confidential_);
    write_binary_file(path, writer.finish());
  }

  static FingerprintIndex load_workspace(const std::filesystem::path& path) {
    Reader reader(read_binary_file(path), path.string());
    reader.verify_magic(std::string_view(kWorkspaceMagic, 4),
                        "not a fingerprint workspace: " + path.string());
    ReadConfig read = read_config(reader, "fingerprint workspace");

    const std::uint32_t stopword_count = reader.u32();
    std::unordered_set<std::string> stopwords;
    for (std::uint32_t i = 0; i < stopword_count; ++i) {
      stopwords.insert(reader.sized_string());
    }

    auto parse_block = [&] {
      std::vector<std::pair<std::string, Fingerprint>> records;
      const std::uint32_t count = reader.u32();
      records.reserve(count);
      for (std::uint32_t i = 0; i < count; ++i) {
        std::string id = reader.sized_string();
        Fingerprint fp;
        fp.char_count = reader.u64();
        fp.gram_count = reader.u64();
        const std::uint32_t hashes = reader.u32();
        fp.hashes.reserve(hashes);
        for (std::uint32_t j = 0; j < hashes; ++j) {
          fp.hashes.push_back(reader.u64());
        }
        records.emplace_back(std::move(id), std::move(fp));
      }
      return records;
    };
    auto conf = parse_block();
    auto nonconf = parse_block();
    reader.finish();

    read.config.prep.stopword_list = std::move(stopwords);
    if (read.config.prep.stopword_removal &&
        stopword_digest(read.config.prep) != read.digest) {
      throw std::runtime_error(
          "fingerprint workspace stopword list does not match its digest: " + path.string());
    }

    FingerprintIndex index(read.config);
    for (auto& [id, fp] : conf) {
      index.char_total_ += fp.char_count;
      index.attach_confidential(id, fp);
      index.confidential_.emplace(std::move(id), std::move(fp));
    }
    for (auto& [id, fp] : nonconf) {
      index.char_total_ += fp.char_count;
      index.attach_non_confidential(fp);
      index.non_confidential_.emplace(std::move(id), std::move(fp));
    }
    return index;
  }
};

void FingerprintIndex::export_confidential(const std::filesystem::path& path) const {
  IndexIo::export_confidential(*this, path);
}

FingerprintIndex FingerprintIndex::import_confidential(
    const std::filesystem::path& path,
    const std::optional<std::unordered_set<std::string>>& stopwords) {
  return IndexIo::import_confidential(path, stopwords);
}

void FingerprintIndex::save_workspace(const std::filesystem::path& path) const {
  IndexIo::save_workspace(*this, path);
}

FingerprintIndex FingerprintIndex::load_workspace(const std::filesystem::path& path) {
  return IndexIo::load_workspace(path);
}

DbKind sniff_db(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open fingerprint database: " + path.string());
  }
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() != 4) return DbKind::other;
  if (std::memcmp(magic, kDetectionMagic, 4) == 0) return DbKind::detection;
  if (std::memcmp(magic, kWorkspaceMagic, 4) == 0) return DbKind::workspace;
  return DbKind::other;
}

}  // namespace skfp
