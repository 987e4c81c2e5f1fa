#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "skfp/fingerprint.hpp"

using namespace skfp;

namespace {

std::uint64_t gram_hash(std::string_view canonical) {
  Gram g;
  g.canonical_form = std::string(canonical);
  return hash_gram(g);
}

}  // namespace

TEST_CASE("fnv1a64 matches the published test vectors") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("incremental hashing equals one-shot hashing") {
  Fnv1a64 h;
  h.update("foo");
  h.update("bar");
  CHECK(h.digest() == fnv1a64("foobar"));

  Fnv1a64 bytes;
  for (unsigned char c : std::string("foobar")) bytes.update_byte(c);
  CHECK(bytes.digest() == fnv1a64("foobar"));

  CHECK(Fnv1a64{}.digest() == fnv1a64(""));
}

TEST_CASE("hash_gram hashes the canonical form") {
  Gram g;
  g.words = {"alpha", "beta"};
  g.canonical_form = "alpha beta";
  CHECK(hash_gram(g) == fnv1a64("alpha beta"));
}

TEST_CASE("default engine config") {
  EngineConfig config;
  CHECK(config.gram.n == 3);
  CHECK(config.gram.k == 1);
  CHECK(config.gram.sorted);
  CHECK(config.prep.stemming);
  CHECK(config.prep.stopword_removal);
  REQUIRE(config.m.has_value());
  CHECK(*config.m == 1);
}

TEST_CASE("full_fingerprinting turns off sorting, skips and filtering") {
  EngineConfig baseline = EngineConfig::full_fingerprinting();
  CHECK(baseline.gram.n == 3);
  CHECK(baseline.gram.k == 0);
  CHECK_FALSE(baseline.gram.sorted);
  CHECK_FALSE(baseline.m.has_value());

  EngineConfig wide = EngineConfig::full_fingerprinting(5);
  CHECK(wide.gram.n == 5);
  CHECK(wide.gram.k == 0);
}

TEST_CASE("fingerprint_text hashes the known sentence grams") {
  EngineConfig config;  // n=3 k=1 sorted, stemming + stopwords on
  Fingerprint fp =
      fingerprint_text("Barack Obama invites Netanyahu for White House visit.", config);

  const char* expected[] = {
      "barack invit obama",   "barack netanyahu obama", "barack invit netanyahu",
      "invit netanyahu obama", "invit obama white",      "netanyahu obama white",
      "invit netanyahu white", "hous invit netanyahu",   "hous invit white",
      "hous netanyahu white",  "netanyahu visit white",  "hous netanyahu visit",
      "hous visit white",
  };
  CHECK(fp.gram_count == 13);
  CHECK(fp.char_count == 53);
  REQUIRE(fp.hashes.size() == 13);  // all thirteen canonical forms are distinct
  CHECK(std::is_sorted(fp.hashes.begin(), fp.hashes.end()));
  for (const char* canonical : expected) {
    CAPTURE(canonical);
    CHECK(fp.contains(gram_hash(canonical)));
  }
  CHECK_FALSE(fp.contains(gram_hash("barack obama visit")));
}

TEST_CASE("fingerprint deduplicates hashes but counts all grams") {
  EngineConfig config;
  config.prep.stemming = false;
  config.prep.stopword_removal = false;
  config.gram = {2, 0, true};
  Fingerprint fp = fingerprint_text("a b a b a b", config);
  CHECK(fp.gram_count == 5);  // ab ba ab ba ab before sorting/dedup
  CHECK(fp.hashes.size() == 1);  // sorted, every pair canonicalizes to "a b"
  CHECK(fp.contains(gram_hash("a b")));

  config.gram.sorted = false;
  Fingerprint raw = fingerprint_text("a b a b a b", config);
  CHECK(raw.gram_count == 5);
  CHECK(raw.hashes.size() == 2);  // "a b" and "b a"
}

TEST_CASE("fingerprint char_count counts source code points before preparation") {
  EngineConfig config;
  Fingerprint fp = fingerprint_text("the of and", config);  // all stopwords
  CHECK(fp.char_count == 10);
  CHECK(fp.gram_count == 0);
  CHECK(fp.hashes.empty());

  Fingerprint accented = fingerprint_text("caf\xC3\xA9", config);
  CHECK(accented.char_count == 4);
}

TEST_CASE("fingerprint of a document uses its text") {
  Document doc = make_document("confidential/x.txt",
                               "Barack Obama invites Netanyahu for White House visit.",
                               Label::confidential);
  EngineConfig config;
  Fingerprint from_doc = fingerprint(doc, config);
  Fingerprint from_text = fingerprint_text(doc.text, config);
  CHECK(from_doc.hashes == from_text.hashes);
  CHECK(from_doc.gram_count == from_text.gram_count);
  CHECK(from_doc.char_count == from_text.char_count);
}

TEST_CASE("config_mismatch reports the first differing field") {
  EngineConfig base;

  CHECK(config_mismatch(base, base).empty());

  EngineConfig other = base;
  other.gram.n = 4;
  CHECK(config_mismatch(base, other) == "n differs (3 vs 4)");

  other = base;
  other.gram.k = 2;
  CHECK(config_mismatch(base, other) == "k differs (1 vs 2)");

  other = base;
  other.gram.sorted = false;
  CHECK(config_mismatch(base, other) == "sorting differs (on vs off)");

  other = base;
  other.prep.stemming = false;
  CHECK(config_mismatch(base, other) == "stemming differs (on vs off)");

  other = base;
  other.prep.stopword_removal = false;
  CHECK(config_mismatch(base, other) == "stopword removal differs (on vs off)");

  other = base;
  other.m = 3;
  CHECK(config_mismatch(base, other) == "filter cutoff m differs (1 vs 3)");

  other = base;
  other.m.reset();
  CHECK(config_mismatch(base, other) == "filter cutoff m differs (1 vs disabled)");

  other = base;
  other.prep.stopword_list = {"bespoke"};
  CHECK(config_mismatch(base, other) == "stopword lists differ");

  // Disabled stopword removal makes the lists irrelevant.
  EngineConfig off_a = base;
  off_a.prep.stopword_removal = false;
  EngineConfig off_b = off_a;
  off_b.prep.stopword_list = {"bespoke"};
  CHECK(config_mismatch(off_a, off_b).empty());
}
