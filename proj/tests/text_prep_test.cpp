#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "skfp/text_prep.hpp"
#include "test_util.hpp"
#include "token_spans.hpp"

using namespace skfp;

namespace {

std::vector<std::string> toks(std::string_view text) { return tokenize(text).tokens; }

}  // namespace

TEST_CASE("tokenize splits on non-alphanumeric runs and lowercases") {
  CHECK(toks("Barack Obama invites Netanyahu for White House visit.") ==
        std::vector<std::string>{"barack", "obama", "invites", "netanyahu", "for", "white",
                                 "house", "visit"});
  CHECK(toks("don't stop-me_now") == std::vector<std::string>{"don", "t", "stop", "me", "now"});
  CHECK(toks("  \t\r\n ") == std::vector<std::string>{});
  CHECK(toks("") == std::vector<std::string>{});
  CHECK(toks("a1b2 3c") == std::vector<std::string>{"a1b2", "3c"});
  CHECK(toks("MIXED case Words") == std::vector<std::string>{"mixed", "case", "words"});
}

TEST_CASE("tokenize keeps non-ASCII alphabetic code points inside tokens") {
  // E with acute accent (U+00C9, \xC3\x89) is alphabetic and folds to U+00E9:
  // "École" is one token, lowercased to "école".
  auto t = toks("\xC3\x89"
                "cole normale");
  REQUIRE(t.size() == 2);
  CHECK(t[0] ==
        "\xC3\xA9"
        "cole");
  CHECK(t[1] == "normale");
  // Greek and Cyrillic letters are token characters too.
  CHECK(toks("\xCE\xB1\xCE\xB2 \xD0\xB4\xD0\xB0").size() == 2);
  // CJK ideographs are alphanumeric in the Unicode sense.
  CHECK(toks("\xE6\xBC\xA2\xE5\xAD\x97").size() == 1);
}

TEST_CASE("tokenize folds fullwidth ASCII capitals") {
  // U+FF21 FULLWIDTH LATIN CAPITAL LETTER A folds to U+FF41 (lowercase fullwidth).
  auto t = toks("\xEF\xBC\xA1\xEF\xBC\xA2");  // ＡＢ
  REQUIRE(t.size() == 1);
  CHECK(t[0] == "\xEF\xBD\x81\xEF\xBD\x82");  // ａｂ
}

TEST_CASE("tokenize treats invalid UTF-8 bytes as separators counting one point each") {
  TokenSequence seq = tokenize("ab\xFF"
                               "cd");
  CHECK(seq.tokens == std::vector<std::string>{"ab", "cd"});
  CHECK(seq.source_char_count == 5);  // a, b, bad byte, c, d
}

TEST_CASE("tokenize counts source code points, not bytes") {
  TokenSequence seq = tokenize("h\xC3\xA9llo");  // héllo: 5 code points, 6 bytes
  CHECK(seq.source_char_count == 5);
  CHECK(tokenize("").source_char_count == 0);
  CHECK(tokenize("   ").source_char_count == 3);
}

TEST_CASE("utf8_valid accepts well-formed sequences") {
  CHECK(utf8_valid(""));
  CHECK(utf8_valid("plain ascii"));
  CHECK(utf8_valid("h\xC3\xA9llo"));
  CHECK(utf8_valid("\xE6\xBC\xA2\xE5\xAD\x97"));
  CHECK(utf8_valid("\xF0\x9F\x98\x80"));  // U+1F600
}

TEST_CASE("utf8_valid rejects malformed sequences with the right offset") {
  std::size_t off = 0;

  CHECK_FALSE(utf8_valid("ab\xFFxy", &off));
  CHECK(off == 2);

  // Overlong encoding of '/' (0xC0 0xAF).
  CHECK_FALSE(utf8_valid("a\xC0\xAF", &off));
  CHECK(off == 1);

  // UTF-16 surrogate U+D800 encoded directly (0xED 0xA0 0x80).
  CHECK_FALSE(utf8_valid("\xED\xA0\x80", &off));
  CHECK(off == 0);

  // Above U+10FFFF (0xF4 0x90 0x80 0x80 would be U+110000).
  CHECK_FALSE(utf8_valid("ok\xF4\x90\x80\x80", &off));
  CHECK(off == 2);

  // Truncated multi-byte sequence at end of input.
  CHECK_FALSE(utf8_valid("abc\xE6\xBC", &off));
  CHECK(off == 3);

  // Bare continuation byte.
  CHECK_FALSE(utf8_valid("\x80", &off));
  CHECK(off == 0);
}

TEST_CASE("count_code_points counts invalid bytes individually") {
  CHECK(count_code_points("") == 0);
  CHECK(count_code_points("abc") == 3);
  CHECK(count_code_points("h\xC3\xA9llo") == 5);
  CHECK(count_code_points("\xF0\x9F\x98\x80") == 1);
  CHECK(count_code_points("\xFF\xFE") == 2);
}

TEST_CASE("porter_stem matches the reference algorithm on verified pairs") {
  // Pairs checked against the published reference implementation, including
  // its documented departures from the original 1980 description
  // (bli->ble, logi->log).
  const std::pair<const char*, const char*> pairs[] = {
      {"invites", "invit"},     {"invited", "invit"},    {"invitation", "invit"},
      {"president", "presid"},  {"issued", "issu"},      {"israeli", "isra"},
      {"house", "hous"},        {"white", "white"},      {"premier", "premier"},
      {"visit", "visit"},       {"has", "ha"},           {"rational", "ration"},
      {"caresses", "caress"},   {"falling", "fall"},     {"hopping", "hop"},
      {"filing", "file"},       {"agreed", "agre"},      {"happy", "happi"},
      {"sky", "sky"},           {"controll", "control"}, {"probate", "probat"},
      {"rate", "rate"},         {"cease", "ceas"},       {"ponies", "poni"},
      {"ties", "ti"},           {"cats", "cat"},         {"feed", "feed"},
      {"plastered", "plaster"}, {"bled", "bled"},        {"motoring", "motor"},
      {"sing", "sing"},         {"conflated", "conflat"},{"troubling", "troubl"},
      {"sized", "size"},        {"tanned", "tan"},       {"hissing", "hiss"},
      {"fizzed", "fizz"},       {"failing", "fail"},
  };
  for (auto [word, stem] : pairs) {
    CAPTURE(word);
    CHECK(porter_stem(word) == stem);
  }
}

TEST_CASE("porter_stem leaves short words and non-[a-z] tokens unchanged") {
  CHECK(porter_stem("") == "");
  CHECK(porter_stem("a") == "a");
  CHECK(porter_stem("is") == "is");
  CHECK(porter_stem("a1b2") == "a1b2");
  CHECK(porter_stem("42") == "42");
  CHECK(porter_stem("h\xC3\xA9llo") ==
        "h\xC3\xA9llo");  // non-ASCII byte disables stemming
}

TEST_CASE("default stopword list has 127 words and expected members") {
  const auto& sw = default_stopwords();
  CHECK(sw.size() == 127);
  for (const char* w : {"the", "a", "an", "and", "of", "for", "to", "in", "is"}) {
    CAPTURE(w);
    CHECK(sw.count(w) == 1);
  }
  CHECK(sw.count("obama") == 0);
  CHECK(sw.count("visit") == 0);
}

TEST_CASE("prepare removes stopwords before stemming") {
  PrepConfig config;
  TokenSequence seq = prepare("Barack Obama invites Netanyahu for White House visit.", config);
  // "for" is removed as a stopword; the rest are stemmed.
  CHECK(seq.tokens == std::vector<std::string>{"barack", "obama", "invit", "netanyahu", "white",
                                               "hous", "visit"});
  CHECK(seq.source_char_count == 53);

  // "this" is a stopword but its stem "thi" is not: matching must happen on
  // the unstemmed token, so "this" disappears.
  TokenSequence seq2 = prepare("this thesis", config);
  CHECK(seq2.tokens == std::vector<std::string>{"thesi"});
}

TEST_CASE("prepare honours disabled stages") {
  PrepConfig raw;
  raw.stemming = false;
  raw.stopword_removal = false;
  CHECK(prepare("The invited houses", raw).tokens ==
        std::vector<std::string>{"the", "invited", "houses"});

  PrepConfig stem_only;
  stem_only.stopword_removal = false;
  CHECK(prepare("The invited houses", stem_only).tokens ==
        std::vector<std::string>{"the", "invit", "hous"});

  PrepConfig stop_only;
  stop_only.stemming = false;
  CHECK(prepare("The invited houses", stop_only).tokens ==
        std::vector<std::string>{"invited", "houses"});
}

TEST_CASE("prepare rejects stopword removal with an empty list") {
  PrepConfig config;
  config.stopword_list.clear();
  CHECK_THROWS_WITH_AS(prepare("some text", config),
                       "stopword removal enabled with an empty stopword list",
                       std::invalid_argument);
}

TEST_CASE("load_stopword_file parses words and skips comments") {
  skfp::test::TempDir dir;
  auto path = dir / "stop.txt";
  skfp::test::write_file(path,
                         "# comment line\n"
                         "the\n"
                         "  and  \n"
                         "\n"
                         "OF # trailing comment\n");
  auto words = load_stopword_file(path);
  CHECK(words == std::unordered_set<std::string>{"the", "and", "of"});
}

TEST_CASE("load_stopword_file reports missing files") {
  skfp::test::TempDir dir;
  CHECK_THROWS_AS(load_stopword_file(dir / "nope.txt"), std::runtime_error);
}

TEST_CASE("stopword_digest is order-independent, list-sensitive, zero when off") {
  PrepConfig a;
  a.stopword_list = {"alpha", "beta", "gamma"};
  PrepConfig b;
  b.stopword_list = {"gamma", "alpha", "beta"};
  CHECK(stopword_digest(a) == stopword_digest(b));

  PrepConfig c;
  c.stopword_list = {"alpha", "beta"};
  CHECK(stopword_digest(a) != stopword_digest(c));

  PrepConfig off;
  off.stopword_removal = false;
  CHECK(stopword_digest(off) == 0);

  PrepConfig deflt;  // the built-in list hashes to something stable and nonzero
  CHECK(stopword_digest(deflt) != 0);
  CHECK(stopword_digest(deflt) == stopword_digest(PrepConfig{}));
}

TEST_CASE("tokenize_spans reports byte offsets into the source") {
  auto spans = skfp::detail::tokenize_spans("One, two.  three");
  REQUIRE(spans.size() == 3);
  CHECK(spans[0].token == "one");
  CHECK(spans[0].begin == 0);
  CHECK(spans[0].end == 3);
  CHECK(spans[1].token == "two");
  CHECK(spans[1].begin == 5);
  CHECK(spans[1].end == 8);
  CHECK(spans[2].token == "three");
  CHECK(spans[2].begin == 11);
  CHECK(spans[2].end == 16);

  // Multi-byte characters: offsets are bytes, not code points.
  auto accented = skfp::detail::tokenize_spans("\xC3\xA9t\xC3\xA9 x");
  REQUIRE(accented.size() == 2);
  CHECK(accented[0].begin == 0);
  CHECK(accented[0].end == 5);
  CHECK(accented[1].begin == 6);
  CHECK(accented[1].end == 7);

  // Tokens match plain tokenize output.
  std::string text = "Mixed CASE, text-42 here";
  auto plain = tokenize(text).tokens;
  auto spanned = skfp::detail::tokenize_spans(text);
  REQUIRE(plain.size() == spanned.size());
  for (std::size_t i = 0; i < plain.size(); ++i) CHECK(plain[i] == spanned[i].token);
}
