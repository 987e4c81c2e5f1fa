#include <string>
#include <string_view>

#include "skfp/text_prep.hpp"

// Porter suffix stripping, matching the author's reference implementation
// (including its two documented refinements over the original rule table:
// (m>0) BLI -> BLE and the added (m>0) LOGI -> LOG). Operates on lowercase
// ASCII words; everything else bypasses the stemmer unchanged.

namespace skfp {

namespace {

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string run() {
    if (k_ <= 1) return b_;  // length <= 2: leave unchanged
    step1ab();
    step1c();
    step2();
    step3();
    step4();
    step5();
    return b_.substr(0, static_cast<std::size_t>(k_) + 1);
  }

 private:
  // true when b_[i] is a consonant ('y' depends on its predecessor)
  bool cons(int i) const {
    switch (b_[static_cast<std::size_t>(i)]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // number of VC sequences in b_[0..j_]
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool doublec(int j) const {
    if (j < 1) return false;
    if (b_[static_cast<std::size_t>(j)] != b_[static_cast<std::size_t>(j) - 1]) return false;
    return cons(j);
  }

  // consonant-vowel-consonant ending at i, last consonant not w, x or y
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char c = b_[static_cast<std::size_t>(i)];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ - len + 1), static_cast<std::size_t>(len),
                   s) != 0) {
      return false;
    }
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.resize(static_cast<std::size_t>(j_) + 1);
    b_.append(s);
    k_ = static_cast<int>(b_.size()) - 1;
  }

  void r(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  // plurals and -ed / -ing
  void step1ab() {
    if (b_[static_cast<std::size_t>(k_)] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[static_cast<std::size_t>(k_) - 1] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (doublec(k_)) {
        const char c = b_[static_cast<std::size_t>(k_)];
        if (c != 'l' && c != 's' && c != 'z') --k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  // terminal y -> i when there is another vowel in the stem
  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  // double suffixes -> single ones, e.g. -ization -> -ize
  void step2() {
    if (k_ == 0) return;
    switch (b_[static_cast<std::size_t>(k_) - 1]) {
      case 'a':
        if (ends("ational")) { r("ate"); break; }
        if (ends("tional")) { r("tion"); break; }
        break;
      case 'c':
        if (ends("enci")) { r("ence"); break; }
        if (ends("anci")) { r("ance"); break; }
        break;
      case 'e':
        if (ends("izer")) { r("ize"); break; }
        break;
      case 'l':
        if (ends("bli")) { r("ble"); break; }
        if (ends("alli")) { r("al"); break; }
        if (ends("entli")) { r("ent"); break; }
        if (ends("eli")) { r("e"); break; }
        if (ends("ousli")) { r("ous"); break; }
        break;
      case 'o':
        if (ends("ization")) { r("ize"); break; }
        if (ends("ation")) { r("ate"); break; }
        if (ends("ator")) { r("ate"); break; }
        break;
      case 's':
        if (ends("alism")) { r("al"); break; }
        if (ends("iveness")) { r("ive"); break; }
        if (ends("fulness")) { r("ful"); break; }
        if (ends("ousness")) { r("ous"); break; }
        break;
      case 't':
        if (ends("aliti")) { r("al"); break; }
        if (ends("iviti")) { r("ive"); break; }
        if (ends("biliti")) { r("ble"); break; }
        break;
      case 'g':
        if (ends("logi")) { r("log"); break; }
        break;
      default:
        break;
    }
  }

  // -ic-, -full, -ness etc.
  void step3() {
    switch (b_[static_cast<std::size_t>(k_)]) {
      case 'e':
        if (ends("icate")) { r("ic"); break; }
        if (ends("ative")) { r(""); break; }
        if (ends("alize")) { r("al"); break; }
        break;
      case 'i':
        if (ends("iciti")) { r("ic"); break; }
        break;
      case 'l':
        if (ends("ical")) { r("ic"); break; }
        if (ends("ful")) { r(""); break; }
        break;
      case 's':
        if (ends("ness")) { r(""); break; }
        break;
      default:
        break;
    }
  }

  // -ant, -ence etc. stripped in the context (m > 1)
  void step4() {
    bool matched = false;
    if (k_ == 0) return;
    switch (b_[static_cast<std::size_t>(k_) - 1]) {
      case 'a': matched = ends("al"); break;
      case 'c': matched = ends("ance") || ends("ence"); break;
      case 'e': matched = ends("er"); break;
      case 'i': matched = ends("ic"); break;
      case 'l': matched = ends("able") || ends("ible"); break;
      case 'n':
        matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
        break;
      case 'o':
        if (ends("ion") && j_ >= 0 &&
            (b_[static_cast<std::size_t>(j_)] == 's' ||
             b_[static_cast<std::size_t>(j_)] == 't')) {
          matched = true;
        } else {
          matched = ends("ou");
        }
        break;
      case 's': matched = ends("ism"); break;
      case 't': matched = ends("ate") || ends("iti"); break;
      case 'u': matched = ends("ous"); break;
      case 'v': matched = ends("ive"); break;
      case 'z': matched = ends("ize"); break;
      default: break;
    }
    if (matched && m() > 1) k_ = j_;
  }

  // final -e and -ll cleanup
  void step5() {
    j_ = k_;
    if (b_[static_cast<std::size_t>(k_)] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[static_cast<std::size_t>(k_)] == 'l' && doublec(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;       // index of the last live character
  int j_ = 0;   // end of the stem a suffix match exposes
};

}  // namespace

std::string porter_stem(std::string_view token) {
  for (const char c : token) {
    if (c < 'a' || c > 'z') return std::string(token);
  }
  return Stemmer(token).run();
}

}  // namespace skfp
