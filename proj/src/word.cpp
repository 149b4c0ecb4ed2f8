#include "garside/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace garside {

std::string to_string(Monoid m) { return m == Monoid::F ? "F" : "H"; }

Word::Word(std::vector<gen_t> letters) : letters_(std::move(letters)) {
  for (gen_t g : letters_) {
    if (g < 1) {
      throw std::invalid_argument("generator index must be >= 1, got " + std::to_string(g));
    }
  }
}

Word Word::subword(size_t pos, size_t len) const {
  if (pos > size() || pos + len > size()) {
    throw std::out_of_range("subword out of range");
  }
  return Word(std::vector<gen_t>(letters_.begin() + pos, letters_.begin() + pos + len));
}

Word Word::reversed() const {
  std::vector<gen_t> v(letters_.rbegin(), letters_.rend());
  return Word(std::move(v));
}

Word Word::append(gen_t g) const {
  std::vector<gen_t> v = letters_;
  v.push_back(g);
  return Word(std::move(v));
}

Word operator+(const Word& a, const Word& b) {
  std::vector<gen_t> v = a.letters();
  v.insert(v.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(v));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  if (tokens.empty()) {
    throw std::invalid_argument("empty word text; use \"e\" for the empty word");
  }
  if (tokens.size() == 1 && tokens[0] == "e") return Word{};
  std::vector<gen_t> letters;
  letters.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (t.size() < 2 || t[0] != 'g') {
      throw std::invalid_argument("bad token '" + t + "': expected g<k>");
    }
    for (size_t i = 1; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
        throw std::invalid_argument("bad token '" + t + "': expected g<k>");
      }
    }
    long v = std::stol(t.substr(1));
    if (v < 1) {
      throw std::invalid_argument("generator index must be >= 1 in '" + t + "'");
    }
    letters.push_back(static_cast<gen_t>(v));
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 'g';
    out += std::to_string(w[i]);
  }
  return out;
}

int ceiling(const Word& w) {
  const int len = static_cast<int>(w.size());
  int best = 0;
  for (int p = 1; p <= len; ++p) {
    best = std::max(best, w[p - 1] + len - p);
  }
  return best;
}

int height(const Word& w) {
  int best = 0;
  for (size_t i = 0; i < w.size(); ++i) best = std::max(best, w[i]);
  return best;
}

Word shift(const Word& w, int d) {
  std::vector<gen_t> v = w.letters();
  for (gen_t& g : v) g += d;
  return Word(std::move(v));
}

}  // namespace garside
