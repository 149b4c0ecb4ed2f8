#ifndef GARSIDE_WORD_HPP
#define GARSIDE_WORD_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

// Generator index: the alphabet is g1, g2, ...; there is no g0.
using gen_t = int;

// Which monoid semantics an operation uses. Words themselves are
// monoid-agnostic; only operations carry the tag.
enum class Monoid { F, H };

std::string to_string(Monoid m);

// Thrown when a saturation or reversing budget runs out before the
// computation could decide its answer.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite word over the generator alphabet. Operations return fresh
// words; instances are never mutated after construction.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<gen_t> letters) : Word(std::vector<gen_t>(letters)) {}
  explicit Word(std::vector<gen_t> letters);

  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  gen_t operator[](size_t i) const { return letters_[i]; }
  const std::vector<gen_t>& letters() const { return letters_; }

  Word subword(size_t pos, size_t len) const;
  Word prefix(size_t len) const { return subword(0, len); }
  Word suffix_from(size_t pos) const { return subword(pos, size() - pos); }
  Word reversed() const;
  Word append(gen_t g) const;

  bool operator==(const Word&) const = default;
  // lexicographic by index sequence
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

 private:
  std::vector<gen_t> letters_;
};

Word operator+(const Word& a, const Word& b);

// (length, index sequence) order, used for deterministic enumerations.
bool shortlex_less(const Word& a, const Word& b);

// Text format: "e" for the empty word, otherwise whitespace-separated
// tokens g<k> with k >= 1.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// max over positions p (1-based) of letter(p) + |w| - p; 0 for the empty
// word. Invariant under the defining relations of both monoids.
int ceiling(const Word& w);

// largest generator index occurring in w; 0 for the empty word.
int height(const Word& w);

// increment every index by d
Word shift(const Word& w, int d);

}  // namespace garside

#endif  // GARSIDE_WORD_HPP
