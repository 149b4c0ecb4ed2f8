#ifndef GARSIDE_SIMPLES_HPP
#define GARSIDE_SIMPLES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "garside/presentation.hpp"
#include "garside/reversing.hpp"
#include "garside/rewrite.hpp"
#include "garside/word.hpp"

namespace garside {

// Rank n or n + 1/2; half ranks exist only for H.
class Rank {
 public:
  static Rank whole(int n);
  static Rank half(int n);  // the rank n + 0.5
  int floor() const { return twice_ / 2; }
  bool is_half() const { return twice_ % 2 == 1; }
  std::string str() const;
  static Rank parse(const std::string& text);  // "4" or "3.5"
  bool operator==(const Rank&) const = default;

 private:
  explicit Rank(int twice) : twice_(twice) {}
  int twice_;
};

// Defining words of the lcm tower:
//   F:  D_n = g1 g3 g5 ... g_{2n-3}
//   H:  D_n     = increasing run of indices not divisible by 3, up to 3n-5
//       D_{n+0.5} = same up to 3n-4
Word delta_word(Monoid m, Rank r);

// Closed-form normal forms of the same elements:
//   F:  g_{n-1} g_{n-2} ... g1
//   H:  D_n -> g_{n-1} . g_{n-2} g_{n-1} . ... . g1 g2
//       D_{n+0.5} -> g_{n-1} g_n . g_{n-2} g_{n-1} . ... . g1 g2
Word delta_nf(Monoid m, Rank r);

// Is w the normal form of a simple element (a divisor of some D_n)?
// H: w avoids both eh_redexes and simple_nf obstruction factors.
// F: strictly decreasing indices.
bool is_simple_nf(Monoid m, const Word& w);

enum class SimpleType { none, type0, typeI, typeII1, typeII2 };

std::string to_string(SimpleType t);

struct SimpleRecord {
  Monoid monoid;
  Word nf;
  int index;
  SimpleType type;  // relative to the queried whole rank; none otherwise
};

enum class EnumMethod { forbidden_factors, bfs_reversing, oracle };

// The divisors of delta(m, r), each as its normal form, sorted shortlex.
//   forbidden_factors: generates obstruction-free words directly (whole ranks)
//   bfs_reversing:     closure of {e} under normalized right extension,
//                      filtered by reversing divisibility
//   oracle:            saturates the class of the delta word and collects
//                      its prefixes (small ranks only)
std::vector<SimpleRecord> enumerate_divisors(Monoid m, Rank r, EnumMethod method,
                                             size_t budget = kDefaultSaturationBudget);

// Least n such that the element divides D_n: height + 1 for H, first
// letter + 1 for F, 1 for the empty word.
int index_of(Monoid m, const Word& simple_nf);

// Type of a divisor of D_n in H, by normal-form prefix dispatch:
// index < n gives type 0, then the prefixes g_{n-1} g_{n-2} g_{n-1} /
// g_{n-2} g_{n-1} / g_{n-1} give II2 / II1 / I.
SimpleType classify_type(const Word& nf, int n);

// All types whose defining membership condition holds (divisibility
// tests on the stripped prefix); used to cross-check classify_type.
// A correct partition yields exactly one entry.
std::vector<SimpleType> membership_types(const Word& nf, int n,
                                         size_t budget = kDefaultReversingBudget);

// N(n, l): number of length-l divisors of D_n in H. Row n is built from
// row n-1 by the three-term rule N(n,l) = N(n-1,l) + N(n-1,l-1) + N(n-1,l-2),
// starting from N(2,0) = N(2,1) = 1.
struct CountTriangle {
  int n_max;
  std::vector<std::vector<uint64_t>> rows;  // rows[n-2] has entries l = 0..2n-3
  uint64_t at(int n, int l) const;          // 0 outside the triangle
};

CountTriangle count_triangle(int n_max);

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // images[i-1] = f(i)
  static Permutation identity(int degree);
  static Permutation transposition(int degree, int p);  // swaps p, p+1
  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation after(const Permutation& g) const;  // this o g
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// The F-word attached to a permutation f of {1..n-1}: letter p is
// 2 f^{-1}(p) - 1 - #{i < f^{-1}(p) : f(i) > p}. All these words
// represent D_n, one per permutation.
Word perm_to_word(const Permutation& f);

// Maximal strictly decreasing factors of an E_F-reduced word; these are
// the normal forms of the entries of the greedy decomposition.
std::vector<Word> greedy_decompose_f(const Word& reduced);

// The rank-lowering bijections behind the counting recurrence: identity
// into type 0, left multiplication by g_{n-1} into type I, and the
// two-case map into the union of the type II families.
struct BijectionCheck {
  int n, l;
  std::vector<std::pair<Word, Word>> f0, fI, fII;  // (preimage nf, image nf)
  bool injective;
  bool images_match;  // image sets equal the corresponding type subsets
};

BijectionCheck bijection_maps(int n, int l, size_t budget = kDefaultReversingBudget);

}  // namespace garside

#endif  // GARSIDE_SIMPLES_HPP
