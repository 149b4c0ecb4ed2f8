#ifndef GARSIDE_PRESENTATION_HPP
#define GARSIDE_PRESENTATION_HPP

#include <cstddef>
#include <vector>

#include "garside/word.hpp"

namespace garside {

enum class Orientation { standard, mirrored };

// Relation schemas:
//   F:  g_j g_i = g_i g_{j+1}                for j >= i + 1
//   H:  g_j g_i = g_i g_{j+1}                for j >= i + 2
//       g_{i+1} g_i g_{i+1} = g_i g_{i+1} g_{i+3}
// The mirrored variant reverses both sides of every instance; it backs
// left reversing and is never used for rewriting.
struct Presentation {
  Monoid monoid;
  Orientation orientation;

  static Presentation f() { return {Monoid::F, Orientation::standard}; }
  static Presentation h() { return {Monoid::H, Orientation::standard}; }
  static Presentation f_mirrored() { return {Monoid::F, Orientation::mirrored}; }
  static Presentation h_mirrored() { return {Monoid::H, Orientation::mirrored}; }

  bool operator==(const Presentation&) const = default;
};

struct RelationInstance {
  Word lhs, rhs;
  bool operator==(const RelationInstance&) const = default;
};

// All relation instances whose schema parameters are <= window.
std::vector<RelationInstance> relation_instances(const Presentation& p, int window);

// Words obtained from w by replacing the factor starting at pos by the
// other side of a matching relation instance (both directions).
std::vector<Word> match_relations(const Presentation& p, const Word& w, size_t pos);

struct CongruenceClass {
  Word representative;
  std::vector<Word> members;  // sorted lexicographically; contains representative
  bool truncated;
};

inline constexpr size_t kDefaultSaturationBudget = 500000;

// Breadth-first closure of {w} under relation application at every
// position. The budget bounds the number of distinct words collected;
// when it is hit the result is flagged truncated instead of throwing.
CongruenceClass class_saturate(const Presentation& p, const Word& w,
                               size_t budget = kDefaultSaturationBudget);

// Decides u == v in the monoid by full saturation. Throws BudgetExceeded
// if the class of u cannot be enumerated within the budget.
bool oracle_equal(const Presentation& p, const Word& u, const Word& v,
                  size_t budget = kDefaultSaturationBudget);

// Brute-force left divisibility: [a] divides [b] iff some member of the
// class of b has a length-|a| prefix in the class of a.
bool oracle_divides_left(const Presentation& p, const Word& a, const Word& b,
                         size_t budget = kDefaultSaturationBudget);

}  // namespace garside

#endif  // GARSIDE_PRESENTATION_HPP
