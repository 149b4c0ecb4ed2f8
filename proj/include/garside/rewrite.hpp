#ifndef GARSIDE_REWRITE_HPP
#define GARSIDE_REWRITE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "garside/word.hpp"

namespace garside {

// Oriented rule systems:
//   E_F: g_i g_{j+1} -> g_j g_i                 for j >= i + 1
//   E_H: g_i g_{j+1} -> g_j g_i                 for j >= i + 2
//        g_i g_{i+1} g_{i+3} -> g_{i+1} g_i g_{i+1}
// Every rule strictly decreases the sum of the letter indices, so
// normalization terminates. eh_mutated() alters the three-letter rule
// target; joinability checks must catch it (harness self-test).
class RewriteSystem {
 public:
  static RewriteSystem ef() { return {Monoid::F, 2, false, {1, 0, 1}, true}; }
  static RewriteSystem eh() { return {Monoid::H, 3, true, {1, 0, 1}, true}; }
  static RewriteSystem eh_mutated() { return {Monoid::H, 3, true, {1, 0, 2}, false}; }

  Monoid monoid() const { return monoid_; }
  // the two-letter rule fires when w[p+1] >= w[p] + swap_gap()
  int swap_gap() const { return swap_gap_; }
  bool has_braid_rule() const { return has_braid_; }
  bool standard_rules() const { return standard_; }

  // replacement words when a rule matches at pos, nullopt otherwise
  std::optional<Word> swap_at(const Word& w, size_t pos) const;
  std::optional<Word> braid_at(const Word& w, size_t pos) const;

 private:
  RewriteSystem(Monoid m, int gap, bool braid, std::array<int, 3> target, bool standard)
      : monoid_(m), swap_gap_(gap), has_braid_(braid), braid_target_(target), standard_(standard) {}

  Monoid monoid_;
  int swap_gap_;
  bool has_braid_;
  std::array<int, 3> braid_target_;  // offsets added to the rule's base index
  bool standard_;
};

struct RewriteStep {
  size_t pos;
  Word before, after;
};

enum class RedexStrategy { leftmost, rightmost };

// all one-step rewrites of w
std::vector<Word> rewrite_once(const RewriteSystem& sys, const Word& w);

// Normal form of w. Deterministic strategy: leftmost redex, two-letter
// rule before the three-letter one at equal positions. Convergence makes
// the choice irrelevant for the result.
Word reduce(const RewriteSystem& sys, const Word& w, std::vector<RewriteStep>* trace = nullptr);
Word reduce_with_strategy(const RewriteSystem& sys, const Word& w, RedexStrategy strategy);

bool is_reduced(const RewriteSystem& sys, const Word& w);

// Forbidden-factor sets.
//   ef_redexes: g_i g_j with j >= i + 2 (left sides of the E_F rules)
//   eh_redexes: g_i g_j with j >= i + 3, and g_i g_{i+1} g_{i+3}
//   simple_nf:  g_i g_i, g_i g_{i+2}, g_i g_{i+1} g_i, g_i g_{i+1} g_{i+2}
struct ObstructionSet {
  enum class Kind { ef_redexes, eh_redexes, simple_nf };
  Kind kind;

  static ObstructionSet o_f() { return {Kind::ef_redexes}; }
  static ObstructionSet o_h() { return {Kind::eh_redexes}; }
  static ObstructionSet o_sigma() { return {Kind::simple_nf}; }
};

bool contains_factor(const Word& w, const ObstructionSet& obs);

struct CriticalPair {
  Word source, left_result, right_result;
};

// All overlap sources of two rule left sides with letter indices bounded
// by the window, one per concrete instance.
std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys, int index_window);

struct ConfluenceReport {
  size_t pairs_checked = 0;
  std::vector<CriticalPair> violations;  // pairs whose results reduce differently
  bool ok() const { return violations.empty(); }
};

ConfluenceReport check_local_confluence(const RewriteSystem& sys, int index_window);

// Constructive form of reduce(w * g) for an E_H-reduced word w: returns
// the decomposition (w1, w2) of w with
//   reduce(w * g) = w1 * g_{g - |w2|} * w2.
// Implemented by structural induction on w, not by calling reduce.
std::pair<Word, Word> append_reduce(const RewriteSystem& sys, const Word& w, gen_t g);

}  // namespace garside

#endif  // GARSIDE_REWRITE_HPP
