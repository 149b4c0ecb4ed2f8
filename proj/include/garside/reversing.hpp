#ifndef GARSIDE_REVERSING_HPP
#define GARSIDE_REVERSING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "garside/presentation.hpp"
#include "garside/word.hpp"

namespace garside {

// The unique cell filling for a (left s, top t) corner: s * bottom and
// t * right are the two sides of one relation instance, or both empty
// when s == t.
struct ComplementEntry {
  Word bottom, right;
};

// nullopt when the presentation has no relation s... = t... (this occurs
// only for mirrored presentations, on adjacent indices).
std::optional<ComplementEntry> complement(const Presentation& p, gen_t s, gen_t t);

enum class GridStatus { complete, budget_exceeded, stuck };

std::string to_string(GridStatus s);

struct GridCell {
  gen_t left, top;    // 0 encodes an epsilon edge
  Word bottom, right; // complement outputs (empty = epsilon)
  // lattice rectangle for rendering; top-left origin, y grows downwards
  double x0, y0, x1, y1;
};

// Grid built by right reversing from (u, v): left edge u, top edge v.
// When complete, u * bottom_output and v * right_output represent the
// same element (the right lcm candidate).
struct ReversingGrid {
  Word left_input, top_input;
  GridStatus status = GridStatus::complete;
  Word right_output, bottom_output;  // meaningful when complete
  std::vector<GridCell> cells;
  gen_t stuck_left = 0, stuck_top = 0;  // the pair without a complement

  size_t cell_count() const { return cells.size(); }
};

inline constexpr size_t kDefaultReversingBudget = 100000;

// Builds the grid deterministically: the pending corner closest to the
// top-right is resolved first, so each row band is completed before the
// next one starts. The budget counts elementary cells (epsilon pieces
// included); exhaustion is reported in the status, never thrown here.
ReversingGrid reverse_right(const Presentation& p, const Word& u, const Word& v,
                            size_t budget = kDefaultReversingBudget);

// u == v in the monoid iff the grid closes with two empty outputs.
// Throws BudgetExceeded when the grid cannot be completed in budget.
bool equal_by_reversing(const Presentation& p, const Word& u, const Word& v,
                        size_t budget = kDefaultReversingBudget);

struct DivisionResult {
  bool divides;
  Word quotient;  // x with a * x == b, meaningful when divides
};

// Left divisibility [a] | [b] via reversing: the grid from (a, b) must
// close with empty right output; the bottom output is then the quotient.
DivisionResult divides_left(const Presentation& p, const Word& a, const Word& b,
                            size_t budget = kDefaultReversingBudget);

// Right lcm of [a] and [b] as the word a * bottom_output. nullopt when
// the grid gets stuck (no common right multiple; mirrored presentations
// only). Throws BudgetExceeded on budget exhaustion.
std::optional<Word> right_lcm(const Presentation& p, const Word& a, const Word& b,
                              size_t budget = kDefaultReversingBudget);

// Left lcm in F, computed by right reversing the reversed words over the
// mirrored presentation. nullopt means no common left multiple exists.
std::optional<Word> left_lcm_f(const Word& a, const Word& b,
                               size_t budget = kDefaultReversingBudget);

struct DiamondViolation {
  gen_t generator;
  RelationInstance relation;
  GridStatus status_lhs, status_rhs;
  Word lhs_right, lhs_bottom, rhs_right, rhs_bottom;  // outputs when complete
};

struct DiamondReport {
  size_t instances_checked = 0;
  size_t inconclusive = 0;  // grids that ran out of budget
  std::vector<DiamondViolation> violations;
  bool ok() const { return violations.empty() && inconclusive == 0; }
};

// For every generator s <= window and relation instance w = w' of p,
// builds the grids from (s, w) and (s, w') and checks that either both
// are stuck or both complete with equivalent outputs (equivalence via
// the saturation oracle, to stay independent of reversing itself).
DiamondReport check_diamond(const Presentation& p, int index_window,
                            size_t budget = kDefaultReversingBudget,
                            size_t saturation_budget = kDefaultSaturationBudget);

std::string render_grid_ascii(const ReversingGrid& g);
std::string render_grid_tikz(const ReversingGrid& g, Monoid m);

}  // namespace garside

#endif  // GARSIDE_REVERSING_HPP
