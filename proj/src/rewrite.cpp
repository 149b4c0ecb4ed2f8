#include "garside/rewrite.hpp"

#include <algorithm>
#include <numeric>

namespace garside {

namespace {

long long index_sum(const std::vector<gen_t>& v) {
  return std::accumulate(v.begin(), v.end(), 0ll);
}

}  // namespace

std::optional<Word> RewriteSystem::swap_at(const Word& w, size_t pos) const {
  if (pos + 2 > w.size()) return std::nullopt;
  gen_t a = w[pos], b = w[pos + 1];
  if (b < a + swap_gap_) return std::nullopt;
  std::vector<gen_t> v = w.letters();
  v[pos] = b - 1;
  v[pos + 1] = a;
  return Word(std::move(v));
}

std::optional<Word> RewriteSystem::braid_at(const Word& w, size_t pos) const {
  if (!has_braid_ || pos + 3 > w.size()) return std::nullopt;
  gen_t a = w[pos];
  if (w[pos + 1] != a + 1 || w[pos + 2] != a + 3) return std::nullopt;
  std::vector<gen_t> v = w.letters();
  v[pos] = a + braid_target_[0];
  v[pos + 1] = a + braid_target_[1];
  v[pos + 2] = a + braid_target_[2];
  return Word(std::move(v));
}

std::vector<Word> rewrite_once(const RewriteSystem& sys, const Word& w) {
  std::vector<Word> out;
  for (size_t pos = 0; pos < w.size(); ++pos) {
    if (auto r = sys.swap_at(w, pos)) out.push_back(*r);
    if (auto r = sys.braid_at(w, pos)) out.push_back(*r);
  }
  return out;
}

static Word reduce_impl(const RewriteSystem& sys, const Word& w, RedexStrategy strategy,
                        std::vector<RewriteStep>* trace) {
  Word cur = w;
  long long measure = index_sum(cur.letters());
  for (;;) {
    std::optional<Word> next;
    size_t used_pos = 0;
    if (strategy == RedexStrategy::leftmost) {
      for (size_t pos = 0; pos < cur.size() && !next; ++pos) {
        if (auto r = sys.swap_at(cur, pos)) {
          next = std::move(r);
        } else if (auto r2 = sys.braid_at(cur, pos)) {
          next = std::move(r2);
        }
        used_pos = pos;
      }
    } else {
      for (size_t pos = cur.size(); pos-- > 0 && !next;) {
        if (auto r = sys.swap_at(cur, pos)) {
          next = std::move(r);
        } else if (auto r2 = sys.braid_at(cur, pos)) {
          next = std::move(r2);
        }
        used_pos = pos;
      }
    }
    if (!next) break;
    long long next_measure = index_sum(next->letters());
    if (next_measure >= measure) {
      throw std::logic_error("rewrite step failed to decrease the index sum");
    }
    if (trace) trace->push_back({used_pos, cur, *next});
    cur = std::move(*next);
    measure = next_measure;
  }
  return cur;
}

Word reduce(const RewriteSystem& sys, const Word& w, std::vector<RewriteStep>* trace) {
  return reduce_impl(sys, w, RedexStrategy::leftmost, trace);
}

Word reduce_with_strategy(const RewriteSystem& sys, const Word& w, RedexStrategy strategy) {
  return reduce_impl(sys, w, strategy, nullptr);
}

bool is_reduced(const RewriteSystem& sys, const Word& w) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    if (sys.swap_at(w, pos) || sys.braid_at(w, pos)) return false;
  }
  return true;
}

bool contains_factor(const Word& w, const ObstructionSet& obs) {
  using Kind = ObstructionSet::Kind;
  for (size_t p = 0; p + 2 <= w.size(); ++p) {
    gen_t a = w[p], b = w[p + 1];
    switch (obs.kind) {
      case Kind::ef_redexes:
        if (b >= a + 2) return true;
        break;
      case Kind::eh_redexes:
        if (b >= a + 3) return true;
        if (p + 3 <= w.size() && b == a + 1 && w[p + 2] == a + 3) return true;
        break;
      case Kind::simple_nf:
        if (b == a || b == a + 2) return true;
        if (p + 3 <= w.size() && b == a + 1 && (w[p + 2] == a || w[p + 2] == a + 2)) return true;
        break;
    }
  }
  return false;
}

std::vector<CriticalPair> critical_pairs(const RewriteSystem& sys, int window) {
  if (window < 8) throw std::invalid_argument("index window must be >= 8");
  std::vector<CriticalPair> out;
  const int g = sys.swap_gap();
  auto swap_result = [&](const Word& w, size_t pos) { return *sys.swap_at(w, pos); };
  auto braid_result = [&](const Word& w, size_t pos) { return *sys.braid_at(w, pos); };

  // two-letter rules overlapping in one letter
  for (int x = 1; x <= window; ++x) {
    for (int y = x + g; y <= window; ++y) {
      for (int z = y + g; z <= window; ++z) {
        Word src{x, y, z};
        out.push_back({src, swap_result(src, 0), swap_result(src, 1)});
      }
    }
  }
  if (sys.has_braid_rule()) {
    for (int i = 1; i <= window; ++i) {
      // three-letter rule against itself, sharing one letter
      {
        Word src{i, i + 1, i + 3, i + 4, i + 6};
        out.push_back({src, braid_result(src, 0), braid_result(src, 2)});
      }
      // two-letter rule in front of a three-letter redex
      for (int y = i + 3; y <= window; ++y) {
        Word src{i, y, y + 1, y + 3};
        out.push_back({src, swap_result(src, 0), braid_result(src, 1)});
      }
      // three-letter redex followed by a two-letter redex
      for (int z = i + 6; z <= window; ++z) {
        Word src{i, i + 1, i + 3, z};
        out.push_back({src, braid_result(src, 0), swap_result(src, 2)});
      }
    }
  }
  return out;
}

ConfluenceReport check_local_confluence(const RewriteSystem& sys, int window) {
  ConfluenceReport rep;
  for (const CriticalPair& cp : critical_pairs(sys, window)) {
    ++rep.pairs_checked;
    if (reduce(sys, cp.left_result) != reduce(sys, cp.right_result)) {
      rep.violations.push_back(cp);
    }
  }
  return rep;
}

namespace {

// Split index of the decomposition w = w1 w2 such that
// reduce(w * g_i) = w1 * g_{i-|w2|} * w2; w must be E_H-reduced.
size_t append_split(const RewriteSystem& sys, const Word& w, gen_t i) {
  if (w.empty()) return 0;
  const size_t m = w.size();
  const gen_t k = w[m - 1];
  if (i <= k + 1) return m;
  if (i >= k + 3) return append_split(sys, w.prefix(m - 1), i - 1);
  // i == k + 2
  if (m == 1) return m;
  const gen_t l = w[m - 2];
  if (l != i - 3) return m;
  return append_split(sys, w.prefix(m - 2), i - 2);
}

}  // namespace

std::pair<Word, Word> append_reduce(const RewriteSystem& sys, const Word& w, gen_t g) {
  if (sys.monoid() != Monoid::H || !sys.standard_rules()) {
    throw std::invalid_argument("append_reduce is defined for the standard H system");
  }
  if (g < 1) throw std::invalid_argument("generator index must be >= 1");
  if (!is_reduced(sys, w)) {
    throw std::invalid_argument("append_reduce requires a reduced word");
  }
  size_t split = append_split(sys, w, g);
  Word w1 = w.prefix(split);
  Word w2 = w.suffix_from(split);
  if (g - static_cast<gen_t>(w2.size()) < 1) {
    throw std::logic_error("append_reduce produced an invalid shifted letter");
  }
  return {w1, w2};
}

}  // namespace garside
