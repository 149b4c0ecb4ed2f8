#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "garside/presentation.hpp"
#include "garside/rewrite.hpp"
#include "garside/word.hpp"

using namespace garside;

namespace {

std::set<Word> once_set(const RewriteSystem& sys, const Word& w) {
  auto v = rewrite_once(sys, w);
  return std::set<Word>(v.begin(), v.end());
}

Word random_word(std::mt19937_64& rng, int max_len, int max_idx) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, max_idx);
  std::vector<gen_t> v(len(rng));
  for (gen_t& g : v) g = idx(rng);
  return Word(v);
}

// every word over indices <= max_idx with length <= max_len
void all_words(std::vector<gen_t>& cur, int max_idx, int max_len, std::vector<Word>& out) {
  out.push_back(Word(cur));
  if (static_cast<int>(cur.size()) == max_len) return;
  for (gen_t g = 1; g <= max_idx; ++g) {
    cur.push_back(g);
    all_words(cur, max_idx, max_len, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("rewrite_once") {
  CHECK(once_set(RewriteSystem::ef(), Word{1, 3, 5}) ==
        std::set<Word>{Word{2, 1, 5}, Word{1, 4, 3}});
  CHECK(once_set(RewriteSystem::eh(), Word{1, 2, 4}) == std::set<Word>{Word{2, 1, 2}});
  CHECK(once_set(RewriteSystem::eh(), Word{2, 1, 2}).empty());
}

TEST_CASE("reduce") {
  CHECK(reduce(RewriteSystem::ef(), Word{1, 3, 5}) == Word{3, 2, 1});
  CHECK(reduce(RewriteSystem::eh(), Word{1, 2, 4, 5, 7}) == Word{3, 2, 3, 1, 2});
  CHECK(reduce(RewriteSystem::eh(), Word{2, 1, 2}) == Word{2, 1, 2});
  // idempotent
  Word nf = reduce(RewriteSystem::eh(), Word{1, 2, 4, 5, 7});
  CHECK(reduce(RewriteSystem::eh(), nf) == nf);
}

TEST_CASE("reduce traces report positions and intermediate words") {
  std::vector<RewriteStep> steps;
  reduce(RewriteSystem::eh(), Word{1, 2, 4}, &steps);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0].pos == 0);
  CHECK(steps[0].before == Word{1, 2, 4});
  CHECK(steps[0].after == Word{2, 1, 2});
}

TEST_CASE("is_reduced") {
  CHECK(is_reduced(RewriteSystem::eh(), Word{2, 4}));
  CHECK_FALSE(is_reduced(RewriteSystem::eh(), Word{1, 4}));
  CHECK(is_reduced(RewriteSystem::ef(), Word{1, 2}));
  CHECK(is_reduced(RewriteSystem::ef(), Word{2, 1}));
  CHECK_FALSE(is_reduced(RewriteSystem::ef(), Word{1, 3}));
}

TEST_CASE("contains_factor") {
  CHECK_FALSE(contains_factor(Word{2, 1, 2}, ObstructionSet::o_sigma()));
  CHECK(contains_factor(Word{1, 2, 3}, ObstructionSet::o_sigma()));
  CHECK(contains_factor(Word{2, 4}, ObstructionSet::o_sigma()));
  CHECK(contains_factor(Word{1, 4}, ObstructionSet::o_h()));
  CHECK(contains_factor(Word{2, 1, 2, 4}, ObstructionSet::o_h()));  // factor g1 g2 g4
  CHECK_FALSE(contains_factor(Word{2, 1, 2}, ObstructionSet::o_h()));
  CHECK(contains_factor(Word{1, 3}, ObstructionSet::o_f()));
  CHECK_FALSE(contains_factor(Word{2, 1}, ObstructionSet::o_f()));
}

TEST_CASE("reducedness coincides with avoiding the obstruction factors") {
  std::vector<Word> words;
  std::vector<gen_t> cur;
  all_words(cur, 6, 4, words);
  for (const Word& w : words) {
    CHECK(is_reduced(RewriteSystem::ef(), w) == !contains_factor(w, ObstructionSet::o_f()));
    CHECK(is_reduced(RewriteSystem::eh(), w) == !contains_factor(w, ObstructionSet::o_h()));
  }
}

TEST_CASE("critical pair families") {
  auto pairs_f = critical_pairs(RewriteSystem::ef(), 10);
  for (const CriticalPair& cp : pairs_f) {
    REQUIRE(cp.source.size() == 3);
    // the shape g_x g_y g_z with y >= x+2, z >= y+2
    CHECK(cp.source[1] >= cp.source[0] + 2);
    CHECK(cp.source[2] >= cp.source[1] + 2);
  }
  auto pairs_h = critical_pairs(RewriteSystem::eh(), 10);
  bool found_instance = false;
  for (const CriticalPair& cp : pairs_h) {
    if (cp.source == Word{1, 2, 4, 5, 7}) {
      found_instance = true;
      CHECK(reduce(RewriteSystem::eh(), cp.left_result) == Word{3, 2, 3, 1, 2});
      CHECK(reduce(RewriteSystem::eh(), cp.right_result) == Word{3, 2, 3, 1, 2});
    }
  }
  CHECK(found_instance);
  // every source belongs to one of the four overlap families
  for (const CriticalPair& cp : pairs_h) {
    const Word& s = cp.source;
    bool swap_swap = s.size() == 3 && s[1] >= s[0] + 3 && s[2] >= s[1] + 3;
    bool braid_braid = s.size() == 5 && s[1] == s[0] + 1 && s[2] == s[0] + 3 &&
                       s[3] == s[0] + 4 && s[4] == s[0] + 6;
    bool swap_braid =
        s.size() == 4 && s[1] >= s[0] + 3 && s[2] == s[1] + 1 && s[3] == s[1] + 3;
    bool braid_swap =
        s.size() == 4 && s[1] == s[0] + 1 && s[2] == s[0] + 3 && s[3] >= s[2] + 3;
    CHECK((swap_swap || braid_braid || swap_braid || braid_swap));
  }
  CHECK_THROWS_AS(critical_pairs(RewriteSystem::ef(), 4), std::invalid_argument);
}

TEST_CASE("local confluence holds for both systems and fails for the mutated one") {
  CHECK(check_local_confluence(RewriteSystem::ef(), 30).ok());
  CHECK(check_local_confluence(RewriteSystem::eh(), 30).ok());
  ConfluenceReport mutated = check_local_confluence(RewriteSystem::eh_mutated(), 30);
  CHECK_FALSE(mutated.ok());
}

TEST_CASE("every applied step lowers the index sum") {
  std::mt19937_64 rng(23);
  for (Monoid m : {Monoid::F, Monoid::H}) {
    const RewriteSystem sys = m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
    for (int trial = 0; trial < 200; ++trial) {
      Word w = random_word(rng, 10, 8);
      std::vector<RewriteStep> steps;
      reduce(sys, w, &steps);
      for (const RewriteStep& s : steps) {
        auto sum = [](const Word& x) {
          return std::accumulate(x.letters().begin(), x.letters().end(), 0);
        };
        CHECK(sum(s.after) < sum(s.before));
      }
    }
  }
}

TEST_CASE("one H step projects to one or two F steps") {
  std::mt19937_64 rng(29);
  const RewriteSystem eh = RewriteSystem::eh();
  const RewriteSystem ef = RewriteSystem::ef();
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 8, 6);
    for (const Word& w2 : rewrite_once(eh, w)) {
      // same letter sequences under the projection
      bool one_step = false, two_step = false;
      for (const Word& mid : rewrite_once(ef, w)) {
        if (mid == w2) one_step = true;
        for (const Word& end : rewrite_once(ef, mid)) {
          if (end == w2) two_step = true;
        }
      }
      CHECK((one_step || two_step));
    }
  }
}

TEST_CASE("reduction is strategy independent") {
  std::mt19937_64 rng(31);
  for (Monoid m : {Monoid::F, Monoid::H}) {
    const RewriteSystem sys = m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
    for (int trial = 0; trial < 300; ++trial) {
      Word w = random_word(rng, 10, 8);
      CHECK(reduce_with_strategy(sys, w, RedexStrategy::leftmost) ==
            reduce_with_strategy(sys, w, RedexStrategy::rightmost));
    }
  }
}

TEST_CASE("reduce stays in the congruence class") {
  std::mt19937_64 rng(37);
  for (Monoid m : {Monoid::F, Monoid::H}) {
    const RewriteSystem sys = m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
    const Presentation p = m == Monoid::F ? Presentation::f() : Presentation::h();
    for (int trial = 0; trial < 40; ++trial) {
      Word w = random_word(rng, 6, 5);
      CHECK(oracle_equal(p, reduce(sys, w), w));
    }
  }
}

TEST_CASE("factors of reduced words are reduced") {
  std::mt19937_64 rng(41);
  const RewriteSystem eh = RewriteSystem::eh();
  for (int trial = 0; trial < 200; ++trial) {
    Word nf = reduce(eh, random_word(rng, 10, 8));
    for (size_t pos = 0; pos < nf.size(); ++pos) {
      for (size_t len = 0; pos + len <= nf.size(); ++len) {
        CHECK(is_reduced(eh, nf.subword(pos, len)));
      }
    }
  }
}

TEST_CASE("gluing reduced words fails exactly at the four boundary patterns") {
  std::vector<Word> words;
  std::vector<gen_t> cur;
  all_words(cur, 8, 3, words);

  auto exceptional = [](const Word& u, const Word& v, const Word& w) {
    if (v.empty() && !u.empty() && !w.empty()) {
      gen_t i = u[u.size() - 1];
      if (w[0] >= i + 3) return true;
      if (w.size() >= 2 && w[0] == i + 1 && w[1] == i + 3) return true;
      if (u.size() >= 2 && u[u.size() - 2] == i - 1 && w[0] == i + 2) return true;
    }
    if (v.size() == 1 && !u.empty() && !w.empty()) {
      gen_t i = u[u.size() - 1];
      if (v[0] == i + 1 && w[0] == i + 3) return true;
    }
    return false;
  };

  auto scan_reduced = [](const std::vector<gen_t>& v) {
    for (size_t p = 0; p + 2 <= v.size(); ++p) {
      if (v[p + 1] >= v[p] + 3) return false;
      if (p + 3 <= v.size() && v[p + 1] == v[p] + 1 && v[p + 2] == v[p] + 3) return false;
    }
    return true;
  };

  // precompute which suffixes glue with which prefixes
  std::vector<std::vector<size_t>> w_for_v(words.size());
  std::vector<gen_t> buf;
  for (size_t vi = 0; vi < words.size(); ++vi) {
    for (size_t wi = 0; wi < words.size(); ++wi) {
      buf = words[vi].letters();
      buf.insert(buf.end(), words[wi].letters().begin(), words[wi].letters().end());
      if (scan_reduced(buf)) w_for_v[vi].push_back(wi);
    }
  }
  size_t checked = 0, mismatches = 0;
  for (size_t ui = 0; ui < words.size(); ++ui) {
    for (size_t vi = 0; vi < words.size(); ++vi) {
      buf = words[ui].letters();
      buf.insert(buf.end(), words[vi].letters().begin(), words[vi].letters().end());
      if (!scan_reduced(buf)) continue;
      const size_t uv_len = buf.size();
      for (size_t wi : w_for_v[vi]) {
        buf.resize(uv_len);
        buf.insert(buf.end(), words[wi].letters().begin(), words[wi].letters().end());
        const bool glued = scan_reduced(buf);
        const bool exc = exceptional(words[ui], words[vi], words[wi]);
        if (glued == exc) ++mismatches;
        ++checked;
      }
    }
  }
  CHECK(mismatches == 0);
  CHECK(checked > 1000000);
}

TEST_CASE("append_reduce matches reduce and splits the word") {
  const RewriteSystem eh = RewriteSystem::eh();
  {
    auto [w1, w2] = append_reduce(eh, Word{}, 3);
    CHECK(w1 == Word{});
    CHECK(w2 == Word{});
  }
  {
    auto [w1, w2] = append_reduce(eh, Word{1}, 4);
    CHECK(w1 == Word{});
    CHECK(w2 == Word{1});
    CHECK(reduce(eh, Word{1, 4}) == Word{3, 1});
  }
  {
    auto [w1, w2] = append_reduce(eh, Word{1, 2}, 4);
    CHECK(w1 == Word{});
    CHECK(w2 == Word{1, 2});
    CHECK(reduce(eh, Word{1, 2, 4}) == Word{2, 1, 2});
  }
  CHECK_THROWS_AS(append_reduce(eh, Word{1, 4}, 2), std::invalid_argument);
  CHECK_THROWS_AS(append_reduce(RewriteSystem::ef(), Word{1}, 2), std::invalid_argument);

  // oracle cross-check on smaller bounds than the acceptance run
  std::vector<Word> words;
  std::vector<gen_t> cur;
  all_words(cur, 5, 4, words);
  for (const Word& w : words) {
    if (!is_reduced(eh, w)) continue;
    for (gen_t i = 1; i <= 8; ++i) {
      auto [w1, w2] = append_reduce(eh, w, i);
      CHECK(w1 + w2 == w);
      CHECK(w1 + Word{i - static_cast<gen_t>(w2.size())} + w2 == reduce(eh, w.append(i)));
    }
  }
}
