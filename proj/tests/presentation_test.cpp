#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "garside/presentation.hpp"
#include "garside/word.hpp"

using namespace garside;

namespace {

std::set<Word> member_set(const CongruenceClass& cls) {
  return std::set<Word>(cls.members.begin(), cls.members.end());
}

}  // namespace

TEST_CASE("match_relations at a position") {
  CHECK(match_relations(Presentation::h(), Word{1, 2, 4}, 0) == std::vector<Word>{Word{2, 1, 2}});
  CHECK(match_relations(Presentation::f(), Word{1, 3}, 0) == std::vector<Word>{Word{2, 1}});
  CHECK(match_relations(Presentation::h(), Word{1, 2}, 0).empty());
  CHECK(match_relations(Presentation::h(), Word{2, 1, 2}, 0) == std::vector<Word>{Word{1, 2, 4}});
  CHECK_THROWS_AS(match_relations(Presentation::h(), Word{1}, 1), std::out_of_range);
}

TEST_CASE("class_saturate on small words") {
  {
    CongruenceClass cls = class_saturate(Presentation::h(), Word{1, 2, 4});
    CHECK(member_set(cls) == std::set<Word>{Word{1, 2, 4}, Word{2, 1, 2}});
    CHECK_FALSE(cls.truncated);
  }
  {
    CongruenceClass cls = class_saturate(Presentation::f(), Word{1, 3});
    CHECK(member_set(cls) == std::set<Word>{Word{1, 3}, Word{2, 1}});
  }
  {
    CongruenceClass cls = class_saturate(Presentation::h(), Word{1});
    CHECK(member_set(cls) == std::set<Word>{Word{1}});
  }
}

TEST_CASE("class_saturate respects the ceiling^length bound") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 5), idx(1, 5);
  for (Monoid m : {Monoid::F, Monoid::H}) {
    const Presentation p = m == Monoid::F ? Presentation::f() : Presentation::h();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<gen_t> v(len(rng));
      for (gen_t& g : v) g = idx(rng);
      Word w(v);
      CongruenceClass cls = class_saturate(p, w);
      REQUIRE_FALSE(cls.truncated);
      const double bound = std::pow(double(ceiling(w)), double(w.size()));
      CHECK(double(cls.members.size()) <= bound);
      // members share length and ceiling
      for (const Word& member : cls.members) {
        CHECK(member.size() == w.size());
        CHECK(ceiling(member) == ceiling(w));
      }
    }
  }
}

TEST_CASE("saturation truncates under a tiny budget and the oracle refuses") {
  CongruenceClass cls = class_saturate(Presentation::f(), Word{1, 3, 5}, 2);
  CHECK(cls.truncated);
  CHECK(cls.members.size() <= 2);
  CHECK_THROWS_AS(oracle_equal(Presentation::f(), Word{1, 3, 5}, Word{5, 3, 1}, 2),
                  BudgetExceeded);
}

TEST_CASE("oracle_equal") {
  CHECK(oracle_equal(Presentation::f(), Word{2, 1}, Word{1, 3}));
  CHECK_FALSE(oracle_equal(Presentation::h(), Word{2, 1}, Word{1, 3}));
  CHECK(oracle_equal(Presentation::h(), Word{2, 1}, Word{2, 1}));
  CHECK(oracle_equal(Presentation::h(), Word{}, Word{}));
}

TEST_CASE("oracle_equal is symmetric and transitive on samples") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 5), idx(1, 4);
  const Presentation p = Presentation::h();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<gen_t> v(len(rng));
    for (gen_t& g : v) g = idx(rng);
    Word w(v);
    CongruenceClass cls = class_saturate(p, w);
    REQUIRE_FALSE(cls.truncated);
    for (const Word& a : cls.members) {
      CHECK(oracle_equal(p, a, w));
      CHECK(oracle_equal(p, w, a));
    }
  }
}

TEST_CASE("oracle_divides_left") {
  CHECK(oracle_divides_left(Presentation::h(), Word{2}, Word{1, 2, 4}));
  CHECK_FALSE(oracle_divides_left(Presentation::h(), Word{2, 4}, Word{1, 2, 4}));
  CHECK(oracle_divides_left(Presentation::h(), Word{}, Word{1, 2, 4}));
  CHECK(oracle_divides_left(Presentation::f(), Word{}, Word{}));
}

TEST_CASE("relation instances are homogeneous and right complemented") {
  for (const Presentation& p : {Presentation::f(), Presentation::h()}) {
    std::map<std::pair<gen_t, gen_t>, int> heads;
    for (const RelationInstance& rel : relation_instances(p, 12)) {
      CHECK(rel.lhs.size() == rel.rhs.size());
      CHECK(ceiling(rel.lhs) == ceiling(rel.rhs));
      REQUIRE_FALSE(rel.lhs.empty());
      CHECK(rel.lhs[0] != rel.rhs[0]);  // no relation s... = s...
      gen_t a = rel.lhs[0], b = rel.rhs[0];
      ++heads[{std::min(a, b), std::max(a, b)}];
    }
    for (const auto& [pair, count] : heads) {
      CHECK(count == 1);  // at most one relation s... = t...
    }
  }
}

TEST_CASE("mirrored instances are letter-reversed standard instances") {
  auto std_rels = relation_instances(Presentation::h(), 8);
  auto mir_rels = relation_instances(Presentation::h_mirrored(), 8);
  REQUIRE(std_rels.size() == mir_rels.size());
  for (size_t i = 0; i < std_rels.size(); ++i) {
    CHECK(mir_rels[i].lhs == std_rels[i].lhs.reversed());
    CHECK(mir_rels[i].rhs == std_rels[i].rhs.reversed());
  }
}
