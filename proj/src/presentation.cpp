#include "garside/presentation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace garside {

namespace {

struct VecHash {
  size_t operator()(const std::vector<gen_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (gen_t g : v) {
      h ^= static_cast<size_t>(g) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

std::vector<RelationInstance> relation_instances(const Presentation& p, int window) {
  std::vector<RelationInstance> rels;
  const int gap = p.monoid == Monoid::F ? 1 : 2;
  for (int i = 1; i <= window; ++i) {
    for (int j = i + gap; j <= window; ++j) {
      rels.push_back({Word{j, i}, Word{i, j + 1}});
    }
    if (p.monoid == Monoid::H) {
      rels.push_back({Word{i + 1, i, i + 1}, Word{i, i + 1, i + 3}});
    }
  }
  if (p.orientation == Orientation::mirrored) {
    for (RelationInstance& r : rels) {
      r.lhs = r.lhs.reversed();
      r.rhs = r.rhs.reversed();
    }
  }
  return rels;
}

std::vector<Word> match_relations(const Presentation& p, const Word& w, size_t pos) {
  if (pos >= w.size()) throw std::out_of_range("position past end of word");
  std::vector<Word> out;
  auto emit2 = [&](gen_t a, gen_t b) {
    std::vector<gen_t> v = w.letters();
    v[pos] = a;
    v[pos + 1] = b;
    out.emplace_back(std::move(v));
  };
  auto emit3 = [&](gen_t a, gen_t b, gen_t c) {
    std::vector<gen_t> v = w.letters();
    v[pos] = a;
    v[pos + 1] = b;
    v[pos + 2] = c;
    out.emplace_back(std::move(v));
  };
  const bool std_or = p.orientation == Orientation::standard;
  const int gap = p.monoid == Monoid::F ? 1 : 2;
  if (pos + 2 <= w.size()) {
    gen_t a = w[pos], b = w[pos + 1];
    if (std_or) {
      if (a >= b + gap) emit2(b, a + 1);      // g_j g_i -> g_i g_{j+1}
      if (b >= a + gap + 1) emit2(b - 1, a);  // g_i g_{j+1} -> g_j g_i
    } else {
      if (b >= a + gap) emit2(b + 1, a);      // g_i g_j -> g_{j+1} g_i
      if (a >= b + gap + 1) emit2(b, a - 1);  // g_{j+1} g_i -> g_i g_j
    }
  }
  if (p.monoid == Monoid::H && pos + 3 <= w.size()) {
    gen_t a = w[pos], b = w[pos + 1], c = w[pos + 2];
    if (std_or) {
      if (a == b + 1 && c == a) emit3(b, a, b + 3);
      if (b == a + 1 && c == a + 3) emit3(a + 1, a, a + 1);
    } else {
      if (a == b + 1 && c == a) emit3(b + 3, a, b);
      if (a == c + 3 && b == c + 1) emit3(c + 1, c, c + 1);
    }
  }
  return out;
}

CongruenceClass class_saturate(const Presentation& p, const Word& w, size_t budget) {
  if (budget < 1) throw std::invalid_argument("saturation budget must be >= 1");
  std::unordered_set<std::vector<gen_t>, VecHash> seen;
  std::deque<std::vector<gen_t>> queue;
  bool truncated = false;
  seen.insert(w.letters());
  queue.push_back(w.letters());
  while (!queue.empty() && !truncated) {
    Word cur(queue.front());
    queue.pop_front();
    for (size_t pos = 0; pos < cur.size() && !truncated; ++pos) {
      for (Word& nx : match_relations(p, cur, pos)) {
        if (seen.count(nx.letters())) continue;
        if (seen.size() >= budget) {
          truncated = true;
          break;
        }
        seen.insert(nx.letters());
        queue.push_back(nx.letters());
      }
    }
  }
  CongruenceClass cls;
  cls.representative = w;
  cls.truncated = truncated;
  cls.members.reserve(seen.size());
  for (const auto& v : seen) cls.members.emplace_back(Word(v));
  std::sort(cls.members.begin(), cls.members.end());
  return cls;
}

bool oracle_equal(const Presentation& p, const Word& u, const Word& v, size_t budget) {
  if (u == v) return true;
  if (u.size() != v.size()) return false;  // relations are homogeneous
  CongruenceClass cls = class_saturate(p, u, budget);
  if (cls.truncated) {
    throw BudgetExceeded("class of " + format_word(u) + " not fully enumerated within budget");
  }
  return std::binary_search(cls.members.begin(), cls.members.end(), v);
}

bool oracle_divides_left(const Presentation& p, const Word& a, const Word& b, size_t budget) {
  if (a.empty()) return true;
  if (a.size() > b.size()) return false;
  CongruenceClass cls_a = class_saturate(p, a, budget);
  if (cls_a.truncated) {
    throw BudgetExceeded("class of " + format_word(a) + " not fully enumerated within budget");
  }
  CongruenceClass cls_b = class_saturate(p, b, budget);
  if (cls_b.truncated) {
    throw BudgetExceeded("class of " + format_word(b) + " not fully enumerated within budget");
  }
  for (const Word& m : cls_b.members) {
    Word pre = m.prefix(a.size());
    if (std::binary_search(cls_a.members.begin(), cls_a.members.end(), pre)) return true;
  }
  return false;
}

}  // namespace garside
