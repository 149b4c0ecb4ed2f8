#include "garside/simples.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace garside {

Rank Rank::whole(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  return Rank(2 * n);
}

Rank Rank::half(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  return Rank(2 * n + 1);
}

std::string Rank::str() const {
  return is_half() ? std::to_string(floor()) + ".5" : std::to_string(floor());
}

Rank Rank::parse(const std::string& text) {
  size_t dot = text.find('.');
  if (dot == std::string::npos) return whole(std::stoi(text));
  if (text.substr(dot) != ".5") throw std::invalid_argument("rank must be n or n.5");
  return half(std::stoi(text.substr(0, dot)));
}

Word delta_word(Monoid m, Rank r) {
  const int n = r.floor();
  if (m == Monoid::F) {
    if (r.is_half()) throw std::invalid_argument("half ranks are only defined for H");
    std::vector<gen_t> v;
    for (int i = 1; i <= 2 * n - 3; i += 2) v.push_back(i);
    return Word(std::move(v));
  }
  const int top = r.is_half() ? 3 * n - 4 : 3 * n - 5;
  std::vector<gen_t> v;
  for (int i = 1; i <= top; ++i) {
    if (i % 3 != 0) v.push_back(i);
  }
  return Word(std::move(v));
}

Word delta_nf(Monoid m, Rank r) {
  const int n = r.floor();
  if (m == Monoid::F) {
    if (r.is_half()) throw std::invalid_argument("half ranks are only defined for H");
    std::vector<gen_t> v;
    for (int i = n - 1; i >= 1; --i) v.push_back(i);
    return Word(std::move(v));
  }
  std::vector<gen_t> v;
  if (r.is_half()) {
    for (int k = n - 1; k >= 1; --k) {
      v.push_back(k);
      v.push_back(k + 1);
    }
  } else if (n >= 2) {
    v.push_back(n - 1);
    for (int k = n - 2; k >= 1; --k) {
      v.push_back(k);
      v.push_back(k + 1);
    }
  }
  return Word(std::move(v));
}

bool is_simple_nf(Monoid m, const Word& w) {
  if (m == Monoid::F) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] <= w[i + 1]) return false;
    }
    return true;
  }
  return !contains_factor(w, ObstructionSet::o_h()) &&
         !contains_factor(w, ObstructionSet::o_sigma());
}

std::string to_string(SimpleType t) {
  switch (t) {
    case SimpleType::none: return "-";
    case SimpleType::type0: return "0";
    case SimpleType::typeI: return "I";
    case SimpleType::typeII1: return "II1";
    case SimpleType::typeII2: return "II2";
  }
  return "?";
}

int index_of(Monoid m, const Word& nf) {
  if (!is_simple_nf(m, nf)) {
    throw std::invalid_argument(format_word(nf) + " is not the normal form of a simple element");
  }
  if (nf.empty()) return 1;
  return m == Monoid::H ? height(nf) + 1 : nf[0] + 1;
}

SimpleType classify_type(const Word& nf, int n) {
  if (n < 2) throw std::invalid_argument("type classification needs n >= 2");
  const int idx = index_of(Monoid::H, nf);
  if (idx > n) {
    throw std::invalid_argument(format_word(nf) + " does not divide the rank-" +
                                std::to_string(n) + " lcm");
  }
  if (idx < n) return SimpleType::type0;
  auto starts_with = [&](std::initializer_list<gen_t> pre) {
    if (nf.size() < pre.size()) return false;
    size_t i = 0;
    for (gen_t g : pre) {
      if (nf[i++] != g) return false;
    }
    return true;
  };
  if (starts_with({n - 1, n - 2, n - 1})) return SimpleType::typeII2;
  if (starts_with({n - 2, n - 1})) return SimpleType::typeII1;
  return SimpleType::typeI;
}

std::vector<SimpleType> membership_types(const Word& nf, int n, size_t budget) {
  const Presentation p = Presentation::h();
  std::vector<SimpleType> out;
  if (divides_left(p, nf, delta_word(Monoid::H, Rank::whole(n - 1)), budget).divides) {
    out.push_back(SimpleType::type0);
  }
  {
    DivisionResult d = divides_left(p, Word{n - 1}, nf, budget);
    if (d.divides &&
        divides_left(p, d.quotient, delta_word(Monoid::H, Rank::whole(n - 1)), budget).divides) {
      out.push_back(SimpleType::typeI);
    }
  }
  if (n >= 3) {
    DivisionResult d = divides_left(p, Word{n - 2, n - 1}, nf, budget);
    if (d.divides &&
        divides_left(p, d.quotient, delta_word(Monoid::H, Rank::half(n - 2)), budget).divides) {
      out.push_back(SimpleType::typeII1);
    }
    DivisionResult d2 = divides_left(p, Word{n - 1, n - 2, n - 1}, nf, budget);
    if (d2.divides && divides_left(p, Word{n - 2} + d2.quotient,
                                   delta_word(Monoid::H, Rank::whole(n - 1)), budget)
                          .divides) {
      out.push_back(SimpleType::typeII2);
    }
  }
  return out;
}

namespace {

bool forbidden_extension_h(const std::vector<gen_t>& cur, gen_t g) {
  const size_t k = cur.size();
  if (k >= 1) {
    const gen_t p1 = cur[k - 1];
    if (g >= p1 + 3) return true;           // reducible pair
    if (g == p1 || g == p1 + 2) return true;  // simple-NF pair obstructions
    if (k >= 2) {
      const gen_t p2 = cur[k - 2];
      if (p1 == p2 + 1 && (g == p2 || g == p2 + 2 || g == p2 + 3)) return true;
    }
  }
  return false;
}

void forbidden_dfs_h(std::vector<gen_t>& cur, int hmax, int maxlen, std::vector<Word>& out) {
  out.push_back(Word(cur));
  if (static_cast<int>(cur.size()) == maxlen) return;
  for (gen_t g = 1; g <= hmax; ++g) {
    if (forbidden_extension_h(cur, g)) continue;
    cur.push_back(g);
    forbidden_dfs_h(cur, hmax, maxlen, out);
    cur.pop_back();
  }
}

std::vector<Word> divisors_forbidden(Monoid m, Rank r) {
  if (r.is_half()) {
    throw std::invalid_argument("forbidden-factor enumeration needs a whole rank");
  }
  const int n = r.floor();
  if ((m == Monoid::F && n > 23) || (m == Monoid::H && n > 15)) {
    throw std::invalid_argument("enumeration past rank " +
                                std::string(m == Monoid::F ? "23" : "15") + " is refused");
  }
  std::vector<Word> out;
  if (m == Monoid::F) {
    // one strictly decreasing word per subset of {1..n-1}
    const int k = n - 1;
    for (unsigned mask = 0; mask < (1u << std::max(0, k)); ++mask) {
      std::vector<gen_t> v;
      for (int i = k; i >= 1; --i) {
        if (mask & (1u << (i - 1))) v.push_back(i);
      }
      out.push_back(Word(std::move(v)));
    }
  } else {
    std::vector<gen_t> cur;
    forbidden_dfs_h(cur, n - 1, std::max(0, 2 * n - 3), out);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> divisors_bfs(Monoid m, Rank r, size_t budget) {
  const Presentation p = m == Monoid::F ? Presentation::f() : Presentation::h();
  const RewriteSystem sys = m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
  const Word target = delta_word(m, r);
  const int n = r.floor();
  std::set<Word> found;
  std::deque<Word> queue;
  found.insert(Word{});
  queue.push_back(Word{});
  while (!queue.empty()) {
    Word b = queue.front();
    queue.pop_front();
    // the ceiling bound caps the last letter of any longer divisor
    const gen_t gmax = n + static_cast<gen_t>(b.size()) - 1;
    for (gen_t g = 1; g <= gmax; ++g) {
      Word cand = reduce(sys, b.append(g));
      if (found.count(cand)) continue;
      if (!divides_left(p, cand, target, budget).divides) continue;
      found.insert(cand);
      queue.push_back(cand);
    }
  }
  std::vector<Word> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> divisors_oracle(Monoid m, Rank r, size_t budget) {
  const Presentation p = m == Monoid::F ? Presentation::f() : Presentation::h();
  const RewriteSystem sys = m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
  CongruenceClass cls = class_saturate(p, delta_word(m, r), budget);
  if (cls.truncated) {
    throw BudgetExceeded("class of the delta word not fully enumerated within budget");
  }
  std::set<std::vector<gen_t>> seen_prefixes;
  std::set<Word> reps;  // lexicographically least member per class
  for (const Word& member : cls.members) {
    for (size_t len = 0; len <= member.size(); ++len) {
      Word pre = member.prefix(len);
      if (!seen_prefixes.insert(pre.letters()).second) continue;
      CongruenceClass pcls = class_saturate(p, pre, budget);
      if (pcls.truncated) {
        throw BudgetExceeded("prefix class not fully enumerated within budget");
      }
      reps.insert(pcls.members.front());
      for (const Word& eq : pcls.members) seen_prefixes.insert(eq.letters());
    }
  }
  std::vector<Word> out;
  out.reserve(reps.size());
  for (const Word& rep : reps) out.push_back(reduce(sys, rep));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace

std::vector<SimpleRecord> enumerate_divisors(Monoid m, Rank r, EnumMethod method, size_t budget) {
  std::vector<Word> nfs;
  switch (method) {
    case EnumMethod::forbidden_factors: nfs = divisors_forbidden(m, r); break;
    case EnumMethod::bfs_reversing: nfs = divisors_bfs(m, r, budget); break;
    case EnumMethod::oracle: nfs = divisors_oracle(m, r, budget); break;
  }
  std::vector<SimpleRecord> out;
  out.reserve(nfs.size());
  const bool classify = m == Monoid::H && !r.is_half() && r.floor() >= 2;
  for (Word& nf : nfs) {
    SimpleRecord rec;
    rec.monoid = m;
    rec.index = index_of(m, nf);
    rec.type = classify ? classify_type(nf, r.floor()) : SimpleType::none;
    rec.nf = std::move(nf);
    out.push_back(std::move(rec));
  }
  return out;
}

uint64_t CountTriangle::at(int n, int l) const {
  if (n < 2 || n > n_max || l < 0 || l > 2 * n - 3) return 0;
  return rows[n - 2][l];
}

CountTriangle count_triangle(int n_max) {
  if (n_max < 2) throw std::invalid_argument("triangle needs n_max >= 2");
  if (n_max > 40) throw std::invalid_argument("row sums overflow 64 bits past n = 40");
  CountTriangle tri;
  tri.n_max = n_max;
  tri.rows.push_back({1, 1});
  for (int n = 3; n <= n_max; ++n) {
    const std::vector<uint64_t>& prev = tri.rows.back();
    std::vector<uint64_t> row(2 * n - 2, 0);
    auto prev_at = [&](int l) -> uint64_t {
      return (l < 0 || l >= static_cast<int>(prev.size())) ? 0 : prev[l];
    };
    for (int l = 0; l <= 2 * n - 3; ++l) {
      row[l] = prev_at(l) + prev_at(l - 1) + prev_at(l - 2);
    }
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || hit[v - 1]) {
      throw std::invalid_argument("images do not describe a permutation of {1..k}");
    }
    hit[v - 1] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> v(degree);
  for (int i = 0; i < degree; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int degree, int p) {
  if (p < 1 || p + 1 > degree) throw std::invalid_argument("transposition out of range");
  Permutation f = identity(degree);
  std::swap(f.images_[p - 1], f.images_[p]);
  return f;
}

Permutation Permutation::after(const Permutation& g) const {
  if (degree() != g.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i) v[i - 1] = (*this)(g(i));
  return Permutation(std::move(v));
}

Word perm_to_word(const Permutation& f) {
  const int k = f.degree();
  std::vector<int> inv(k + 1, 0);
  for (int i = 1; i <= k; ++i) inv[f(i)] = i;
  std::vector<gen_t> letters;
  letters.reserve(k);
  for (int p = 1; p <= k; ++p) {
    int fhat = 0;
    for (int i = 1; i < inv[p]; ++i) {
      if (f(i) > p) ++fhat;
    }
    letters.push_back(2 * inv[p] - 1 - fhat);
  }
  return Word(std::move(letters));
}

std::vector<Word> greedy_decompose_f(const Word& w) {
  if (!is_reduced(RewriteSystem::ef(), w)) {
    throw std::invalid_argument("greedy decomposition expects an E_F-reduced word");
  }
  std::vector<Word> blocks;
  size_t start = 0;
  for (size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || w[i] >= w[i - 1]) {
      blocks.push_back(w.subword(start, i - start));
      start = i;
    }
  }
  return blocks;
}

BijectionCheck bijection_maps(int n, int l, size_t budget) {
  if (n < 3) throw std::invalid_argument("bijection check needs n >= 3");
  const Presentation p = Presentation::h();
  const RewriteSystem sys = RewriteSystem::eh();
  auto sigma = [&](int rank, int len) {
    std::vector<Word> out;
    for (const SimpleRecord& rec :
         enumerate_divisors(Monoid::H, Rank::whole(rank), EnumMethod::forbidden_factors)) {
      if (static_cast<int>(rec.nf.size()) == len) out.push_back(rec.nf);
    }
    return out;
  };

  BijectionCheck check;
  check.n = n;
  check.l = l;
  const Word half_target = delta_word(Monoid::H, Rank::half(n - 2));  // rank n - 1.5

  for (const Word& a : sigma(n - 1, l)) check.f0.push_back({a, a});
  for (const Word& a : sigma(n - 1, l - 1)) {
    check.fI.push_back({a, reduce(sys, Word{n - 1} + a)});
  }
  for (const Word& a : sigma(n - 1, l - 2)) {
    if (divides_left(p, a, half_target, budget).divides) {
      check.fII.push_back({a, reduce(sys, Word{n - 2, n - 1} + a)});
    } else {
      DivisionResult d = divides_left(p, Word{n - 2}, a, budget);
      if (!d.divides) {
        throw std::logic_error("divisor outside the half rank must start with g_{n-2}");
      }
      Word b = reduce(sys, d.quotient);
      check.fII.push_back({a, reduce(sys, Word{n - 1, n - 2, n - 1} + b)});
    }
  }

  auto image_set = [](const std::vector<std::pair<Word, Word>>& map) {
    std::set<Word> s;
    for (const auto& [pre, img] : map) s.insert(img);
    return s;
  };
  const std::set<Word> img0 = image_set(check.f0);
  const std::set<Word> imgI = image_set(check.fI);
  const std::set<Word> imgII = image_set(check.fII);
  check.injective = img0.size() == check.f0.size() && imgI.size() == check.fI.size() &&
                    imgII.size() == check.fII.size();

  std::set<Word> want0, wantI, wantII;
  for (const Word& a : sigma(n, l)) {
    switch (classify_type(a, n)) {
      case SimpleType::type0: want0.insert(a); break;
      case SimpleType::typeI: wantI.insert(a); break;
      case SimpleType::typeII1:
      case SimpleType::typeII2: wantII.insert(a); break;
      default: break;
    }
  }
  check.images_match = img0 == want0 && imgI == wantI && imgII == wantII;
  return check;
}

}  // namespace garside
