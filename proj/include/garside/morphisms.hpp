#ifndef GARSIDE_MORPHISMS_HPP
#define GARSIDE_MORPHISMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "garside/presentation.hpp"
#include "garside/word.hpp"

namespace garside {

// The projection H -> F that keeps every letter index. The word is
// unchanged; only the monoid tag of downstream operations switches.
Word project_pi(const Word& w);

// A self-map of the positive integers that agrees with k |-> k - d
// beyond a finite window. Stored normalized, so operator== is exact
// map equality.
class EventuallyShiftMap {
 public:
  static EventuallyShiftMap identity();
  // k for k <= i+1, then i at i+2, then k-1 from i+3 on
  static EventuallyShiftMap generator(gen_t i);

  int operator()(int k) const;
  // composition (this o g)(k) = this(g(k))
  EventuallyShiftMap after(const EventuallyShiftMap& g) const;

  int window() const { return static_cast<int>(table_.size()); }
  int tail_offset() const { return tail_; }
  bool operator==(const EventuallyShiftMap&) const = default;
  std::string str() const;

 private:
  void normalize();
  std::vector<int> table_;  // values on 1..window
  int tail_ = 0;
};

// Image of a word: letters act as functions, rightmost letter first,
// so the map of u v is map(u) o map(v).
EventuallyShiftMap rho_of_word(const Word& w);

struct ShiftMapReport {
  size_t instances_checked = 0;
  std::vector<RelationInstance> violations;
  bool ok() const { return violations.empty(); }
};

// Both sides of every H relation instance with parameters <= window must
// give the same map.
ShiftMapReport rho_check_relations(int index_window);

// Integer polynomials in one variable t.
class Poly {
 public:
  Poly() = default;
  Poly(long long c) : c_(c == 0 ? std::vector<long long>{} : std::vector<long long>{c}) {}
  static Poly t();

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly&) const = default;
  bool is_zero() const { return c_.empty(); }
  long long eval(long long t) const;
  std::string str() const;  // "1-2*t+t^2" style

 private:
  void trim();
  std::vector<long long> c_;  // c_[k] = coefficient of t^k
};

// An N x N window of the band matrix attached to a word. Row k of a
// generator matrix reads only columns <= k, so products of windows agree
// with the untruncated products; identity checks still quantify only
// over rows 1..N-1.
class TruncatedLinearMap {
 public:
  static TruncatedLinearMap identity(int dim);
  // rows: k for k <= i; t x_i + (1-t) x_{i+1} at i+1;
  // (1+t) x_i - t x_{i+1} at i+2; x_{k-1} from i+3 on
  static TruncatedLinearMap generator(gen_t i, int dim);

  int dimension() const { return dim_; }
  const Poly& entry(int row, int col) const;  // 1-based

  friend TruncatedLinearMap operator*(const TruncatedLinearMap& a, const TruncatedLinearMap& b);

  bool equal_on_valid_rows(const TruncatedLinearMap& o) const;  // rows 1..dim-1
  TruncatedLinearMap evaluated_at(long long t) const;

 private:
  explicit TruncatedLinearMap(int dim) : dim_(dim), m_(size_t(dim) * dim) {}
  Poly& at(int row, int col) { return m_[size_t(row - 1) * dim_ + (col - 1)]; }

  int dim_;
  std::vector<Poly> m_;
};

// Symbolic image of a word, in the composition convention of rho: the
// coordinate action of the product equals rho(w) at t = 0. Requires
// dim >= max index + 4.
TruncatedLinearMap rho_tilde_of_word(const Word& w, int dim);

}  // namespace garside

#endif  // GARSIDE_MORPHISMS_HPP
