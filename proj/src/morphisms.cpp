#include "garside/morphisms.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

Word project_pi(const Word& w) { return w; }

EventuallyShiftMap EventuallyShiftMap::identity() { return EventuallyShiftMap{}; }

EventuallyShiftMap EventuallyShiftMap::generator(gen_t i) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  EventuallyShiftMap f;
  f.table_.resize(i + 2);
  for (int k = 1; k <= i + 1; ++k) f.table_[k - 1] = k;
  f.table_[i + 1] = i;
  f.tail_ = 1;
  f.normalize();
  return f;
}

int EventuallyShiftMap::operator()(int k) const {
  if (k < 1) throw std::invalid_argument("arguments are positive integers");
  if (k <= window()) return table_[k - 1];
  return k - tail_;
}

void EventuallyShiftMap::normalize() {
  while (!table_.empty() && table_.back() == static_cast<int>(table_.size()) - tail_) {
    table_.pop_back();
  }
}

EventuallyShiftMap EventuallyShiftMap::after(const EventuallyShiftMap& g) const {
  EventuallyShiftMap h;
  const int w = std::max(g.window(), window() + g.tail_offset());
  h.table_.resize(w);
  for (int k = 1; k <= w; ++k) h.table_[k - 1] = (*this)(g(k));
  h.tail_ = tail_ + g.tail_;
  h.normalize();
  return h;
}

std::string EventuallyShiftMap::str() const {
  if (window() == 0 && tail_ == 0) return "k->k";
  std::ostringstream out;
  for (int k = 1; k <= window(); ++k) {
    out << k << "->" << table_[k - 1] << " ";
  }
  out << "k->k-" << tail_ << " for k>" << window();
  return out.str();
}

EventuallyShiftMap rho_of_word(const Word& w) {
  EventuallyShiftMap acc = EventuallyShiftMap::identity();
  for (size_t i = 0; i < w.size(); ++i) {
    acc = acc.after(EventuallyShiftMap::generator(w[i]));
  }
  return acc;
}

ShiftMapReport rho_check_relations(int window) {
  ShiftMapReport rep;
  for (const RelationInstance& rel : relation_instances(Presentation::h(), window)) {
    ++rep.instances_checked;
    if (!(rho_of_word(rel.lhs) == rho_of_word(rel.rhs))) rep.violations.push_back(rel);
  }
  return rep;
}

Poly Poly::t() {
  Poly p;
  p.c_ = {0, 1};
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly{};
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

long long Poly::eval(long long t) const {
  long long v = 0;
  for (size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
  return v;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long c = c_[i];
    if (c == 0) continue;
    std::string term;
    long long abs = c < 0 ? -c : c;
    if (i == 0) {
      term = std::to_string(abs);
    } else {
      term = abs == 1 ? "" : std::to_string(abs) + "*";
      term += "t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

TruncatedLinearMap TruncatedLinearMap::identity(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  TruncatedLinearMap m(dim);
  for (int k = 1; k <= dim; ++k) m.at(k, k) = Poly(1);
  return m;
}

TruncatedLinearMap TruncatedLinearMap::generator(gen_t i, int dim) {
  if (i < 1) throw std::invalid_argument("generator index must be >= 1");
  if (dim < i + 4) throw std::invalid_argument("dimension too small");
  TruncatedLinearMap m(dim);
  const Poly t = Poly::t();
  for (int k = 1; k <= i; ++k) m.at(k, k) = Poly(1);
  m.at(i + 1, i) = t;
  m.at(i + 1, i + 1) = Poly(1) - t;
  m.at(i + 2, i) = Poly(1) + t;
  m.at(i + 2, i + 1) = Poly(0) - t;
  for (int k = i + 3; k <= dim; ++k) m.at(k, k - 1) = Poly(1);
  return m;
}

const Poly& TruncatedLinearMap::entry(int row, int col) const {
  if (row < 1 || row > dim_ || col < 1 || col > dim_) {
    throw std::out_of_range("matrix entry out of range");
  }
  return m_[size_t(row - 1) * dim_ + (col - 1)];
}

TruncatedLinearMap operator*(const TruncatedLinearMap& a, const TruncatedLinearMap& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
  TruncatedLinearMap r(a.dim_);
  for (int i = 1; i <= a.dim_; ++i) {
    for (int k = 1; k <= a.dim_; ++k) {
      const Poly& aik = a.entry(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= a.dim_; ++j) {
        const Poly& bkj = b.entry(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + aik * bkj;
      }
    }
  }
  return r;
}

bool TruncatedLinearMap::equal_on_valid_rows(const TruncatedLinearMap& o) const {
  if (dim_ != o.dim_) return false;
  for (int row = 1; row <= dim_ - 1; ++row) {
    for (int col = 1; col <= dim_; ++col) {
      if (!(entry(row, col) == o.entry(row, col))) return false;
    }
  }
  return true;
}

TruncatedLinearMap TruncatedLinearMap::evaluated_at(long long t) const {
  TruncatedLinearMap r(dim_);
  for (int row = 1; row <= dim_; ++row) {
    for (int col = 1; col <= dim_; ++col) {
      r.at(row, col) = Poly(entry(row, col).eval(t));
    }
  }
  return r;
}

TruncatedLinearMap rho_tilde_of_word(const Word& w, int dim) {
  if (height(w) + 4 > dim) throw std::invalid_argument("dimension too small");
  TruncatedLinearMap acc = TruncatedLinearMap::identity(dim);
  // left-multiplying by each letter in turn makes the coordinate action
  // of the product match rho's composition order
  for (size_t i = 0; i < w.size(); ++i) {
    acc = TruncatedLinearMap::generator(w[i], dim) * acc;
  }
  return acc;
}

}  // namespace garside
