#include "garside/reversing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <list>
#include <sstream>

namespace garside {

std::string to_string(GridStatus s) {
  switch (s) {
    case GridStatus::complete: return "complete";
    case GridStatus::budget_exceeded: return "budget_exceeded";
    case GridStatus::stuck: return "stuck";
  }
  return "?";
}

std::optional<ComplementEntry> complement(const Presentation& p, gen_t s, gen_t t) {
  if (s < 1 || t < 1) throw std::invalid_argument("complement expects generator indices");
  if (s == t) return ComplementEntry{Word{}, Word{}};
  const bool std_or = p.orientation == Orientation::standard;
  if (p.monoid == Monoid::F) {
    if (std_or) {
      if (s > t) return ComplementEntry{Word{t}, Word{s + 1}};
      return ComplementEntry{Word{t + 1}, Word{s}};
    }
    if (std::abs(s - t) == 1) return std::nullopt;
    if (t >= s + 2) return ComplementEntry{Word{t - 1}, Word{s}};
    return ComplementEntry{Word{t}, Word{s - 1}};
  }
  if (std_or) {
    if (s >= t + 2) return ComplementEntry{Word{t}, Word{s + 1}};
    if (t >= s + 2) return ComplementEntry{Word{t + 1}, Word{s}};
    if (s == t + 1) return ComplementEntry{Word{t, t + 1}, Word{t + 1, t + 3}};
    return ComplementEntry{Word{s + 1, s + 3}, Word{s, s + 1}};  // t == s + 1
  }
  // mirrored H
  if (std::abs(s - t) == 1) return std::nullopt;
  if (t == s + 2) {
    if (s < 2) return std::nullopt;  // base index of the mirrored 3-letter relation would be 0
    return ComplementEntry{Word{s - 1, s}, Word{s, s - 1}};
  }
  if (s == t + 2) {
    if (t < 2) return std::nullopt;
    return ComplementEntry{Word{t, t - 1}, Word{t - 1, t}};
  }
  if (t >= s + 3) return ComplementEntry{Word{t - 1}, Word{s}};
  return ComplementEntry{Word{t}, Word{s - 1}};  // s >= t + 3
}

namespace {

// One edge of the reversing front, reading the staircase path from the
// bottom-left corner of the diagram to the top-right. Vertical edges
// point up (y1 < y0), horizontal edges point right.
struct PathEdge {
  bool vertical;
  gen_t g;  // 0 = epsilon
  double x0, y0, x1, y1;
};

}  // namespace

// Core construction. When label_cap > 0, the build aborts with *hit_cap
// = true as soon as any edge label exceeds the cap. Any completed grid
// whose right output is empty has all labels bounded by the ceiling of
// its top input (induction over the first cell and the two sub-grids it
// spawns), so capping at that ceiling soundly refutes divisibility even
// when the uncapped grid would grow forever.
static ReversingGrid reverse_core(const Presentation& p, const Word& u, const Word& v,
                                  size_t budget, gen_t label_cap, bool* hit_cap) {
  if (budget < 1) throw std::invalid_argument("reversing budget must be >= 1");
  ReversingGrid grid;
  grid.left_input = u;
  grid.top_input = v;
  if (label_cap > 0 && height(u) > label_cap) {
    *hit_cap = true;
    grid.status = GridStatus::budget_exceeded;
    return grid;
  }

  std::list<PathEdge> path;
  const size_t m = u.size(), n = v.size();
  for (size_t k = m; k >= 1; --k) {
    path.push_back({true, u[k - 1], 0.0, double(k), 0.0, double(k - 1)});
  }
  for (size_t k = 1; k <= n; ++k) {
    path.push_back({false, v[k - 1], double(k - 1), 0.0, double(k), 0.0});
  }

  // Rightmost-corner strategy. After a replacement, the rightmost corner
  // sits at the replacement's right junction or further left, so the
  // leftward scan resumes from there instead of the far right.
  auto scan_left = [&path](std::list<PathEdge>::iterator from) {
    // returns the U edge of the rightmost corner whose R edge is at or
    // left of `from`
    for (auto it = from; it != path.begin();) {
      auto prev = std::prev(it);
      if (it != path.end() && prev->vertical && !it->vertical) return prev;
      it = prev;
    }
    return path.end();
  };

  size_t cells = 0;
  auto corner = scan_left(path.end());
  while (corner != path.end()) {
    const PathEdge up = *corner;
    const PathEdge right = *std::next(corner);
    const gen_t s = up.g, t = right.g;
    Word bottom, rightw;
    if (s != 0 && t != 0) {
      auto ce = complement(p, s, t);
      if (!ce) {
        grid.status = GridStatus::stuck;
        grid.stuck_left = s;
        grid.stuck_top = t;
        return grid;
      }
      bottom = ce->bottom;
      rightw = ce->right;
    } else if (s == 0 && t != 0) {
      bottom = Word{t};  // epsilon passes the top label through
    } else if (s != 0 && t == 0) {
      rightw = Word{s};
    }
    if (label_cap > 0 &&
        (height(bottom) > label_cap || height(rightw) > label_cap)) {
      *hit_cap = true;
      grid.status = GridStatus::budget_exceeded;
      return grid;
    }
    if (cells >= budget) {
      grid.status = GridStatus::budget_exceeded;
      return grid;
    }
    ++cells;

    const double x = up.x0, yb = up.y0, yt = up.y1, xr = right.x1;
    grid.cells.push_back({s, t, bottom, rightw, x, yt, xr, yb});

    auto insert_at = path.erase(corner, std::next(corner, 2));
    const size_t q = bottom.size();
    if (q == 0) {
      path.insert(insert_at, {false, 0, x, yb, xr, yb});
    } else {
      for (size_t j = 0; j < q; ++j) {
        path.insert(insert_at, {false, bottom[j], x + double(j) * (xr - x) / double(q), yb,
                                x + double(j + 1) * (xr - x) / double(q), yb});
      }
    }
    const size_t pc = rightw.size();
    if (pc == 0) {
      path.insert(insert_at, {true, 0, xr, yb, xr, yt});
    } else {
      for (size_t j = pc; j >= 1; --j) {
        path.insert(insert_at,
                    {true, rightw[j - 1], xr, yt + double(j) * (yb - yt) / double(pc), xr,
                     yt + double(j - 1) * (yb - yt) / double(pc)});
      }
    }
    corner = scan_left(insert_at);
  }

  std::vector<gen_t> vout, uout;
  for (const PathEdge& e : path) {
    if (e.g == 0) continue;
    if (e.vertical) {
      uout.push_back(e.g);
    } else {
      vout.push_back(e.g);
    }
  }
  std::reverse(uout.begin(), uout.end());  // right edge reads top to bottom
  grid.right_output = Word(std::move(uout));
  grid.bottom_output = Word(std::move(vout));
  grid.status = GridStatus::complete;
  return grid;
}

ReversingGrid reverse_right(const Presentation& p, const Word& u, const Word& v, size_t budget) {
  bool unused = false;
  return reverse_core(p, u, v, budget, 0, &unused);
}

bool equal_by_reversing(const Presentation& p, const Word& u, const Word& v, size_t budget) {
  if (u.size() != v.size()) return false;  // relations are homogeneous
  bool capped = false;
  ReversingGrid g = reverse_core(p, u, v, budget, ceiling(v), &capped);
  if (capped) return false;  // no empty-output grid can exceed the ceiling
  if (g.status == GridStatus::budget_exceeded) {
    throw BudgetExceeded("reversing budget exhausted while testing equality");
  }
  // stuck means no common right multiple, in particular the words differ;
  // only reachable for mirrored presentations
  if (g.status == GridStatus::stuck) return false;
  return g.right_output.empty() && g.bottom_output.empty();
}

DivisionResult divides_left(const Presentation& p, const Word& a, const Word& b, size_t budget) {
  if (a.empty()) return {true, b};
  bool capped = false;
  ReversingGrid g = reverse_core(p, a, b, budget, std::max(1, ceiling(b)), &capped);
  if (capped) return {false, Word{}};
  if (g.status == GridStatus::budget_exceeded) {
    throw BudgetExceeded("reversing budget exhausted while testing divisibility");
  }
  if (g.status == GridStatus::stuck) return {false, Word{}};
  if (!g.right_output.empty()) return {false, Word{}};
  return {true, g.bottom_output};
}

std::optional<Word> right_lcm(const Presentation& p, const Word& a, const Word& b, size_t budget) {
  ReversingGrid g = reverse_right(p, a, b, budget);
  if (g.status == GridStatus::budget_exceeded) {
    throw BudgetExceeded("reversing budget exhausted while computing a right lcm");
  }
  if (g.status == GridStatus::stuck) return std::nullopt;
  return a + g.bottom_output;
}

std::optional<Word> left_lcm_f(const Word& a, const Word& b, size_t budget) {
  ReversingGrid g = reverse_right(Presentation::f_mirrored(), a.reversed(), b.reversed(), budget);
  if (g.status == GridStatus::budget_exceeded) {
    throw BudgetExceeded("reversing budget exhausted while computing a left lcm");
  }
  if (g.status == GridStatus::stuck) return std::nullopt;
  return g.bottom_output.reversed() + a;
}

DiamondReport check_diamond(const Presentation& p, int window, size_t budget,
                            size_t saturation_budget) {
  DiamondReport rep;
  const std::vector<RelationInstance> rels = relation_instances(p, window);
  for (gen_t s = 1; s <= window; ++s) {
    for (const RelationInstance& rel : rels) {
      ++rep.instances_checked;
      ReversingGrid g1 = reverse_right(p, Word{s}, rel.lhs, budget);
      ReversingGrid g2 = reverse_right(p, Word{s}, rel.rhs, budget);
      if (g1.status == GridStatus::budget_exceeded || g2.status == GridStatus::budget_exceeded) {
        ++rep.inconclusive;
        continue;
      }
      if (g1.status == GridStatus::stuck && g2.status == GridStatus::stuck) continue;
      bool ok = g1.status == GridStatus::complete && g2.status == GridStatus::complete &&
                oracle_equal(p, g1.right_output, g2.right_output, saturation_budget) &&
                oracle_equal(p, g1.bottom_output, g2.bottom_output, saturation_budget);
      if (!ok) {
        rep.violations.push_back({s, rel, g1.status, g2.status, g1.right_output, g1.bottom_output,
                                  g2.right_output, g2.bottom_output});
      }
    }
  }
  return rep;
}

namespace {

struct Segment {
  bool vertical;
  gen_t g;
  double x0, y0, x1, y1;
};

std::string edge_label(gen_t g) { return g == 0 ? "e" : "g" + std::to_string(g); }

void collect_segments(const ReversingGrid& grid, std::vector<Segment>& segs) {
  for (const GridCell& c : grid.cells) {
    segs.push_back({false, c.top, c.x0, c.y0, c.x1, c.y0});
    segs.push_back({true, c.left, c.x0, c.y0, c.x0, c.y1});
    const size_t q = c.bottom.size();
    if (q == 0) {
      segs.push_back({false, 0, c.x0, c.y1, c.x1, c.y1});
    } else {
      for (size_t j = 0; j < q; ++j) {
        segs.push_back({false, c.bottom[j], c.x0 + double(j) * (c.x1 - c.x0) / double(q), c.y1,
                        c.x0 + double(j + 1) * (c.x1 - c.x0) / double(q), c.y1});
      }
    }
    const size_t pc = c.right.size();
    if (pc == 0) {
      segs.push_back({true, 0, c.x1, c.y0, c.x1, c.y1});
    } else {
      for (size_t j = 0; j < pc; ++j) {
        segs.push_back({true, c.right[j], c.x1, c.y0 + double(j) * (c.y1 - c.y0) / double(pc),
                        c.x1, c.y0 + double(j + 1) * (c.y1 - c.y0) / double(pc)});
      }
    }
  }
}

size_t cut_index(const std::vector<double>& cuts, double v) {
  for (size_t i = 0; i < cuts.size(); ++i) {
    if (std::abs(cuts[i] - v) < 1e-9) return i;
  }
  return cuts.size();  // unreachable for collected coordinates
}

std::vector<double> sorted_cuts(std::vector<double> vals) {
  std::sort(vals.begin(), vals.end());
  std::vector<double> cuts;
  for (double v : vals) {
    if (cuts.empty() || v - cuts.back() > 1e-9) cuts.push_back(v);
  }
  return cuts;
}

}  // namespace

std::string render_grid_ascii(const ReversingGrid& grid) {
  if (grid.cells.empty()) return "(no cells)\n";
  std::vector<Segment> segs;
  collect_segments(grid, segs);

  std::vector<double> xs, ys;
  for (const Segment& s : segs) {
    xs.push_back(s.x0);
    xs.push_back(s.x1);
    ys.push_back(s.y0);
    ys.push_back(s.y1);
  }
  const std::vector<double> xcuts = sorted_cuts(xs);
  const std::vector<double> ycuts = sorted_cuts(ys);

  // column widths: room for the widest label crossing each x interval
  std::vector<size_t> width(xcuts.size() - 1, 4);
  for (const Segment& s : segs) {
    if (s.vertical) continue;
    size_t a = cut_index(xcuts, s.x0), b = cut_index(xcuts, s.x1);
    size_t need = (edge_label(s.g).size() + 2 + (b - a) - 1) / (b - a);
    for (size_t i = a; i < b; ++i) width[i] = std::max(width[i], need);
  }
  std::vector<size_t> colpos(xcuts.size());
  colpos[0] = 0;
  for (size_t i = 1; i < xcuts.size(); ++i) colpos[i] = colpos[i - 1] + width[i - 1] + 1;

  const size_t text_cols = colpos.back() + 8;  // room for labels on the last column
  const size_t rows_per_band = 2;  // one line row + one row for vertical labels
  const size_t text_rows = (ycuts.size() - 1) * rows_per_band + 1;
  std::vector<std::string> canvas(text_rows, std::string(text_cols, ' '));

  auto row_of_cut = [&](size_t yi) { return yi * rows_per_band; };
  for (size_t yi = 0; yi < ycuts.size(); ++yi) {
    for (size_t xi = 0; xi < xcuts.size(); ++xi) canvas[row_of_cut(yi)][colpos[xi]] = '+';
  }
  for (const Segment& s : segs) {
    if (!s.vertical) {
      size_t r = row_of_cut(cut_index(ycuts, s.y0));
      size_t c0 = colpos[cut_index(xcuts, s.x0)], c1 = colpos[cut_index(xcuts, s.x1)];
      for (size_t c = c0 + 1; c < c1; ++c) canvas[r][c] = '-';
      std::string lab = edge_label(s.g);
      size_t mid = (c0 + c1 + 1 - lab.size()) / 2;
      for (size_t i = 0; i < lab.size(); ++i) canvas[r][mid + i] = lab[i];
    } else {
      size_t c = colpos[cut_index(xcuts, s.x0)];
      size_t r0 = row_of_cut(cut_index(ycuts, s.y0)), r1 = row_of_cut(cut_index(ycuts, s.y1));
      if (r0 > r1) std::swap(r0, r1);
      std::string lab = edge_label(s.g);
      for (size_t r = r0 + 1; r < r1; ++r) canvas[r][c] = '|';
      size_t labrow = r0 + 1;
      for (size_t i = 0; i < lab.size() && c + 1 + i < text_cols; ++i) {
        canvas[labrow][c + 1 + i] = lab[i];
      }
    }
  }
  std::string out;
  for (std::string& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_grid_tikz(const ReversingGrid& grid, Monoid m) {
  const char* sym = m == Monoid::F ? "\\tau" : "\\theta";
  std::ostringstream out;
  out << "\\begin{tikzpicture}[x=1.4cm,y=1.4cm]\n";
  std::vector<Segment> segs;
  collect_segments(grid, segs);
  for (const Segment& s : segs) {
    out << "  \\draw[->] (" << s.x0 << "," << -s.y0 << ") -- (" << s.x1 << "," << -s.y1 << ")";
    if (s.g == 0) {
      out << " node[midway," << (s.vertical ? "left" : "above") << "]{$\\varepsilon$}";
    } else {
      out << " node[midway," << (s.vertical ? "left" : "above") << "]{$" << sym << "_{" << s.g
          << "}$}";
    }
    out << ";\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace garside
