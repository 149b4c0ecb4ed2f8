// Command-line front end for the F/H monoid toolkit. Every subcommand is
// a thin adapter over the library; no monoid logic lives here.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "garside/morphisms.hpp"
#include "garside/presentation.hpp"
#include "garside/reversing.hpp"
#include "garside/rewrite.hpp"
#include "garside/simples.hpp"
#include "garside/verify.hpp"
#include "garside/word.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace garside;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

Monoid parse_monoid(const std::string& s) {
  if (s == "F" || s == "f") return Monoid::F;
  if (s == "H" || s == "h") return Monoid::H;
  throw std::invalid_argument("monoid must be F or H");
}

Presentation presentation_of(Monoid m) {
  return m == Monoid::F ? Presentation::f() : Presentation::h();
}

RewriteSystem system_of(Monoid m) {
  return m == Monoid::F ? RewriteSystem::ef() : RewriteSystem::eh();
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

struct CommonArgs {
  std::string monoid = "H";
  size_t budget = 0;  // 0 = module default
  bool as_json = false;
};

int cmd_reduce(const CommonArgs& c, const std::string& text, bool trace) {
  const Monoid m = parse_monoid(c.monoid);
  const Word w = parse_word(text);
  std::vector<RewriteStep> steps;
  const Word nf = reduce(system_of(m), w, trace ? &steps : nullptr);
  if (c.as_json) {
    json j{{"command", "reduce"}, {"monoid", to_string(m)}, {"word", format_word(w)},
           {"result", format_word(nf)}, {"status", "ok"}};
    print_json(j);
    return kExitTrue;
  }
  if (trace) {
    for (const RewriteStep& s : steps) {
      std::cout << "pos " << s.pos << ": " << format_word(s.before) << " -> "
                << format_word(s.after) << "\n";
    }
  }
  std::cout << format_word(nf) << "\n";
  return kExitTrue;
}

int cmd_equal(const CommonArgs& c, const std::string& ut, const std::string& vt,
              const std::string& method) {
  const Monoid m = parse_monoid(c.monoid);
  const Word u = parse_word(ut), v = parse_word(vt);
  bool eq = false;
  if (method == "nf") {
    eq = reduce(system_of(m), u) == reduce(system_of(m), v);
  } else if (method == "reversing") {
    eq = equal_by_reversing(presentation_of(m), u, v,
                            c.budget ? c.budget : kDefaultReversingBudget);
  } else if (method == "oracle") {
    eq = oracle_equal(presentation_of(m), u, v, c.budget ? c.budget : kDefaultSaturationBudget);
  } else {
    throw std::invalid_argument("method must be nf, reversing or oracle");
  }
  if (c.as_json) {
    print_json(json{{"command", "equal"}, {"monoid", to_string(m)}, {"u", format_word(u)},
                    {"v", format_word(v)}, {"method", method}, {"result", eq}, {"status", "ok"}});
  } else {
    std::cout << (eq ? "true" : "false") << "\n";
  }
  return eq ? kExitTrue : kExitFalse;
}

int cmd_divides(const CommonArgs& c, const std::string& at, const std::string& bt) {
  const Monoid m = parse_monoid(c.monoid);
  const Word a = parse_word(at), b = parse_word(bt);
  DivisionResult r = divides_left(presentation_of(m), a, b,
                                  c.budget ? c.budget : kDefaultReversingBudget);
  if (c.as_json) {
    json j{{"command", "divides"}, {"monoid", to_string(m)}, {"a", format_word(a)},
           {"b", format_word(b)}, {"result", r.divides}};
    if (r.divides) j["quotient"] = format_word(r.quotient);
    j["status"] = "ok";
    print_json(j);
  } else if (r.divides) {
    std::cout << "true quotient: " << format_word(r.quotient) << "\n";
  } else {
    std::cout << "false\n";
  }
  return r.divides ? kExitTrue : kExitFalse;
}

int cmd_lcm(const CommonArgs& c, const std::string& at, const std::string& bt, bool left) {
  const Monoid m = parse_monoid(c.monoid);
  const Word a = parse_word(at), b = parse_word(bt);
  const size_t budget = c.budget ? c.budget : kDefaultReversingBudget;
  std::optional<Word> l;
  if (left) {
    if (m != Monoid::F) throw std::invalid_argument("left lcm is only available for F");
    l = left_lcm_f(a, b, budget);
  } else {
    l = right_lcm(presentation_of(m), a, b, budget);
  }
  if (c.as_json) {
    json j{{"command", "lcm"}, {"monoid", to_string(m)}, {"side", left ? "left" : "right"},
           {"a", format_word(a)}, {"b", format_word(b)},
           {"result", l ? json(format_word(*l)) : json(nullptr)}, {"status", "ok"}};
    print_json(j);
  } else {
    std::cout << (l ? format_word(*l) : "none") << "\n";
  }
  return l ? kExitTrue : kExitFalse;
}

int cmd_reverse(const CommonArgs& c, const std::string& ut, const std::string& vt, bool left,
                const std::string& render) {
  if (!render.empty() && render != "ascii" && render != "tikz") {
    throw std::invalid_argument("render must be ascii or tikz");
  }
  const Monoid m = parse_monoid(c.monoid);
  const Word u = parse_word(ut), v = parse_word(vt);
  const size_t budget = c.budget ? c.budget : kDefaultReversingBudget;
  Presentation p = presentation_of(m);
  ReversingGrid grid;
  Word u1, v1;
  if (left) {
    p.orientation = Orientation::mirrored;
    grid = reverse_right(p, u.reversed(), v.reversed(), budget);
    u1 = grid.right_output.reversed();
    v1 = grid.bottom_output.reversed();
  } else {
    grid = reverse_right(p, u, v, budget);
    u1 = grid.right_output;
    v1 = grid.bottom_output;
  }
  if (c.as_json) {
    json j{{"command", "reverse"}, {"monoid", to_string(m)}, {"side", left ? "left" : "right"},
           {"u", format_word(u)}, {"v", format_word(v)}, {"status", to_string(grid.status)},
           {"cells", grid.cell_count()}};
    if (grid.status == GridStatus::complete) {
      j["u1"] = format_word(u1);
      j["v1"] = format_word(v1);
    }
    print_json(j);
  } else {
    std::cout << "status: " << to_string(grid.status) << "\n";
    if (grid.status == GridStatus::complete) {
      std::cout << "u1: " << format_word(u1) << "\n";
      std::cout << "v1: " << format_word(v1) << "\n";
    } else if (grid.status == GridStatus::stuck) {
      std::cout << "stuck at: g" << grid.stuck_left << " against g" << grid.stuck_top << "\n";
    }
    std::cout << "cells: " << grid.cell_count() << "\n";
    if (render == "ascii") {
      std::cout << render_grid_ascii(grid);
    } else if (render == "tikz") {
      std::cout << render_grid_tikz(grid, m);
    }
  }
  if (grid.status == GridStatus::budget_exceeded) return kExitInconclusive;
  return grid.status == GridStatus::complete ? kExitTrue : kExitFalse;
}

int cmd_class(const CommonArgs& c, const std::string& wt) {
  const Monoid m = parse_monoid(c.monoid);
  const Word w = parse_word(wt);
  CongruenceClass cls = class_saturate(presentation_of(m), w,
                                       c.budget ? c.budget : kDefaultSaturationBudget);
  if (c.as_json) {
    json members = json::array();
    for (const Word& x : cls.members) members.push_back(format_word(x));
    print_json(json{{"command", "class"}, {"monoid", to_string(m)}, {"word", format_word(w)},
                    {"result", members},
                    {"status", cls.truncated ? "inconclusive" : "ok"}});
  } else {
    for (const Word& x : cls.members) std::cout << format_word(x) << "\n";
    if (cls.truncated) std::cerr << "class truncated at the budget; listing is partial\n";
  }
  return cls.truncated ? kExitInconclusive : kExitTrue;
}

int cmd_simples(const CommonArgs& c, const std::string& rank_text, const std::string& method_text) {
  const Monoid m = parse_monoid(c.monoid);
  const Rank r = Rank::parse(rank_text);
  EnumMethod method;
  if (method_text == "forbidden-factors") {
    method = EnumMethod::forbidden_factors;
  } else if (method_text == "bfs-reversing") {
    method = EnumMethod::bfs_reversing;
  } else if (method_text == "oracle") {
    method = EnumMethod::oracle;
  } else {
    throw std::invalid_argument("method must be forbidden-factors, bfs-reversing or oracle");
  }
  auto recs = enumerate_divisors(m, r, method,
                                 c.budget ? c.budget : kDefaultSaturationBudget);
  if (c.as_json) {
    json arr = json::array();
    for (const SimpleRecord& rec : recs) {
      arr.push_back(json{{"nf", format_word(rec.nf)}, {"length", rec.nf.size()},
                         {"index", rec.index}, {"type", to_string(rec.type)}});
    }
    print_json(json{{"command", "simples"}, {"monoid", to_string(m)}, {"n", r.str()},
                    {"method", method_text}, {"result", arr}, {"status", "ok"}});
  } else {
    for (const SimpleRecord& rec : recs) {
      std::cout << format_word(rec.nf) << "  index=" << rec.index
                << " type=" << to_string(rec.type) << "\n";
    }
  }
  return kExitTrue;
}

int cmd_triangle(int nmax, bool csv, bool as_json) {
  CountTriangle tri = count_triangle(nmax);
  if (as_json) {
    json rows = json::array();
    for (int n = 2; n <= nmax; ++n) {
      json counts = json::array();
      for (int l = 0; l <= 2 * n - 3; ++l) counts.push_back(tri.at(n, l));
      rows.push_back(json{{"n", n}, {"counts", counts}});
    }
    print_json(json{{"command", "triangle"}, {"nmax", nmax}, {"result", rows}, {"status", "ok"}});
    return kExitTrue;
  }
  for (int n = 2; n <= nmax; ++n) {
    std::ostringstream line;
    if (!csv) line << n << ": ";
    for (int l = 0; l <= 2 * n - 3; ++l) {
      if (l) line << (csv ? "," : " ");
      line << tri.at(n, l);
    }
    std::cout << line.str() << "\n";
  }
  return kExitTrue;
}

int cmd_greedy(const CommonArgs& c, const std::string& wt) {
  const Monoid m = parse_monoid(c.monoid);
  if (m != Monoid::F) throw std::invalid_argument("greedy decomposition is only available for F");
  const Word w = parse_word(wt);
  std::vector<Word> blocks = greedy_decompose_f(w);
  if (c.as_json) {
    json arr = json::array();
    for (const Word& b : blocks) arr.push_back(format_word(b));
    print_json(json{{"command", "greedy"}, {"monoid", "F"}, {"word", format_word(w)},
                    {"result", arr}, {"status", "ok"}});
  } else {
    std::string out;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i) out += " | ";
      out += format_word(blocks[i]);
    }
    std::cout << out << "\n";
  }
  return kExitTrue;
}

int cmd_perm_word(const std::string& images_text, bool as_json) {
  std::vector<int> images;
  std::stringstream in(images_text);
  std::string tok;
  while (std::getline(in, tok, ',')) images.push_back(std::stoi(tok));
  const Permutation f{images};
  const Word w = perm_to_word(f);
  if (as_json) {
    print_json(json{{"command", "perm-word"}, {"images", images}, {"result", format_word(w)},
                    {"status", "ok"}});
  } else {
    std::cout << format_word(w) << "\n";
  }
  return kExitTrue;
}

int cmd_rho(const std::string& wt, const std::string& eval_text, bool as_json) {
  const Word w = parse_word(wt);
  const EventuallyShiftMap f = rho_of_word(w);
  std::vector<int> points;
  if (!eval_text.empty()) {
    std::stringstream in(eval_text);
    std::string tok;
    while (std::getline(in, tok, ',')) points.push_back(std::stoi(tok));
  }
  if (as_json) {
    json evals = json::array();
    for (int k : points) evals.push_back(json{{"k", k}, {"value", f(k)}});
    print_json(json{{"command", "rho"}, {"word", format_word(w)}, {"map", f.str()},
                    {"result", evals}, {"status", "ok"}});
  } else {
    std::cout << f.str() << "\n";
    for (int k : points) std::cout << k << " -> " << f(k) << "\n";
  }
  return kExitTrue;
}

int cmd_rho_tilde(const std::string& wt, int dim, const std::string& t_text) {
  const Word w = parse_word(wt);
  TruncatedLinearMap m = rho_tilde_of_word(w, dim);
  if (t_text != "sym") m = m.evaluated_at(std::stoll(t_text));
  for (int row = 1; row <= dim; ++row) {
    std::ostringstream line;
    for (int col = 1; col <= dim; ++col) {
      if (col > 1) line << ", ";
      line << m.entry(row, col).str();
    }
    std::cout << line.str() << "\n";
  }
  return kExitTrue;
}

int cmd_verify(const std::string& scope) {
  const int failures = run_acceptance(std::cout, scope);
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
            << "\n";
  return failures == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside combinatorics toolkit for the monoids F and H"};
  app.require_subcommand(1);

  CommonArgs c;
  std::string arg_u, arg_v, arg_method = "nf", arg_render, arg_scope = "all";
  std::string arg_rank = "3", arg_enum_method = "forbidden-factors";
  std::string arg_images, arg_eval, arg_t = "sym";
  bool flag_trace = false, flag_left = false, flag_csv = false;
  int arg_nmax = 8, arg_dim = 10;

  auto add_common = [&](CLI::App* sub, bool with_monoid = true) {
    if (with_monoid) sub->add_option("--monoid", c.monoid, "F or H");
    sub->add_option("--budget", c.budget, "cell or word budget (0 = default)");
    sub->add_flag("--json", c.as_json, "JSON envelope output");
  };

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "normal form of a word");
  add_common(reduce_cmd);
  reduce_cmd->add_flag("--trace", flag_trace, "print each rewrite step");
  reduce_cmd->add_option("word", arg_u)->required();

  CLI::App* equal_cmd = app.add_subcommand("equal", "test equality of two words");
  add_common(equal_cmd);
  equal_cmd->add_option("--method", arg_method, "nf, reversing or oracle");
  equal_cmd->add_option("u", arg_u)->required();
  equal_cmd->add_option("v", arg_v)->required();

  CLI::App* divides_cmd = app.add_subcommand("divides", "left divisibility a | b");
  add_common(divides_cmd);
  divides_cmd->add_option("a", arg_u)->required();
  divides_cmd->add_option("b", arg_v)->required();

  CLI::App* lcm_cmd = app.add_subcommand("lcm", "right (or left, F only) lcm");
  add_common(lcm_cmd);
  lcm_cmd->add_flag("--left", flag_left, "left lcm via the mirrored presentation");
  lcm_cmd->add_option("a", arg_u)->required();
  lcm_cmd->add_option("b", arg_v)->required();

  CLI::App* reverse_cmd = app.add_subcommand("reverse", "build a reversing grid");
  add_common(reverse_cmd);
  reverse_cmd->add_flag("--left", flag_left, "left reversing");
  reverse_cmd->add_option("--render", arg_render, "ascii or tikz");
  reverse_cmd->add_option("u", arg_u)->required();
  reverse_cmd->add_option("v", arg_v)->required();

  CLI::App* class_cmd = app.add_subcommand("class", "list the congruence class of a word");
  add_common(class_cmd);
  class_cmd->add_option("word", arg_u)->required();

  CLI::App* simples_cmd = app.add_subcommand("simples", "divisors of the rank-n lcm");
  add_common(simples_cmd);
  simples_cmd->add_option("--n", arg_rank, "rank, e.g. 5 or 4.5")->required();
  simples_cmd->add_option("--method", arg_enum_method,
                          "forbidden-factors, bfs-reversing or oracle");

  CLI::App* triangle_cmd = app.add_subcommand("triangle", "divisor counting triangle for H");
  triangle_cmd->add_option("--nmax", arg_nmax, "last row")->required();
  triangle_cmd->add_flag("--csv", flag_csv, "plain comma-separated rows");
  triangle_cmd->add_flag("--json", c.as_json, "JSON envelope output");

  CLI::App* greedy_cmd = app.add_subcommand("greedy", "greedy decomposition in F");
  add_common(greedy_cmd);
  greedy_cmd->add_option("word", arg_u)->required();

  CLI::App* perm_cmd = app.add_subcommand("perm-word", "lcm expression attached to a permutation");
  perm_cmd->add_option("images", arg_images, "image list, e.g. 3,1,2")->required();
  perm_cmd->add_flag("--json", c.as_json, "JSON envelope output");

  CLI::App* rho_cmd = app.add_subcommand("rho", "shift-map image of a word");
  rho_cmd->add_option("--word", arg_u)->required();
  rho_cmd->add_option("--eval", arg_eval, "comma-separated arguments");
  rho_cmd->add_flag("--json", c.as_json, "JSON envelope output");

  CLI::App* rho_tilde_cmd = app.add_subcommand("rho-tilde", "matrix deformation image of a word");
  rho_tilde_cmd->add_option("--word", arg_u)->required();
  rho_tilde_cmd->add_option("--dim", arg_dim, "matrix dimension")->required();
  rho_tilde_cmd->add_option("--t", arg_t, "integer value or sym");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("scope", arg_scope, "all or a module name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (reduce_cmd->parsed()) return cmd_reduce(c, arg_u, flag_trace);
    if (equal_cmd->parsed()) return cmd_equal(c, arg_u, arg_v, arg_method);
    if (divides_cmd->parsed()) return cmd_divides(c, arg_u, arg_v);
    if (lcm_cmd->parsed()) return cmd_lcm(c, arg_u, arg_v, flag_left);
    if (reverse_cmd->parsed()) return cmd_reverse(c, arg_u, arg_v, flag_left, arg_render);
    if (class_cmd->parsed()) return cmd_class(c, arg_u);
    if (simples_cmd->parsed()) return cmd_simples(c, arg_rank, arg_enum_method);
    if (triangle_cmd->parsed()) return cmd_triangle(arg_nmax, flag_csv, c.as_json);
    if (greedy_cmd->parsed()) return cmd_greedy(c, arg_u);
    if (perm_cmd->parsed()) return cmd_perm_word(arg_images, c.as_json);
    if (rho_cmd->parsed()) return cmd_rho(arg_u, arg_eval, c.as_json);
    if (rho_tilde_cmd->parsed()) return cmd_rho_tilde(arg_u, arg_dim, arg_t);
    if (verify_cmd->parsed()) return cmd_verify(arg_scope);
  } catch (const garside::BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
