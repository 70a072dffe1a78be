#pragma once

// The declarative input language: rings, ideals, matrices, modules, graphs
// and user decompositions, bound to names in declaration order.
//
//   ring S = QQ[x1..x5];                      (or ZZ/p; names and ranges)
//   ideal I = ideal(x1^2, x1*x2);
//   ideal J = binomialEdgeIdeal(G);
//   matrix A = [[x1*x2, x3*x4], [0, x1*x5]];
//   module M = coker A;                       (A a matrix or an ideal)
//   graph G = graph(4, {{1,2}, {2,3}});
//   decomposition D = of I { ideal(x1) ; ideal(x1^2, x2) radical ideal(x1, x2) };
//
// Comments run from '#' or '//' to the end of the line. Objects use the most
// recently declared ring.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scmkit/decomposition.hpp"
#include "scmkit/graph.hpp"
#include "scmkit/resolution.hpp"

namespace scmkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

namespace dsl {

enum class Tok { Ident, Int, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, column;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Tok::Sym, "", line, col};
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::Ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Int;
    } else if (c == '.' && i + 1 < src.size() && src[i + 1] == '.') {
      j = i + 2;
    } else if (std::string("=[](){},;+-*^/").find(c) != std::string::npos) {
      j = i + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    t.text = src.substr(i, j - i);
    out.push_back(std::move(t));
    advance(j - i);
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

/// Expands "x1..x5" style ranges: equal alphabetic prefixes, numeric suffixes.
inline std::vector<std::string> expand_range(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    return std::pair{s.substr(0, k), s.substr(k)};
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb || na.empty() || nb.empty()) throw std::invalid_argument("bad variable range " + a + ".." + b);
  const long lo = std::stol(na), hi = std::stol(nb);
  if (hi < lo) throw std::invalid_argument("empty variable range " + a + ".." + b);
  std::vector<std::string> out;
  for (long k = lo; k <= hi; ++k) out.push_back(pa + std::to_string(k));
  return out;
}

}  // namespace dsl

enum class ObjectKind { Ring, Ideal, Matrix, Module, Graph, Decomposition };

inline std::string to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::Ring: return "ring";
    case ObjectKind::Ideal: return "ideal";
    case ObjectKind::Matrix: return "matrix";
    case ObjectKind::Module: return "module";
    case ObjectKind::Graph: return "graph";
    case ObjectKind::Decomposition: return "decomposition";
  }
  return "?";
}

enum class FieldKind { Rationals, Prime };

template <CoefficientField F>
struct IdealBinding {
  std::string ring;
  Ideal<F> ideal;
  std::optional<std::string> graph;  // set for binomialEdgeIdeal(G)
};

template <CoefficientField F>
struct MatrixBinding {
  std::string ring;
  Matrix<F> matrix;
};

template <CoefficientField F>
struct ModuleBinding {
  std::string ring;
  std::string source;  // matrix or ideal name
  ModulePresentation<F> module;
};

template <CoefficientField F>
struct DecompositionBinding {
  std::string ideal;
  std::vector<ComponentSpec<F>> specs;
  Decomposition<F> decomposition;
};

template <CoefficientField F>
struct Objects {
  std::map<std::string, RingPtr<F>> rings;
  std::map<std::string, IdealBinding<F>> ideals;
  std::map<std::string, MatrixBinding<F>> matrices;
  std::map<std::string, ModuleBinding<F>> modules;
  std::map<std::string, DecompositionBinding<F>> decompositions;
};

class Session {
 public:
  bool empty() const { return order_.empty(); }
  const std::vector<std::string>& names() const { return order_; }
  bool has(const std::string& name) const { return kinds_.count(name) > 0; }
  ObjectKind kind(const std::string& name) const {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) throw std::invalid_argument("unbound name '" + name + "'");
    return it->second;
  }
  /// Field of the ring an object lives in (graphs have none).
  FieldKind field_kind(const std::string& name) const {
    auto it = field_.find(name);
    if (it == field_.end()) throw std::invalid_argument("'" + name + "' does not live in a ring");
    return it->second;
  }

  template <CoefficientField F>
  Objects<F>& objects() {
    if constexpr (std::is_same_v<F, Rationals>) return qq_;
    else return zp_;
  }
  template <CoefficientField F>
  const Objects<F>& objects() const {
    if constexpr (std::is_same_v<F, Rationals>) return qq_;
    else return zp_;
  }

  const Graph& graph(const std::string& name) const {
    if (kind(name) != ObjectKind::Graph) throw std::invalid_argument("'" + name + "' is not a graph");
    return graphs_.at(name);
  }

  /// The most recent user decomposition declared for `ideal`, if any.
  std::optional<std::string> decomposition_for(const std::string& ideal) const {
    std::optional<std::string> found;
    for (const auto& n : order_)
      if (kinds_.at(n) == ObjectKind::Decomposition && decomposition_ideal_.at(n) == ideal) found = n;
    return found;
  }

  /// Canonical script: re-parsing it yields the same session.
  std::string to_script() const;

  // Mutation, used by the parser.
  void bind(const std::string& name, ObjectKind k, std::optional<FieldKind> f) {
    if (has(name)) throw std::invalid_argument("name '" + name + "' is already bound");
    order_.push_back(name);
    kinds_[name] = k;
    if (f) field_[name] = *f;
  }
  void add_graph(const std::string& name, Graph g) {
    bind(name, ObjectKind::Graph, std::nullopt);
    graphs_.emplace(name, std::move(g));
  }
  void note_decomposition(const std::string& name, const std::string& ideal) { decomposition_ideal_[name] = ideal; }
  std::optional<std::string> current_ring;

 private:
  std::vector<std::string> order_;
  std::map<std::string, ObjectKind> kinds_;
  std::map<std::string, FieldKind> field_;
  std::map<std::string, Graph> graphs_;
  std::map<std::string, std::string> decomposition_ideal_;
  Objects<Rationals> qq_;
  Objects<PrimeField> zp_;
};

namespace dsl {

class Parser {
 public:
  Parser(const std::string& src, Session& s) : toks_(tokenize(src)), s_(s) {}

  void script() {
    while (peek().kind != Tok::End) {
      statement();
      expect(";");
    }
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at(const std::string& sym) const { return peek().kind != Tok::End && peek().text == sym && peek().kind != Tok::Int; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  const Token& expect(const std::string& sym) {
    if (!at(sym)) fail("expected '" + sym + "'" + found());
    return next();
  }
  std::string found() const {
    return peek().kind == Tok::End ? ", found end of input" : ", found '" + peek().text + "'";
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected a name" + found());
    return next().text;
  }
  mpz_class integer() {
    if (peek().kind != Tok::Int) fail("expected an integer" + found());
    return mpz_class(next().text);
  }
  int small_integer() {
    const Token& t = peek();
    mpz_class v = integer();
    if (!v.fits_sint_p()) fail("integer out of range", t);
    return static_cast<int>(v.get_si());
  }

  void statement() {
    const Token& kw = peek();
    std::string k = ident();
    if (k == "ring") ring_decl();
    else if (k == "ideal") ideal_decl();
    else if (k == "matrix") matrix_decl();
    else if (k == "module") module_decl();
    else if (k == "graph") graph_decl();
    else if (k == "decomposition") decomposition_decl();
    else fail("unknown declaration '" + k + "'", kw);
  }

  std::string new_name() {
    const Token& t = peek();
    std::string n = ident();
    if (s_.has(n)) fail("name '" + n + "' is already bound", t);
    return n;
  }

  void ring_decl() {
    std::string name = new_name();
    expect("=");
    const Token& ft = peek();
    std::string f = ident();
    std::optional<std::uint64_t> p;
    if (f == "ZZ") {
      expect("/");
      const Token& pt = peek();
      mpz_class v = integer();
      if (!v.fits_ulong_p() || !is_prime(v.get_ui()) || v >= mpz_class(1u) << 31)
        fail("ZZ/" + v.get_str() + ": the characteristic must be a prime below 2^31", pt);
      p = v.get_ui();
    } else if (f != "QQ") {
      fail("unknown field '" + f + "' (use QQ or ZZ/p)", ft);
    }
    expect("[");
    std::vector<std::string> vars;
    do {
      const Token& vt = peek();
      std::string a = ident();
      if (at("..")) {
        next();
        std::string b = ident();
        try {
          auto r = expand_range(a, b);
          vars.insert(vars.end(), r.begin(), r.end());
        } catch (const std::exception& e) {
          fail(e.what(), vt);
        }
      } else {
        vars.push_back(a);
      }
    } while (at(",") && (next(), true));
    expect("]");
    try {
      if (p) {
        s_.objects<PrimeField>().rings[name] = make_ring(PrimeField(static_cast<std::uint32_t>(*p)), vars);
        s_.bind(name, ObjectKind::Ring, FieldKind::Prime);
      } else {
        s_.objects<Rationals>().rings[name] = make_ring(Rationals{}, vars);
        s_.bind(name, ObjectKind::Ring, FieldKind::Rationals);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what(), ft);
    }
    s_.current_ring = name;
  }

  const std::string& require_ring(const Token& t) {
    if (!s_.current_ring) fail("no ring declared yet", t);
    return *s_.current_ring;
  }

  template <typename Fn>
  void with_current_ring(const Token& t, Fn&& fn) {
    const std::string& r = require_ring(t);
    if (s_.field_kind(r) == FieldKind::Rationals) fn(s_.objects<Rationals>().rings.at(r), r);
    else fn(s_.objects<PrimeField>().rings.at(r), r);
  }

  // poly := ["-"] term (("+"|"-") term)* ; term := factor (("*"|"/") factor)* ;
  // factor := atom ["^" INT] ; atom := INT | NAME | "(" poly ")"
  template <CoefficientField F>
  Poly<F> poly(const RingPtr<F>& R) {
    Poly<F> acc(R);
    bool negate = false;
    if (at("-")) {
      next();
      negate = true;
    } else if (at("+")) {
      next();
    }
    acc = term(R);
    if (negate) acc = -acc;
    while (at("+") || at("-")) {
      bool minus = next().text == "-";
      Poly<F> t = term(R);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  template <CoefficientField F>
  Poly<F> term(const RingPtr<F>& R) {
    Poly<F> acc = factor(R);
    while (at("*") || at("/")) {
      const Token& op = next();
      const Token& at_tok = peek();
      Poly<F> f = factor(R);
      if (op.text == "*") {
        acc = acc * f;
      } else {
        if (!f.is_constant() || f.is_zero()) fail("division is only allowed by a nonzero constant", at_tok);
        acc = acc.scaled(R->field().inv(f.lead_coefficient()));
      }
    }
    return acc;
  }

  template <CoefficientField F>
  Poly<F> factor(const RingPtr<F>& R) {
    Poly<F> base = atom(R);
    if (at("^")) {
      next();
      const Token& t = peek();
      mpz_class e = integer();
      if (!e.fits_uint_p() || e > 10000) fail("exponent too large", t);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  template <CoefficientField F>
  Poly<F> atom(const RingPtr<F>& R) {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      mpz_class v = integer();
      return Poly<F>::constant(R, R->field().from_integer(v));
    }
    if (t.kind == Tok::Ident) {
      next();
      auto v = R->index_of(t.text);
      if (v < 0) fail("'" + t.text + "' is not a variable of the current ring", t);
      return Poly<F>::variable(R, static_cast<std::size_t>(v));
    }
    if (at("(")) {
      next();
      Poly<F> p = poly(R);
      expect(")");
      return p;
    }
    fail("expected a polynomial" + found());
  }

  template <CoefficientField F>
  Ideal<F> ideal_literal(const RingPtr<F>& R) {
    const Token& start = peek();
    if (ident() != "ideal") fail("expected 'ideal'", start);
    expect("(");
    std::vector<Poly<F>> gens;
    std::vector<Token> where;
    if (!at(")")) {
      do {
        where.push_back(peek());
        gens.push_back(poly(R));
      } while (at(",") && (next(), true));
    }
    expect(")");
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!gens[k].is_homogeneous()) fail("ideal generator " + gens[k].to_string() + " is not homogeneous", where[k]);
    return Ideal<F>(R, std::move(gens));
  }

  void ideal_decl() {
    const Token& t = peek();
    std::string name = new_name();
    expect("=");
    with_current_ring(t, [&](const auto& R, const std::string& rname) {
      using F = typename std::decay_t<decltype(*R)>::Field;
      if (peek().kind == Tok::Ident && peek().text == "binomialEdgeIdeal") {
        next();
        expect("(");
        const Token& gt = peek();
        std::string g = ident();
        if (!s_.has(g) || s_.kind(g) != ObjectKind::Graph) fail("'" + g + "' is not a graph", gt);
        expect(")");
        try {
          auto I = binomial_edge_ideal(s_.graph(g), R);
          s_.objects<F>().ideals.emplace(name, IdealBinding<F>{rname, std::move(I), g});
        } catch (const std::invalid_argument& e) {
          fail(e.what(), gt);
        }
      } else {
        auto I = ideal_literal(R);
        s_.objects<F>().ideals.emplace(name, IdealBinding<F>{rname, std::move(I), std::nullopt});
      }
      s_.bind(name, ObjectKind::Ideal, s_.field_kind(rname));
    });
  }

  void matrix_decl() {
    const Token& t = peek();
    std::string name = new_name();
    expect("=");
    with_current_ring(t, [&](const auto& R, const std::string& rname) {
      using F = typename std::decay_t<decltype(*R)>::Field;
      const Token& mt = expect("[");
      std::vector<std::vector<Poly<F>>> rows;
      do {
        expect("[");
        std::vector<Poly<F>> row;
        do {
          row.push_back(poly(R));
        } while (at(",") && (next(), true));
        expect("]");
        rows.push_back(std::move(row));
      } while (at(",") && (next(), true));
      expect("]");
      try {
        auto M = Matrix<F>::from_rows(R, rows, infer_row_degrees(rows));
        s_.objects<F>().matrices.emplace(name, MatrixBinding<F>{rname, std::move(M)});
      } catch (const std::invalid_argument& e) {
        fail(e.what(), mt);
      }
      s_.bind(name, ObjectKind::Matrix, s_.field_kind(rname));
    });
  }

  /// Row degrees making every column homogeneous, smallest 0 per connected
  /// block of entries; throws if entries are inhomogeneous or incompatible.
  template <CoefficientField F>
  static std::vector<int> infer_row_degrees(const std::vector<std::vector<Poly<F>>>& rows) {
    const std::size_t nr = rows.size(), nc = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != nc) throw std::invalid_argument("ragged matrix rows");
    for (const auto& r : rows)
      for (const auto& e : r)
        if (!e.is_homogeneous()) throw std::invalid_argument("matrix entry " + e.to_string() + " is not homogeneous");
    std::vector<std::optional<int>> rdeg(nr), cdeg(nc);
    for (std::size_t start = 0; start < nr; ++start) {
      if (rdeg[start]) continue;
      rdeg[start] = 0;
      std::vector<std::size_t> block{start};
      std::vector<std::pair<bool, std::size_t>> queue{{true, start}};
      while (!queue.empty()) {
        auto [is_row, k] = queue.back();
        queue.pop_back();
        if (is_row) {
          for (std::size_t c = 0; c < nc; ++c) {
            if (rows[k][c].is_zero()) continue;
            int want = *rdeg[k] + rows[k][c].degree();
            if (!cdeg[c]) {
              cdeg[c] = want;
              queue.push_back({false, c});
            } else if (*cdeg[c] != want) {
              throw std::invalid_argument("matrix column " + std::to_string(c + 1) + " is not homogeneous");
            }
          }
        } else {
          for (std::size_t r = 0; r < nr; ++r) {
            if (rows[r][k].is_zero()) continue;
            int want = *cdeg[k] - rows[r][k].degree();
            if (!rdeg[r]) {
              rdeg[r] = want;
              block.push_back(r);
              queue.push_back({true, r});
            } else if (*rdeg[r] != want) {
              throw std::invalid_argument("matrix column " + std::to_string(k + 1) + " is not homogeneous");
            }
          }
        }
      }
      int lo = 0;
      for (auto r : block) lo = std::min(lo, *rdeg[r]);
      for (auto r : block) *rdeg[r] -= lo;
    }
    std::vector<int> out;
    for (auto& d : rdeg) out.push_back(*d);
    return out;
  }

  void module_decl() {
    const Token& t = peek();
    std::string name = new_name();
    expect("=");
    const Token& kw = peek();
    if (ident() != "coker") fail("expected 'coker'", kw);
    const Token& st = peek();
    std::string src = ident();
    if (!s_.has(src)) fail("unbound name '" + src + "'", st);
    auto k = s_.kind(src);
    if (k != ObjectKind::Matrix && k != ObjectKind::Ideal) fail("'" + src + "' is neither a matrix nor an ideal", st);
    auto build = [&](auto& objs) {
      using F = typename std::decay_t<decltype(objs.rings.begin()->second->field())>;
      if (k == ObjectKind::Matrix) {
        const auto& b = objs.matrices.at(src);
        objs.modules.emplace(name, ModuleBinding<F>{b.ring, src, ModulePresentation<F>::cokernel(b.matrix)});
      } else {
        const auto& b = objs.ideals.at(src);
        objs.modules.emplace(name, ModuleBinding<F>{b.ring, src, ModulePresentation<F>::quotient(b.ideal)});
      }
    };
    (void)t;
    if (s_.field_kind(src) == FieldKind::Rationals) build(s_.objects<Rationals>());
    else build(s_.objects<PrimeField>());
    s_.bind(name, ObjectKind::Module, s_.field_kind(src));
  }

  void graph_decl() {
    std::string name = new_name();
    expect("=");
    const Token& kw = peek();
    if (ident() != "graph") fail("expected 'graph'", kw);
    expect("(");
    const Token& nt = peek();
    int n = small_integer();
    if (n < 0) fail("negative vertex count", nt);
    expect(",");
    expect("{");
    std::vector<Graph::Edge> edges;
    if (!at("}")) {
      do {
        const Token& et = expect("{");
        int a = small_integer();
        expect(",");
        int b = small_integer();
        expect("}");
        if (a < 1 || a > n || b < 1 || b > n) fail("edge vertex outside 1.." + std::to_string(n), et);
        if (a == b) fail("loop at vertex " + std::to_string(a), et);
        edges.emplace_back(a, b);
      } while (at(",") && (next(), true));
    }
    expect("}");
    expect(")");
    s_.add_graph(name, Graph(n, edges));
  }

  void decomposition_decl() {
    std::string name = new_name();
    expect("=");
    const Token& kw = peek();
    if (ident() != "of") fail("expected 'of'", kw);
    const Token& it = peek();
    std::string iname = ident();
    if (!s_.has(iname) || s_.kind(iname) != ObjectKind::Ideal) fail("'" + iname + "' is not an ideal", it);
    auto build = [&](auto& objs) {
      using F = typename std::decay_t<decltype(objs.rings.begin()->second->field())>;
      const auto& ib = objs.ideals.at(iname);
      const auto& R = objs.rings.at(ib.ring);
      const Token& open = expect("{");
      std::vector<ComponentSpec<F>> specs;
      do {
        Ideal<F> Q = ideal_literal(R);
        std::optional<Ideal<F>> P;
        if (peek().kind == Tok::Ident && peek().text == "radical") {
          next();
          P = ideal_literal(R);
        }
        specs.push_back(ComponentSpec<F>{std::move(Q), std::move(P)});
      } while (at(";") && (next(), true));
      expect("}");
      try {
        auto D = load_user_decomposition(ib.ideal, specs);
        objs.decompositions.emplace(name, DecompositionBinding<F>{iname, std::move(specs), std::move(D)});
      } catch (const std::invalid_argument& e) {
        fail(e.what(), open);
      }
    };
    if (s_.field_kind(iname) == FieldKind::Rationals) build(s_.objects<Rationals>());
    else build(s_.objects<PrimeField>());
    s_.bind(name, ObjectKind::Decomposition, s_.field_kind(iname));
    s_.note_decomposition(name, iname);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Session& s_;
};

template <CoefficientField F>
std::string ideal_args(const Ideal<F>& I) {
  std::string s = "ideal(";
  for (std::size_t k = 0; k < I.gens().size(); ++k) {
    if (k) s += ", ";
    s += I.gens()[k].to_string();
  }
  return s + ")";
}

}  // namespace dsl

inline Session parse_script(const std::string& text) {
  Session s;
  dsl::Parser(text, s).script();
  return s;
}

inline std::string Session::to_script() const {
  std::string out;
  std::optional<std::string> ring;
  auto emit_for = [&](const auto& objs, const std::string& n, ObjectKind k) {
    if (k == ObjectKind::Ring) {
      const auto& R = objs.rings.at(n);
      std::string f = R->field().characteristic() == 0 ? "QQ" : "ZZ/" + std::to_string(R->field().characteristic());
      std::string vars;
      for (std::size_t v = 0; v < R->nvars(); ++v) vars += (v ? ", " : "") + R->name(v);
      out += "ring " + n + " = " + f + "[" + vars + "];\n";
      ring = n;
      return;
    }
    auto ensure_ring = [&](const std::string& r) {
      if (ring != r) throw std::logic_error("session objects are out of ring order");
    };
    if (k == ObjectKind::Ideal) {
      const auto& b = objs.ideals.at(n);
      ensure_ring(b.ring);
      out += "ideal " + n + " = " + (b.graph ? "binomialEdgeIdeal(" + *b.graph + ")" : dsl::ideal_args(b.ideal)) + ";\n";
    } else if (k == ObjectKind::Matrix) {
      const auto& b = objs.matrices.at(n);
      ensure_ring(b.ring);
      std::string rows;
      for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
        rows += r ? ", [" : "[";
        for (std::size_t c = 0; c < b.matrix.cols(); ++c) rows += (c ? ", " : "") + b.matrix.entry(r, c).to_string();
        rows += "]";
      }
      out += "matrix " + n + " = [" + rows + "];\n";
    } else if (k == ObjectKind::Module) {
      out += "module " + n + " = coker " + objs.modules.at(n).source + ";\n";
    } else if (k == ObjectKind::Decomposition) {
      const auto& b = objs.decompositions.at(n);
      std::string comps;
      for (std::size_t c = 0; c < b.specs.size(); ++c) {
        comps += (c ? " ; " : " ") + dsl::ideal_args(b.specs[c].primary);
        if (b.specs[c].radical) comps += " radical " + dsl::ideal_args(*b.specs[c].radical);
      }
      out += "decomposition " + n + " = of " + b.ideal + " {" + comps + " };\n";
    }
  };
  for (const auto& n : order_) {
    const ObjectKind k = kinds_.at(n);
    if (k == ObjectKind::Graph) {
      const Graph& g = graphs_.at(n);
      std::string es;
      for (auto [a, b] : g.edges()) es += (es.empty() ? "{" : ", {") + std::to_string(a) + ", " + std::to_string(b) + "}";
      out += "graph " + n + " = graph(" + std::to_string(g.vertex_count()) + ", {" + es + "});\n";
    } else if (field_.at(n) == FieldKind::Rationals) {
      emit_for(qq_, n, k);
    } else {
      emit_for(zp_, n, k);
    }
  }
  return out;
}

}  // namespace scmkit
