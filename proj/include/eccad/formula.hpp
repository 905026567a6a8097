// Quantifier-free formulas: sign atoms under and/or/not, the .qff input
// format, truth evaluation at sample points.

#ifndef ECCAD_FORMULA_HPP
#define ECCAD_FORMULA_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eccad/poly_parse.hpp"
#include "eccad/polyset.hpp"
#include "eccad/realalg.hpp"

namespace eccad {

enum class Rel { Eq, Ne, Lt, Le, Gt, Ge };

inline const char* rel_text(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Ne: return "!=";
    case Rel::Lt: return "<";
    case Rel::Le: return "<=";
    case Rel::Gt: return ">";
    case Rel::Ge: return ">=";
  }
  return "?";
}

/// Relation seen from the other side of a sign flip (p rel 0  <=>  -p flip(rel) 0).
inline Rel flip(Rel r) {
  switch (r) {
    case Rel::Lt: return Rel::Gt;
    case Rel::Le: return Rel::Ge;
    case Rel::Gt: return Rel::Lt;
    case Rel::Ge: return Rel::Le;
    default: return r;
  }
}

inline bool rel_holds(Rel r, int sign) {
  switch (r) {
    case Rel::Eq: return sign == 0;
    case Rel::Ne: return sign != 0;
    case Rel::Lt: return sign < 0;
    case Rel::Le: return sign <= 0;
    case Rel::Gt: return sign > 0;
    case Rel::Ge: return sign >= 0;
  }
  return false;
}

/// `poly rel 0` with poly canonical.
struct Atom {
  Polynomial poly;
  Rel rel = Rel::Eq;

  static Atom make(const Polynomial& p, Rel rel) {
    if (p.is_zero()) throw UsageError("zero polynomial in atom");
    Atom a;
    a.poly = canonical(p);
    a.rel = sgn(grlex_leading_term(p).coef) < 0 ? flip(rel) : rel;
    return a;
  }
  friend bool operator==(const Atom&, const Atom&) = default;
};

class Formula {
 public:
  enum class Kind { Atom, And, Or, Not };

  Formula() : kind_(Kind::And) {}  // empty conjunction

  static Formula atom(Atom a) {
    Formula f(Kind::Atom);
    f.atom_ = std::move(a);
    return f;
  }
  static Formula conj(std::vector<Formula> kids) { return junction(Kind::And, std::move(kids)); }
  static Formula disj(std::vector<Formula> kids) { return junction(Kind::Or, std::move(kids)); }
  static Formula negation(Formula f) {
    Formula r(Kind::Not);
    r.kids_.push_back(std::move(f));
    return r;
  }

  Kind kind() const { return kind_; }
  const Atom& atom() const { return atom_; }
  const std::vector<Formula>& kids() const { return kids_; }

  /// Subformulas whose truth follows from the whole (flattened top-level conjunction).
  std::vector<const Formula*> conjuncts() const {
    std::vector<const Formula*> out;
    collect_conjuncts(*this, out);
    return out;
  }

  template <class F>
  void for_each_atom(F&& f) const {
    if (kind_ == Kind::Atom) {
      f(atom_);
      return;
    }
    for (const auto& k : kids_) k.for_each_atom(f);
  }

  /// Truth given a sign oracle for atom polynomials.
  template <class SignFn>
  bool evaluate(SignFn&& sign) const {
    switch (kind_) {
      case Kind::Atom: return rel_holds(atom_.rel, sign(atom_.poly));
      case Kind::Not: return !kids_[0].evaluate(sign);
      case Kind::And:
        for (const auto& k : kids_)
          if (!k.evaluate(sign)) return false;
        return true;
      case Kind::Or:
        for (const auto& k : kids_)
          if (k.evaluate(sign)) return true;
        return false;
    }
    return false;
  }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(Kind k) : kind_(k) {}

  static Formula junction(Kind k, std::vector<Formula> kids) {
    if (kids.size() == 1) return std::move(kids[0]);
    Formula f(k);
    for (auto& c : kids) {
      if (c.kind_ == k) {
        for (auto& g : c.kids_) f.kids_.push_back(std::move(g));
      } else {
        f.kids_.push_back(std::move(c));
      }
    }
    return f;
  }

  static void collect_conjuncts(const Formula& f, std::vector<const Formula*>& out) {
    if (f.kind_ == Kind::And) {
      for (const auto& k : f.kids_) collect_conjuncts(k, out);
    } else {
      out.push_back(&f);
    }
  }

  Kind kind_;
  Atom atom_;
  std::vector<Formula> kids_;
};

/// A parsed input file.
struct Problem {
  std::vector<std::string> vars;  // x_1 first
  Formula formula = Formula::atom(Atom::make(Polynomial(1), Rel::Eq));
};

namespace detail {

inline bool accept_rel(Scanner& sc, Rel& r) {
  if (sc.accept("!=")) r = Rel::Ne;
  else if (sc.accept("<=")) r = Rel::Le;
  else if (sc.accept(">=")) r = Rel::Ge;
  else if (sc.accept("=")) r = Rel::Eq;
  else if (sc.accept("<")) r = Rel::Lt;
  else if (sc.accept(">")) r = Rel::Gt;
  else return false;
  return true;
}

inline Formula parse_or(Scanner& sc, const ParseContext& ctx);

inline Formula parse_atom(Scanner& sc, const ParseContext& ctx) {
  Polynomial lhs = parse_polynomial(sc, ctx);
  Rel r;
  if (!accept_rel(sc, r)) sc.fail("expected relation");
  std::size_t at = sc.pos();
  Polynomial rhs = parse_polynomial(sc, ctx);
  Polynomial d = lhs - rhs;
  if (d.is_zero()) {
    sc.set_pos(at);
    sc.fail("atom polynomial is zero");
  }
  return Formula::atom(Atom::make(d, r));
}

inline Formula parse_not(Scanner& sc, const ParseContext& ctx) {
  if (sc.accept("~")) return Formula::negation(parse_not(sc, ctx));
  if (sc.peek() == '(') {
    // Either a parenthesised formula or an atom starting with a parenthesised polynomial.
    std::size_t start = sc.pos();
    try {
      sc.expect("(");
      Formula f = parse_or(sc, ctx);
      sc.expect(")");
      Rel r;
      std::size_t after = sc.pos();
      bool more = accept_rel(sc, r);
      sc.set_pos(after);
      char c = sc.peek();
      if (!more && c != '*' && c != '^' && c != '+' && c != '-' && (c != '/' || sc.starts_with("/\\")))
        return f;
    } catch (const ParseError&) {
    }
    sc.set_pos(start);
  }
  return parse_atom(sc, ctx);
}

inline Formula parse_and(Scanner& sc, const ParseContext& ctx) {
  std::vector<Formula> kids{parse_not(sc, ctx)};
  while (sc.accept("/\\")) kids.push_back(parse_not(sc, ctx));
  return Formula::conj(std::move(kids));
}

inline Formula parse_or(Scanner& sc, const ParseContext& ctx) {
  std::vector<Formula> kids{parse_and(sc, ctx)};
  while (sc.accept("\\/")) kids.push_back(parse_and(sc, ctx));
  return Formula::disj(std::move(kids));
}

}  // namespace detail

/// Parses a formula expression over declared variables.
inline Formula parse_formula(std::string_view text, const ParseContext& ctx) {
  Scanner sc(text);
  Formula f = detail::parse_or(sc, ctx);
  if (!sc.at_end()) sc.fail("trailing input");
  return f;
}

inline Formula parse_qff(std::string_view text, const std::vector<std::string>& ordering) {
  ParseContext ctx;
  ctx.vars = ordering;
  return parse_formula(text, ctx);
}

/// Parses the file format: `vars: a < b < c`, optional `let name = poly`
/// lines, then `formula: <expr>` (which may span the rest of the file).
inline Problem parse_problem(std::string_view text) {
  Problem prob;
  ParseContext ctx;
  bool have_vars = false;
  std::size_t pos = 0;
  int line = 1;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view ln = text.substr(pos, eol - pos);
    Scanner sc(ln, line, 1);
    if (sc.at_end() || sc.peek() == '#') {
      // blank or comment
    } else if (sc.accept("vars:")) {
      if (have_vars) sc.fail("duplicate vars line");
      ctx.vars.push_back(sc.identifier());
      while (sc.accept("<")) ctx.vars.push_back(sc.identifier());
      if (!sc.at_end()) sc.fail("expected '<' between variables");
      if (ctx.vars.size() > static_cast<std::size_t>(kMaxVars)) sc.fail("too many variables");
      for (std::size_t i = 0; i < ctx.vars.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (ctx.vars[i] == ctx.vars[j]) sc.fail("duplicate variable '" + ctx.vars[i] + "'");
      have_vars = true;
    } else if (sc.starts_with("let")) {
      if (!have_vars) sc.fail("vars line must come first");
      sc.expect("let");
      std::string name = sc.identifier();
      if (ctx.var_index(name) >= 0) sc.fail("macro name shadows a variable");
      sc.expect("=");
      Polynomial p = parse_polynomial(sc, ctx);
      if (!sc.at_end()) sc.fail("trailing input");
      ctx.macros[name] = p;
    } else if (sc.accept("formula:")) {
      if (!have_vars) sc.fail("vars line must come first");
      std::size_t off = pos + sc.pos();
      std::string_view rest = text.substr(off);
      int col = static_cast<int>(sc.pos()) + 1;
      Scanner fs(rest, line, col);
      prob.formula = detail::parse_or(fs, ctx);
      if (!fs.at_end()) fs.fail("trailing input");
      prob.vars = ctx.vars;
      return prob;
    } else {
      sc.fail("expected 'vars:', 'let' or 'formula:'");
    }
    pos = eol + 1;
    ++line;
  }
  throw ParseError(line, 1, "missing 'formula:' line");
}

// ---------------------------------------------------------------------------

inline std::string to_string(const Formula& f, const std::vector<std::string>& names = {}) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return to_string(f.atom().poly, names) + " " + rel_text(f.atom().rel) + " 0";
    case Formula::Kind::Not:
      return "~(" + to_string(f.kids()[0], names) + ")";
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* op = f.kind() == Formula::Kind::And ? " /\\ " : " \\/ ";
      std::string s;
      for (std::size_t i = 0; i < f.kids().size(); ++i) {
        if (i) s += op;
        const Formula& k = f.kids()[i];
        bool wrap = k.kind() == Formula::Kind::And || k.kind() == Formula::Kind::Or;
        s += wrap ? "(" + to_string(k, names) + ")" : to_string(k, names);
      }
      return s;
    }
  }
  return "";
}

/// All atom polynomials.
inline PolySet extract_polynomials(const Formula& f) {
  PolySet s;
  f.for_each_atom([&](const Atom& a) { s.insert(a.poly); });
  return s;
}

inline bool evaluate_truth(const Formula& f, const SamplePoint& s) {
  return f.evaluate([&](const Polynomial& p) { return sign_at(p, s); });
}

inline bool evaluate_truth(const Formula& f, const std::vector<mpq_class>& point) {
  return f.evaluate([&](const Polynomial& p) { return sgn(p.evaluate(point)); });
}

}  // namespace eccad

#endif  // ECCAD_FORMULA_HPP
