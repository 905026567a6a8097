// Text syntax for polynomials: integers, rationals, declared names, + - * / ^, parentheses.

#ifndef ECCAD_POLY_PARSE_HPP
#define ECCAD_POLY_PARSE_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eccad/polynomial.hpp"

namespace eccad {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Cursor over source text that tracks line and column.
class Scanner {
 public:
  explicit Scanner(std::string_view text, int line = 1, int column = 1)
      : text_(text), line0_(line), col0_(column) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) fail("expected '" + std::string(s) + "'");
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  [[noreturn]] void fail(const std::string& msg) const {
    int line = line0_, col = col0_;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line0_, col0_;
};

/// Names of variables (index = position in the ordering) plus macro definitions.
struct ParseContext {
  std::vector<std::string> vars;
  std::map<std::string, Polynomial> macros;

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline Polynomial parse_sum(Scanner& sc, const ParseContext& ctx);

inline Polynomial parse_primary(Scanner& sc, const ParseContext& ctx) {
  char c = sc.peek();
  if (c == '(') {
    sc.expect("(");
    Polynomial p = parse_sum(sc, ctx);
    sc.expect(")");
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial(mpq_class(mpz_class(sc.digits())));
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::size_t at = sc.pos();
    std::string name = sc.identifier();
    int idx = ctx.var_index(name);
    if (idx >= 0) return Polynomial::variable(Var{idx});
    auto it = ctx.macros.find(name);
    if (it != ctx.macros.end()) return it->second;
    sc.set_pos(at);
    sc.fail("unknown variable '" + name + "'");
  }
  sc.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
}

inline Polynomial parse_power(Scanner& sc, const ParseContext& ctx) {
  Polynomial base = parse_primary(sc, ctx);
  if (sc.accept("^")) {
    std::size_t at = sc.pos();
    std::string d = sc.digits();
    if (d.size() > 4) {
      sc.set_pos(at);
      sc.fail("exponent too large");
    }
    base = base.pow(std::stol(d));
  }
  return base;
}

inline Polynomial parse_unary(Scanner& sc, const ParseContext& ctx) {
  if (sc.accept("-")) return -parse_unary(sc, ctx);
  if (sc.accept("+")) return parse_unary(sc, ctx);
  return parse_power(sc, ctx);
}

inline Polynomial parse_product(Scanner& sc, const ParseContext& ctx) {
  Polynomial acc = parse_unary(sc, ctx);
  while (true) {
    if (sc.accept("*")) {
      acc *= parse_unary(sc, ctx);
    } else if (sc.peek() == '/' && !sc.starts_with("/\\")) {
      sc.expect("/");
      std::size_t at = sc.pos();
      Polynomial d = parse_unary(sc, ctx);
      if (!d.is_constant() || d.is_zero()) {
        sc.set_pos(at);
        sc.fail("division only by nonzero constants");
      }
      acc = acc * (1 / d.constant_value());
    } else {
      return acc;
    }
  }
}

inline Polynomial parse_sum(Scanner& sc, const ParseContext& ctx) {
  Polynomial acc = parse_product(sc, ctx);
  while (true) {
    if (sc.accept("+")) {
      acc += parse_product(sc, ctx);
    } else if (sc.peek() == '-') {
      sc.expect("-");
      acc -= parse_product(sc, ctx);
    } else {
      return acc;
    }
  }
}

}  // namespace detail

/// Parses a polynomial expression from the scanner's position.
inline Polynomial parse_polynomial(Scanner& sc, const ParseContext& ctx) {
  return detail::parse_sum(sc, ctx);
}

/// Parses a complete polynomial string.
inline Polynomial parse_polynomial(std::string_view text, const ParseContext& ctx) {
  Scanner sc(text);
  Polynomial p = parse_polynomial(sc, ctx);
  if (!sc.at_end()) sc.fail("trailing input");
  return p;
}

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  ParseContext ctx;
  ctx.vars = vars;
  return parse_polynomial(text, ctx);
}

}  // namespace eccad

#endif  // ECCAD_POLY_PARSE_HPP
