// Content, gcd, resultants, discriminants and squarefree bases.

#ifndef ECCAD_POLYALG_HPP
#define ECCAD_POLYALG_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eccad/polynomial.hpp"
#include "eccad/ralg.hpp"

namespace eccad {

// ---------------------------------------------------------------------------
// Scaling and canonical form

/// Positive rational c with p / c having coprime integer coefficients.
inline mpq_class rational_content(const Polynomial& p) {
  if (p.is_zero()) return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  mpq_class c(num, den);
  c.canonicalize();
  return c;
}

/// Leading term under graded lexicographic order.
inline const Term& grlex_leading_term(const Polynomial& p) {
  const Term* best = &p.leading_term();
  for (const auto& t : p.terms())
    if (compare_grlex(t.exp, best->exp) > 0) best = &t;
  return *best;
}

/// Integer-primitive with positive graded-lex leading coefficient.
inline Polynomial canonical(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpq_class c = rational_content(p);
  if (sgn(grlex_leading_term(p).coef) < 0) c = -c;
  if (c == 1) return p;
  mpq_class inv = 1 / c;
  return p * inv;
}

/// Integer-primitive, keeping the sign.
inline Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpq_class c = rational_content(p);
  if (c == 1) return p;
  mpq_class inv = 1 / c;
  return p * inv;
}

// ---------------------------------------------------------------------------
// Division

/// q such that p = d * q, or nothing if d does not divide p.
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw UsageError("division by zero polynomial");
  if (p.is_zero()) return Polynomial{};
  if (d.is_constant()) return p * (1 / d.constant_value());
  int top = std::max(p.mvar(), d.mvar());
  auto sp = to_rpoly(p, top);
  auto sd = to_rpoly(d, top);
  mpz_class cd = sd.poly.integer_content();
  sd.poly.divexact_integer(cd);
  auto q = divide_exact(sp.poly, sd.poly);
  if (!q) return std::nullopt;
  // p * dp = q * (d * dd / cd)  =>  p / d = q * dd / (dp * cd)
  mpq_class scale(sd.den, sp.den * cd);
  scale.canonicalize();
  return from_rpoly(*q, top) * scale;
}

inline Polynomial divide_or_throw(const Polynomial& p, const Polynomial& d) {
  auto q = divide_exact(p, d);
  if (!q) throw std::logic_error("inexact polynomial division");
  return *q;
}

/// Pseudo-remainder of a by b in v: lc(b)^(deg a - deg b + 1) a mod b.
inline Polynomial prem(const Polynomial& a, const Polynomial& b, Var v) {
  if (b.is_zero()) throw UsageError("prem by zero");
  auto sa = to_rpoly(a, v.index), sb = to_rpoly(b, v.index);
  RPoly r = prem(sa.poly, sb.poly, kMaxVars);
  // Scaling: prem(ka, lb) = k l^(e) prem(a, b) with e = deg a - deg b + 1.
  int e = static_cast<int>(a.degree(v)) - static_cast<int>(b.degree(v)) + 1;
  if (e <= 0) return a;
  mpz_class lpow;
  mpz_pow_ui(lpow.get_mpz_t(), sb.den.get_mpz_t(), static_cast<unsigned long>(e));
  mpq_class scale(1, sa.den * lpow);
  scale.canonicalize();
  return from_rpoly(r, v.index) * scale;
}

// ---------------------------------------------------------------------------
// gcd and content

/// gcd of the coefficients of p viewed in v, canonical.
inline Polynomial content(const Polynomial& p, Var v) {
  if (p.is_zero()) throw UsageError("content of zero polynomial");
  if (!p.has_var(v)) return canonical(p);
  auto sp = to_rpoly(p, v.index);
  return canonical(from_rpoly(rcontent(sp.poly), v.index));
}

struct ContentPrim {
  Polynomial content;
  Polynomial primitive;
};

/// p = content * primitive; primitive canonical, content absorbs constants and sign.
inline ContentPrim content_primpart(const Polynomial& p, Var v) {
  if (p.is_zero()) throw UsageError("content_primpart of zero polynomial");
  if (!p.has_var(v)) return {p, Polynomial(1)};
  auto sp = to_rpoly(p, v.index);
  Polynomial prim = canonical(from_rpoly(rprimitive(sp.poly), v.index));
  return {divide_or_throw(p, prim), prim};
}

/// Greatest common divisor in canonical form.
inline Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return canonical(q);
  if (q.is_zero()) return canonical(p);
  if (p.is_constant() || q.is_constant()) return 1;
  int top = std::max(p.mvar(), q.mvar());
  RPoly g = rgcd(to_rpoly(p, top).poly, to_rpoly(q, top).poly);
  return canonical(from_rpoly(g, top));
}

// ---------------------------------------------------------------------------
// Resultant and discriminant

/// Sylvester resultant in v, p's rows first.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v) {
  unsigned dp = p.degree(v), dq = q.degree(v);
  if (dp == 0 || dq == 0) throw UsageError("resultant needs positive degree in the variable");
  auto sp = to_rpoly(p, v.index), sq = to_rpoly(q, v.index);
  RPoly r = rresultant(sp.poly, sq.poly, kMaxVars);
  // res(kp, lq) = k^deg q * l^deg p * res(p, q)
  mpz_class a, b;
  mpz_pow_ui(a.get_mpz_t(), sp.den.get_mpz_t(), dq);
  mpz_pow_ui(b.get_mpz_t(), sq.den.get_mpz_t(), dp);
  mpq_class scale(1, a * b);
  scale.canonicalize();
  return from_rpoly(r, v.index) * scale;
}

inline Polynomial discriminant(const Polynomial& p, Var v) {
  unsigned d = p.degree(v);
  if (d == 0) throw UsageError("discriminant needs positive degree in the variable");
  if (d == 1) return 1;
  Polynomial r = resultant(p, p.derivative(v), v);
  Polynomial q = divide_or_throw(r, p.coefficient(v, d));
  return ((d * (d - 1) / 2) % 2 == 1) ? -q : q;
}

/// Coefficients in v from the leading one downward, zeros omitted.
inline std::vector<Polynomial> coefficients(const Polynomial& p, Var v) {
  auto cs = p.coefficients_by_power(v);
  std::vector<Polynomial> out;
  for (std::size_t k = cs.size(); k-- > 0;)
    if (!cs[k].is_zero()) out.push_back(cs[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Squarefree decomposition

/// Squarefree factors in v of the primitive part of p (multiplicities dropped).
inline std::vector<Polynomial> squarefree_factors_in(const Polynomial& p, Var v) {
  std::vector<Polynomial> out;
  if (!p.has_var(v)) return out;
  RPoly prim = rprimitive(to_rpoly(p, v.index).poly);
  for (const auto& f : ryun(prim, kMaxVars)) out.push_back(canonical(from_rpoly(f, v.index)));
  return out;
}

/// Squarefree part in v, canonical and primitive.
inline Polynomial squarefree_part(const Polynomial& p, Var v) {
  if (!p.has_var(v)) return content_primpart(p, v).primitive;
  RPoly prim = rprimitive(to_rpoly(p, v.index).poly);
  RPoly g = rgcd(prim, prim.derivative(kMaxVars));
  RPoly s = g.var() == kMaxVars ? divide_or_throw(prim, g) : prim;
  return canonical(from_rpoly(s, v.index));
}

/// Nonconstant squarefree factors of p over all variables (via recursive contents).
inline std::vector<Polynomial> canonical_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.is_zero() || p.is_constant()) return out;
  Var v{p.mvar()};
  auto cp = content_primpart(p, v);
  out = canonical_factors(cp.content);
  for (auto& f : squarefree_factors_in(cp.primitive, v)) out.push_back(std::move(f));
  return out;
}

/// Inserts e into a pairwise coprime squarefree list, splitting by gcds.
inline void basis_insert(std::vector<Polynomial>& basis, Polynomial e) {
  for (std::size_t i = 0; i < basis.size() && !e.is_constant(); ++i) {
    Polynomial g = gcd(e, basis[i]);
    if (g.is_constant()) continue;
    Polynomial rest = divide_or_throw(basis[i], g);
    e = divide_or_throw(e, g);
    basis[i] = g;
    if (!rest.is_constant()) basis.push_back(canonical(rest));
  }
  if (!e.is_constant()) basis.push_back(canonical(e));
}

/// Finest squarefree basis (coprime, squarefree, canonical) of the primitive parts in v.
inline std::vector<Polynomial> squarefree_basis(const std::vector<Polynomial>& polys, Var v) {
  std::vector<Polynomial> basis;
  for (const auto& p : polys) {
    if (!p.has_var(v)) throw UsageError("squarefree_basis element free of the variable");
    for (auto& f : squarefree_factors_in(p, v)) basis_insert(basis, f);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Printing

inline std::string to_string(const mpq_class& q) {
  return q.get_str();
}

/// Variable names default to x1, x2, ...
inline std::string to_string(const Polynomial& p, const std::vector<std::string>& names = {}) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::stable_sort(ts.begin(), ts.end(),
                   [](const Term* a, const Term* b) { return compare_grlex(a->exp, b->exp) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : ts) {
    mpq_class c = t->coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (total_degree(t->exp) > 0 && c == 1);
    if (!unit) os << c.get_str();
    bool need_star = !unit;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      if (t->exp[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      if (i < static_cast<int>(names.size())) os << names[i];
      else os << "x" << (i + 1);
      if (t->exp[i] > 1) os << "^" << t->exp[i];
    }
  }
  return os.str();
}

}  // namespace eccad

#endif  // ECCAD_POLYALG_HPP
