// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are identified by their position in a fixed ordering; position 0
// is the least variable. Terms are stored in descending lexicographic order
// with the greatest variable compared first, so the leading term is also the
// leading term with respect to the main variable.

#ifndef ECCAD_POLYNOMIAL_HPP
#define ECCAD_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccad {

inline constexpr int kMaxVars = 8;

/// Raised when an operation is called outside its documented domain.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Position of a variable in the global ordering (0 = least variable).
struct Var {
  int index = 0;
  friend constexpr auto operator<=>(Var, Var) = default;
};

using Exponents = std::array<std::uint16_t, kMaxVars>;

/// Lexicographic comparison with the greatest variable first.
inline int compare_lex(const Exponents& a, const Exponents& b) {
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

/// Graded lexicographic comparison (total degree, then lex).
inline int compare_grlex(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  return compare_lex(a, b);
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

struct Term {
  Exponents exp{};
  mpq_class coef;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({Exponents{}, mpq_class(c)});
  }
  Polynomial(const mpq_class& c) {  // NOLINT(google-explicit-constructor)
    if (sgn(c) != 0) terms_.push_back({Exponents{}, c});
  }
  Polynomial(const mpz_class& c) : Polynomial(mpq_class(c)) {}  // NOLINT

  static Polynomial variable(Var v, unsigned power = 1) {
    check_var(v);
    Polynomial p;
    Term t;
    t.exp[v.index] = static_cast<std::uint16_t>(power);
    t.coef = 1;
    p.terms_.push_back(std::move(t));
    return p;
  }

  static Polynomial monomial(const Exponents& e, const mpq_class& c) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_.push_back({e, c});
    return p;
  }

  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return compare_lex(a.exp, b.exp) > 0;
    });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
        p.terms_.back().coef += t.coef;
      } else {
        if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && eccad::total_degree(terms_[0].exp) == 0);
  }
  mpq_class constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw UsageError("constant_value of non-constant polynomial");
    return terms_[0].coef;
  }
  /// Coefficient of the constant term.
  mpq_class constant_term() const {
    if (!terms_.empty() && eccad::total_degree(terms_.back().exp) == 0) return terms_.back().coef;
    return 0;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw UsageError("leading term of zero polynomial");
    return terms_.front();
  }

  unsigned degree(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[v.index]);
    return d;
  }

  bool has_var(Var v) const { return degree(v) > 0; }

  /// Index of the greatest variable present, or -1 for constants.
  int mvar() const {
    if (terms_.empty()) return -1;
    // Leading term in lex order carries the greatest variable present.
    const auto& e = terms_.front().exp;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e[i] != 0) return i;
    return -1;
  }

  /// Number of variables occurring (one past the largest index used).
  int level() const { return mvar() + 1; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, eccad::total_degree(t.exp));
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.mul_term(a.terms_[0]);
    if (b.size() == 1) return a.mul_term(b.terms_[0]);
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        Term n;
        for (int i = 0; i < kMaxVars; ++i) n.exp[i] = static_cast<std::uint16_t>(s.exp[i] + t.exp[i]);
        n.coef = s.coef * t.coef;
        out.push_back(std::move(n));
      }
    }
    return from_terms(std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const mpq_class& c) {
    if (sgn(c) == 0) return {};
    Polynomial r = a;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }
  friend Polynomial operator*(const mpq_class& c, const Polynomial& a) { return a * c; }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
    }
    return true;
  }

  /// Total order used for deterministic containers.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      int c = compare_lex(a.terms_[i].exp, b.terms_[i].exp);
      if (c != 0) return c < 0;
      int q = cmp(a.terms_[i].coef, b.terms_[i].coef);
      if (q != 0) return q < 0;
    }
    return a.size() < b.size();
  }

  Polynomial pow(long e) const {
    if (e < 0) throw UsageError("negative exponent in polynomial power");
    Polynomial result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Multiplies by v^k.
  Polynomial shift(Var v, unsigned k) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.exp[v.index] = static_cast<std::uint16_t>(t.exp[v.index] + k);
    return r;
  }

  Polynomial derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.exp[v.index] == 0) continue;
      Term n = t;
      n.coef *= t.exp[v.index];
      --n.exp[v.index];
      out.push_back(std::move(n));
    }
    return from_terms(std::move(out));
  }

  /// Coefficients with respect to v, indexed by power (dense, index 0 = v^0).
  std::vector<Polynomial> coefficients_by_power(Var v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) {
      Term n = t;
      n.exp[v.index] = 0;
      buckets[t.exp[v.index]].push_back(std::move(n));
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_sorted_subsequence(std::move(b)));
    return out;
  }

  /// Leading coefficient with respect to v.
  Polynomial leading_coefficient(Var v) const {
    if (is_zero()) return {};
    return coefficient(v, degree(v));
  }

  Polynomial coefficient(Var v, unsigned k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.exp[v.index] != k) continue;
      Term n = t;
      n.exp[v.index] = 0;
      out.push_back(std::move(n));
    }
    return from_sorted_subsequence(std::move(out));
  }

  static Polynomial from_coefficients(Var v, std::span<const Polynomial> coeffs) {
    Polynomial acc;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      acc += coeffs[k].shift(v, static_cast<unsigned>(k));
    }
    return acc;
  }

  /// Substitutes v := value.
  Polynomial substitute(Var v, const mpq_class& value) const {
    auto cs = coefficients_by_power(v);
    Polynomial acc;
    for (std::size_t k = cs.size(); k-- > 0;) {
      acc = acc * value + cs[k];
    }
    return acc;
  }

  /// Substitutes v := q (a polynomial).
  Polynomial substitute(Var v, const Polynomial& q) const {
    auto cs = coefficients_by_power(v);
    Polynomial acc;
    for (std::size_t k = cs.size(); k-- > 0;) acc = acc * q + cs[k];
    return acc;
  }

  /// Evaluates with every variable replaced by the corresponding value.
  mpq_class evaluate(std::span<const mpq_class> values) const {
    mpq_class acc = 0;
    for (const auto& t : terms_) {
      mpq_class m = t.coef;
      for (int i = 0; i < kMaxVars; ++i) {
        if (t.exp[i] == 0) continue;
        if (i >= static_cast<int>(values.size())) throw UsageError("evaluate: missing variable value");
        mpq_class p;
        mpz_pow_ui(p.get_num_mpz_t(), values[i].get_num_mpz_t(), t.exp[i]);
        mpz_pow_ui(p.get_den_mpz_t(), values[i].get_den_mpz_t(), t.exp[i]);
        m *= p;
      }
      acc += m;
    }
    return acc;
  }

  /// p * c * x^e
  Polynomial times_term(const Exponents& e, const mpq_class& c) const { return mul_term(Term{e, c}); }

  std::size_t hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
      for (auto e : t.exp) h = h * 31 + e;
      h = h * 131 + std::hash<long>{}(mpz_get_si(t.coef.get_num_mpz_t()));
    }
    return h;
  }

 private:
  std::vector<Term> terms_;

  static void check_var(Var v) {
    if (v.index < 0 || v.index >= kMaxVars) throw UsageError("variable index out of range");
  }

  // Input is a subsequence of a sorted term list with one exponent zeroed;
  // zeroing a single variable can break the order, so re-sort when needed.
  static Polynomial from_sorted_subsequence(std::vector<Term> terms) {
    bool sorted = std::is_sorted(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return compare_lex(a.exp, b.exp) > 0;
    });
    if (sorted) {
      bool distinct = true;
      for (std::size_t i = 1; i < terms.size(); ++i)
        if (terms[i].exp == terms[i - 1].exp) distinct = false;
      if (distinct) {
        Polynomial p;
        p.terms_ = std::move(terms);
        return p;
      }
    }
    return from_terms(std::move(terms));
  }

  Polynomial mul_term(const Term& m) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Term n;
      for (int i = 0; i < kMaxVars; ++i) n.exp[i] = static_cast<std::uint16_t>(t.exp[i] + m.exp[i]);
      n.coef = t.coef * m.coef;
      r.terms_.push_back(std::move(n));
    }
    return r;
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c;
      if (i == a.size()) c = -1;
      else if (j == b.size()) c = 1;
      else c = compare_lex(a.terms_[i].exp, b.terms_[j].exp);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coef = -t.coef;
        r.terms_.push_back(std::move(t));
      } else {
        mpq_class s = subtract ? mpq_class(a.terms_[i].coef - b.terms_[j].coef)
                               : mpq_class(a.terms_[i].coef + b.terms_[j].coef);
        if (sgn(s) != 0) r.terms_.push_back({a.terms_[i].exp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }
};

inline Polynomial operator+(const Polynomial& a, long c) { return a + Polynomial(c); }
inline Polynomial operator-(const Polynomial& a, long c) { return a - Polynomial(c); }
inline Polynomial operator*(const Polynomial& a, long c) { return a * mpq_class(c); }
inline Polynomial operator*(long c, const Polynomial& a) { return a * mpq_class(c); }

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

}  // namespace eccad

#endif  // ECCAD_POLYNOMIAL_HPP
