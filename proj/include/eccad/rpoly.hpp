// Recursive dense polynomials with integer coefficients.
//
// A value is either an integer constant or a dense coefficient vector in its
// main variable whose entries only involve lower variables. Variables are
// identified by rank; a larger rank is a greater variable. This is the working
// representation for pseudo-division, gcds and resultants.

#ifndef ECCAD_RPOLY_HPP
#define ECCAD_RPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eccad {

class RPoly {
 public:
  RPoly() = default;
  RPoly(long c) : c_(c) {}  // NOLINT(google-explicit-constructor)
  RPoly(mpz_class c) : c_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  static RPoly variable(int rank, unsigned power = 1) {
    if (power == 0) return RPoly(1);
    RPoly r;
    r.var_ = rank;
    r.cs_.assign(power + 1, RPoly());
    r.cs_.back() = RPoly(1);
    return r;
  }

  /// Builds sum cs[k] * x_rank^k; normalizes.
  static RPoly from_coeffs(int rank, std::vector<RPoly> cs) {
    RPoly r;
    r.var_ = rank;
    r.cs_ = std::move(cs);
    r.normalize();
    return r;
  }

  bool is_zero() const { return var_ < 0 && sgn(c_) == 0; }
  bool is_const() const { return var_ < 0; }
  const mpz_class& const_value() const { return c_; }
  int var() const { return var_; }

  /// Degree in the main variable (0 for constants).
  unsigned deg() const { return var_ < 0 ? 0 : static_cast<unsigned>(cs_.size() - 1); }

  unsigned deg_in(int rank) const {
    if (var_ < rank) return 0;
    if (var_ == rank) return deg();
    unsigned d = 0;
    for (const auto& c : cs_) d = std::max(d, c.deg_in(rank));
    return d;
  }

  /// Coefficient of x_rank^k where rank >= var().
  const RPoly& coeff(int rank, unsigned k) const {
    static const RPoly kZero;
    if (var_ != rank) return k == 0 ? *this : kZero;
    return k < cs_.size() ? cs_[k] : kZero;
  }
  const RPoly& lc(int rank) const { return coeff(rank, deg_in_main(rank)); }
  const std::vector<RPoly>& coeffs() const { return cs_; }

  friend bool operator==(const RPoly& a, const RPoly& b) {
    if (a.var_ != b.var_) return false;
    if (a.var_ < 0) return a.c_ == b.c_;
    return a.cs_ == b.cs_;
  }

  RPoly operator-() const {
    RPoly r = *this;
    r.negate();
    return r;
  }
  void negate() {
    if (var_ < 0) {
      c_ = -c_;
      return;
    }
    for (auto& c : cs_) c.negate();
  }

  RPoly& operator+=(const RPoly& o) {
    add_into(o, false);
    return *this;
  }
  RPoly& operator-=(const RPoly& o) {
    add_into(o, true);
    return *this;
  }
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }

  friend RPoly operator*(const RPoly& a, const RPoly& b) {
    RPoly r;
    r.addmul(a, b, false);
    return r;
  }

  /// this += a * b (or -= when subtract).
  void addmul(const RPoly& a, const RPoly& b, bool subtract) {
    if (a.is_zero() || b.is_zero()) return;
    int m = std::max(a.var_, b.var_);
    if (m < 0) {
      if (var_ < 0) {
        if (subtract) mpz_submul(c_.get_mpz_t(), a.c_.get_mpz_t(), b.c_.get_mpz_t());
        else mpz_addmul(c_.get_mpz_t(), a.c_.get_mpz_t(), b.c_.get_mpz_t());
      } else {
        cs_[0].addmul(a, b, subtract);
      }
      return;
    }
    if (var_ > m) {
      cs_[0].addmul(a, b, subtract);
      return;
    }
    if (var_ < m) {
      RPoly low = std::move(*this);
      *this = RPoly();
      var_ = m;
      cs_.resize(1);
      cs_[0] = std::move(low);
    }
    if (a.var_ == m && b.var_ == m) {
      std::size_t need = a.cs_.size() + b.cs_.size() - 1;
      if (cs_.size() < need) cs_.resize(need);
      for (std::size_t i = 0; i < a.cs_.size(); ++i) {
        if (a.cs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.cs_.size(); ++j) cs_[i + j].addmul(a.cs_[i], b.cs_[j], subtract);
      }
    } else {
      const RPoly& hi = a.var_ == m ? a : b;
      const RPoly& lo = a.var_ == m ? b : a;
      if (cs_.size() < hi.cs_.size()) cs_.resize(hi.cs_.size());
      for (std::size_t i = 0; i < hi.cs_.size(); ++i) cs_[i].addmul(hi.cs_[i], lo, subtract);
    }
    normalize();
  }

  RPoly& operator*=(const RPoly& o) { return *this = *this * o; }

  void scale(const mpz_class& k) {
    if (sgn(k) == 0) {
      *this = RPoly();
      return;
    }
    if (var_ < 0) {
      c_ *= k;
      return;
    }
    for (auto& c : cs_) c.scale(k);
  }

  RPoly pow(unsigned e) const {
    RPoly result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      e >>= 1;
      if (e > 0) base *= base;
    }
    return result;
  }

  /// Multiplies by x_rank^k where rank >= var().
  RPoly shift(int rank, unsigned k) const {
    if (k == 0 || is_zero()) return *this;
    RPoly r;
    r.var_ = rank;
    if (var_ == rank) {
      r.cs_.assign(k, RPoly());
      r.cs_.insert(r.cs_.end(), cs_.begin(), cs_.end());
    } else {
      r.cs_.assign(k + 1, RPoly());
      r.cs_.back() = *this;
    }
    return r;
  }

  /// Derivative in the main variable `rank`.
  RPoly derivative(int rank) const {
    if (var_ < rank) return {};
    if (var_ > rank) {
      RPoly r;
      r.var_ = var_;
      for (const auto& c : cs_) r.cs_.push_back(c.derivative(rank));
      r.normalize();
      return r;
    }
    std::vector<RPoly> out;
    for (std::size_t k = 1; k < cs_.size(); ++k) {
      RPoly t = cs_[k];
      t.scale(mpz_class(static_cast<unsigned long>(k)));
      out.push_back(std::move(t));
    }
    return from_coeffs(rank, std::move(out));
  }

  /// gcd of all integer coefficients (nonnegative).
  mpz_class integer_content() const {
    mpz_class g = 0;
    accumulate_content(g);
    return g;
  }

  /// Divides by the integer content and makes the leading integer positive.
  void make_integer_primitive() {
    if (is_zero()) return;
    mpz_class g = integer_content();
    if (lead_integer() < 0) g = -g;
    if (g != 1) divexact_integer(g);
  }

  void divexact_integer(const mpz_class& g) {
    if (var_ < 0) {
      mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
      return;
    }
    for (auto& c : cs_) c.divexact_integer(g);
  }

  /// Integer coefficient of the recursive leading term.
  const mpz_class& lead_integer() const { return var_ < 0 ? c_ : cs_.back().lead_integer(); }

  /// Exact quotient a / b, or nothing.
  friend std::optional<RPoly> divide_exact(const RPoly& a, const RPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero");
    if (a.is_zero()) return RPoly();
    if (b.var_ < 0) {
      RPoly r = a;
      if (!r.divisible_by_integer(b.c_)) return std::nullopt;
      r.divexact_integer(b.c_);
      return r;
    }
    if (a.var_ < b.var_) return std::nullopt;
    if (a.var_ > b.var_) {
      RPoly r;
      r.var_ = a.var_;
      r.cs_.reserve(a.cs_.size());
      for (const auto& c : a.cs_) {
        auto q = divide_exact(c, b);
        if (!q) return std::nullopt;
        r.cs_.push_back(std::move(*q));
      }
      return r;
    }
    int v = a.var_;
    if (a.deg() < b.deg()) return std::nullopt;
    std::vector<RPoly> rem = a.cs_;
    std::size_t db = b.cs_.size() - 1;
    std::vector<RPoly> quot(rem.size() - db);
    const RPoly& lb = b.cs_.back();
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k].is_zero()) continue;
      auto q = divide_exact(rem[k], lb);
      if (!q) return std::nullopt;
      std::size_t off = k - db;
      for (std::size_t j = 0; j < db; ++j) {
        rem[off + j].addmul(*q, b.cs_[j], true);
      }
      rem[k] = RPoly();
      quot[off] = std::move(*q);
    }
    for (std::size_t j = 0; j < db; ++j)
      if (!rem[j].is_zero()) return std::nullopt;
    return from_coeffs(v, std::move(quot));
  }

  /// Substitutes an integer value for the variable `rank`.
  RPoly substitute(int rank, const mpz_class& value) const {
    if (var_ < rank) return *this;
    if (var_ > rank) {
      RPoly r;
      r.var_ = var_;
      for (const auto& c : cs_) r.cs_.push_back(c.substitute(rank, value));
      r.normalize();
      return r;
    }
    RPoly acc;
    for (std::size_t k = cs_.size(); k-- > 0;) {
      acc.scale(value);
      acc += cs_[k];
    }
    return acc;
  }

  /// den^d * this(x_rank = num/den) where d = deg_in(rank); den > 0 keeps the sign.
  RPoly substitute_scaled(int rank, const mpz_class& num, const mpz_class& den) const {
    unsigned d = deg_in(rank);
    if (d == 0) return *this;
    std::vector<mpz_class> np(d + 1), dp(d + 1);
    np[0] = 1;
    dp[0] = 1;
    for (unsigned k = 1; k <= d; ++k) {
      np[k] = np[k - 1] * num;
      dp[k] = dp[k - 1] * den;
    }
    return subst_scaled_rec(rank, d, np, dp);
  }

  /// Visits every (exponent-by-rank, coefficient) pair.
  template <typename F>
  void for_each_term(F&& f) const {
    std::vector<std::pair<int, unsigned>> stack;
    visit(stack, f);
  }

  std::size_t term_count() const {
    if (var_ < 0) return is_zero() ? 0 : 1;
    std::size_t n = 0;
    for (const auto& c : cs_) n += c.term_count();
    return n;
  }

 private:
  int var_ = -1;
  mpz_class c_;
  std::vector<RPoly> cs_;

  RPoly subst_scaled_rec(int rank, unsigned d, const std::vector<mpz_class>& np,
                         const std::vector<mpz_class>& dp) const {
    if (var_ < rank) {
      RPoly r = *this;
      r.scale(dp[d]);
      return r;
    }
    if (var_ > rank) {
      RPoly r;
      r.var_ = var_;
      for (const auto& c : cs_) r.cs_.push_back(c.subst_scaled_rec(rank, d, np, dp));
      r.normalize();
      return r;
    }
    RPoly acc;
    for (std::size_t k = 0; k < cs_.size(); ++k) {
      if (cs_[k].is_zero()) continue;
      RPoly t = cs_[k];
      t.scale(np[k] * dp[d - k]);
      acc += t;
    }
    return acc;
  }

  unsigned deg_in_main(int rank) const { return var_ == rank ? deg() : 0; }

  void normalize() {
    while (!cs_.empty() && cs_.back().is_zero()) cs_.pop_back();
    if (cs_.size() <= 1) {
      RPoly c = cs_.empty() ? RPoly() : std::move(cs_[0]);
      *this = std::move(c);
    }
  }

  void add_into(const RPoly& o, bool subtract) {
    if (o.is_zero()) return;
    if (var_ < 0 && o.var_ < 0) {
      if (subtract) c_ -= o.c_;
      else c_ += o.c_;
      return;
    }
    if (var_ < o.var_) {
      RPoly self = std::move(*this);
      *this = o;
      if (subtract) negate();
      add_into(self, false);
      return;
    }
    if (var_ > o.var_) {
      cs_[0].add_into(o, subtract);
      return;
    }
    if (cs_.size() < o.cs_.size()) cs_.resize(o.cs_.size());
    for (std::size_t k = 0; k < o.cs_.size(); ++k) cs_[k].add_into(o.cs_[k], subtract);
    normalize();
  }

  void accumulate_content(mpz_class& g) const {
    if (g == 1) return;
    if (var_ < 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
      return;
    }
    for (const auto& c : cs_) c.accumulate_content(g);
  }

  bool divisible_by_integer(const mpz_class& g) const {
    if (var_ < 0) return mpz_divisible_p(c_.get_mpz_t(), g.get_mpz_t()) != 0;
    for (const auto& c : cs_)
      if (!c.divisible_by_integer(g)) return false;
    return true;
  }

  template <typename F>
  void visit(std::vector<std::pair<int, unsigned>>& stack, F& f) const {
    if (var_ < 0) {
      if (!is_zero()) f(stack, c_);
      return;
    }
    for (std::size_t k = 0; k < cs_.size(); ++k) {
      if (cs_[k].is_zero()) continue;
      stack.emplace_back(var_, static_cast<unsigned>(k));
      cs_[k].visit(stack, f);
      stack.pop_back();
    }
  }
};

inline RPoly divide_or_throw(const RPoly& a, const RPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact polynomial division");
  return std::move(*q);
}

/// Pseudo-remainder in the variable `rank` (the main variable of b).
inline RPoly prem(const RPoly& a, const RPoly& b, int rank) {
  unsigned db = b.deg_in(rank);
  unsigned da = a.deg_in(rank);
  if (da < db) return a;
  const RPoly& lb = b.lc(rank);
  std::vector<RPoly> r;
  if (a.var() == rank) {
    r = a.coeffs();
  } else {
    r.push_back(a);
  }
  int e = static_cast<int>(da - db) + 1;
  std::size_t top = r.size();
  while (top > db && top > 0) {
    // drop leading zeros
    while (top > 0 && r[top - 1].is_zero()) --top;
    if (top == 0 || top - 1 < db) break;
    RPoly lr = r[top - 1];
    std::size_t off = top - 1 - db;
    for (std::size_t k = 0; k < top - 1; ++k) r[k] *= lb;
    for (std::size_t j = 0; j < db; ++j) {
      const RPoly& bj = b.coeff(rank, j);
      r[off + j].addmul(lr, bj, true);
    }
    r[top - 1] = RPoly();
    --top;
    --e;
  }
  r.resize(std::min(r.size(), static_cast<std::size_t>(db)));
  RPoly out = RPoly::from_coeffs(rank, std::move(r));
  if (e > 0) out *= lb.pow(static_cast<unsigned>(e));
  return out;
}

/// Pseudo-division in `rank`: lc(b)^e a = q b + r with e = deg a - deg b + 1.
inline std::pair<RPoly, RPoly> pseudo_divide(const RPoly& a, const RPoly& b, int rank) {
  unsigned db = b.deg_in(rank);
  unsigned da = a.deg_in(rank);
  if (da < db) return {RPoly(), a};
  const RPoly& lb = b.lc(rank);
  std::vector<RPoly> r = a.var() == rank ? a.coeffs() : std::vector<RPoly>{a};
  std::vector<RPoly> q(da - db + 1);
  int e = static_cast<int>(da - db) + 1;
  for (std::size_t top = r.size(); top-- > db;) {
    if (r[top].is_zero()) continue;
    RPoly lr = r[top];
    std::size_t off = top - db;
    for (auto& qc : q) qc *= lb;
    q[off] += lr;
    for (std::size_t k = 0; k < top; ++k) r[k] *= lb;
    for (std::size_t j = 0; j < db; ++j) r[off + j].addmul(lr, b.coeff(rank, j), true);
    r[top] = RPoly();
    --e;
  }
  r.resize(std::min(r.size(), static_cast<std::size_t>(db)));
  RPoly qq = RPoly::from_coeffs(rank, std::move(q));
  RPoly rr = RPoly::from_coeffs(rank, std::move(r));
  if (e > 0) {
    RPoly f = lb.pow(static_cast<unsigned>(e));
    qq *= f;
    rr *= f;
  }
  return {qq, rr};
}

}  // namespace eccad

#endif  // ECCAD_RPOLY_HPP
