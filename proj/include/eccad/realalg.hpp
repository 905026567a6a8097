// Real root isolation, algebraic numbers, sample points and exact signs.
//
// A sample point is a tower of coordinates. Coordinate k is either a rational
// number or the unique root in an isolating interval of a defining polynomial
// D(x_1..x_k) whose leading coefficient is nonzero at the lower coordinates
// and which is squarefree there. Signs are decided by interval evaluation
// with refinement; ties are broken by an exact zero test that computes the
// gcd of D and the polynomial over the lower coordinates.

#ifndef ECCAD_REALALG_HPP
#define ECCAD_REALALG_HPP

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eccad/interval.hpp"
#include "eccad/polyalg.hpp"
#include "eccad/ralg.hpp"

namespace eccad {

// ---------------------------------------------------------------------------
// Small rational helpers

inline mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}
inline mpz_class ceil_q(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace detail {
inline mpz_class least_magnitude(const mpz_class& lo, const mpz_class& hi) {
  if (lo <= 0 && hi >= 0) return 0;
  return lo > 0 ? lo : hi;
}
}  // namespace detail

/// A "nice" rational in the open interval (a, b): an integer of least
/// magnitude if one exists, else a dyadic of least denominator.
inline mpq_class simplest_between(const mpq_class& a, const mpq_class& b) {
  if (!(a < b)) throw UsageError("simplest_between needs a < b");
  mpz_class den = 1;
  for (int k = 0; k < 4096; ++k) {
    mpq_class as = a * den, bs = b * den;
    mpz_class lo = floor_q(as) + 1, hi = ceil_q(bs) - 1;
    if (lo <= hi) {
      mpq_class r(detail::least_magnitude(lo, hi), den);
      r.canonicalize();
      return r;
    }
    den *= 2;
  }
  throw std::logic_error("simplest_between: no dyadic found");
}

// ---------------------------------------------------------------------------
// Descartes (Vincent-Collins-Akritas) bisection over a generic coefficient type.

struct RootBox {
  mpq_class lo, hi;
  bool exact = false;  // lo == hi is the root
};

namespace detail {

inline void coef_scale(mpz_class& c, const mpz_class& k) { c *= k; }
inline void coef_scale(RPoly& c, const mpz_class& k) { c.scale(k); }

template <class C>
void taylor_shift1(std::vector<C>& a) {
  std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
}

template <class C, class SignFn>
class Descartes {
 public:
  explicit Descartes(SignFn sign) : sign_(std::move(sign)) {}

  // Roots of q(t) in the open unit interval, mapped affinely onto (lo, hi).
  void run(std::vector<C> q, const mpq_class& lo, const mpq_class& hi, int depth) {
    if (depth > 4000) throw std::logic_error("root isolation did not terminate");
    int v = variations(q);
    if (v == 0) return;
    if (v == 1) {
      out.push_back({lo, hi, false});
      return;
    }
    std::size_t n = q.size() - 1;
    mpq_class mid = (lo + hi) / 2;
    // qL(t) = 2^n q(t/2)
    std::vector<C> ql = q;
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_class f;
      mpz_ui_pow_ui(f.get_mpz_t(), 2, n - k);
      coef_scale(ql[k], f);
    }
    C sum = ql[0];
    for (std::size_t k = 1; k <= n; ++k) sum += ql[k];
    bool mid_root = sign_(sum) == 0;
    std::vector<C> qr = ql;
    taylor_shift1(qr);
    run(std::move(ql), lo, mid, depth + 1);
    if (mid_root) out.push_back({mid, mid, true});
    run(std::move(qr), mid, hi, depth + 1);
  }

  std::vector<RootBox> out;

 private:
  SignFn sign_;

  int variations(const std::vector<C>& q) {
    std::vector<C> r(q.rbegin(), q.rend());
    taylor_shift1(r);
    int count = 0, last = 0;
    for (const auto& c : r) {
      int s = sign_(c);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }
};

/// All real roots of sum p[k] x^k with |roots| < 2^bound_bits, ascending.
template <class C, class SignFn>
std::vector<RootBox> isolate_generic(const std::vector<C>& p, unsigned bound_bits, SignFn sign) {
  std::vector<RootBox> result;
  std::size_t n = p.size() - 1;
  mpz_class B;
  mpz_ui_pow_ui(B.get_mpz_t(), 2, bound_bits);
  auto side = [&](bool negative) {
    std::vector<C> q = p;
    mpz_class f = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      mpz_class g = (negative && (k % 2 == 1)) ? mpz_class(-f) : f;
      coef_scale(q[k], g);
      f *= B;
    }
    Descartes<C, SignFn> d(sign);
    d.run(std::move(q), mpq_class(0), mpq_class(B), 0);
    return std::move(d.out);
  };
  auto neg = side(true);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) {
    result.push_back({-it->hi, -it->lo, it->exact});
  }
  if (sign(p[0]) == 0) result.push_back({mpq_class(0), mpq_class(0), true});
  for (auto& r : side(false)) result.push_back(std::move(r));
  return result;
}

inline unsigned bits_for_bound(const mpq_class& bound) {
  unsigned b = 0;
  mpq_class p = 1;
  while (p <= bound) {
    p *= 2;
    ++b;
  }
  return b;
}

/// Cauchy bound exponent for integer coefficients.
inline unsigned cauchy_bits(const std::vector<mpz_class>& p) {
  mpz_class lc = abs(p.back());
  mpq_class m = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    mpq_class r(abs(p[k]), lc);
    r.canonicalize();
    if (r > m) m = r;
  }
  return bits_for_bound(m + 1);
}

inline int eval_sign_dense(const std::vector<mpz_class>& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return sgn(acc);
}

inline std::vector<mpz_class> dense_derivative(const std::vector<mpz_class>& p) {
  std::vector<mpz_class> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  return d;
}

/// Moves isolating-interval endpoints off roots. sign(x) evaluates the
/// polynomial; dsign(x) its derivative. Returns the final box and sign at lo.
template <class SignAt, class DSignAt>
std::pair<RootBox, int> clean_box(RootBox b, SignAt sign, DSignAt dsign) {
  if (b.exact) return {b, 0};
  int slo = sign(b.lo), shi = sign(b.hi);
  while (slo == 0 || shi == 0) {
    mpq_class mid = (b.lo + b.hi) / 2;
    int sm = sign(mid);
    if (sm == 0) return {RootBox{mid, mid, true}, 0};
    bool root_right;  // root lies in (mid, hi)
    if (slo != 0) {
      root_right = (sm == slo);
    } else if (shi != 0) {
      root_right = (sm != shi);
    } else {
      int just_right_of_lo = dsign(b.lo);
      root_right = (just_right_of_lo == sm);
    }
    if (root_right) {
      b.lo = mid;
      slo = sm;
    } else {
      b.hi = mid;
      shi = sm;
    }
  }
  return {b, slo};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Univariate algebraic numbers

/// A real root of a univariate polynomial, pinned by an isolating interval.
struct AlgebraicNumber {
  Polynomial defpoly;  // squarefree, univariate
  int var = 0;
  mpq_class lo, hi;
  std::optional<mpq_class> rational;
  int root_index = 1;  // 1-based among the real roots of defpoly
};

inline std::vector<mpz_class> dense_integer_coeffs(const Polynomial& p, Var v) {
  auto sp = to_rpoly(p, v.index);
  std::vector<mpz_class> out;
  if (sp.poly.var() == kMaxVars) {
    for (const auto& c : sp.poly.coeffs()) {
      if (!c.is_const()) throw UsageError("polynomial is not univariate");
      out.push_back(c.const_value());
    }
  } else {
    if (!sp.poly.is_const()) throw UsageError("polynomial is not univariate");
    out.push_back(sp.poly.const_value());
  }
  return out;
}

namespace detail {

inline std::vector<mpz_class> squarefree_dense(const std::vector<mpz_class>& p) {
  if (p.size() <= 2) return p;
  std::vector<RPoly> cs(p.begin(), p.end());
  RPoly r = RPoly::from_coeffs(0, cs);
  RPoly g = rgcd(r, r.derivative(0));
  RPoly s = g.is_const() ? r : divide_or_throw(r, g);
  s.make_integer_primitive();
  std::vector<mpz_class> out;
  for (const auto& c : s.coeffs()) out.push_back(c.const_value());
  return out;
}

/// Root boxes with clean endpoints for a squarefree integer polynomial.
inline std::vector<std::pair<RootBox, int>> isolate_dense(const std::vector<mpz_class>& sq) {
  std::vector<std::pair<RootBox, int>> out;
  if (sq.size() < 2) return out;
  auto boxes = isolate_generic(sq, cauchy_bits(sq), [](const mpz_class& c) { return sgn(c); });
  auto dsq = dense_derivative(sq);
  for (auto& b : boxes) {
    out.push_back(clean_box(
        b, [&](const mpq_class& x) { return eval_sign_dense(sq, x); },
        [&](const mpq_class& x) { return eval_sign_dense(dsq, x); }));
  }
  return out;
}

}  // namespace detail

/// All distinct real roots of a univariate polynomial, ascending.
inline std::vector<AlgebraicNumber> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("isolate_real_roots of zero polynomial");
  if (p.is_constant()) return {};
  Var v{p.mvar()};
  auto dense = dense_integer_coeffs(p, v);
  auto sq = detail::squarefree_dense(dense);
  std::vector<RPoly> cs(sq.begin(), sq.end());
  Polynomial def = canonical(from_rpoly(RPoly::from_coeffs(v.index, cs), -1));
  std::vector<AlgebraicNumber> out;
  int idx = 0;
  for (auto& [b, slo] : detail::isolate_dense(sq)) {
    AlgebraicNumber a;
    a.defpoly = def;
    a.var = v.index;
    a.lo = b.lo;
    a.hi = b.hi;
    a.root_index = ++idx;
    if (b.exact) a.rational = b.lo;
    out.push_back(std::move(a));
  }
  return out;
}

/// Same root with interval width at most `width`.
inline AlgebraicNumber refine(const AlgebraicNumber& a, const mpq_class& width) {
  if (a.rational) return a;
  AlgebraicNumber r = a;
  auto dense = dense_integer_coeffs(a.defpoly, Var{a.var});
  int slo = detail::eval_sign_dense(dense, r.lo);
  while (r.hi - r.lo > width) {
    mpq_class mid = (r.lo + r.hi) / 2;
    int sm = detail::eval_sign_dense(dense, mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
      r.rational = mid;
      break;
    }
    if (sm == slo) r.lo = mid;
    else r.hi = mid;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sample points

class SampleNode {
 public:
  SampleNode(int level, mpq_class value) : level_(level), value_(std::move(value)) {}
  SampleNode(int level, RPoly def, int root_index, mpq_class lo, mpq_class hi, int sign_lo)
      : level_(level),
        def_(std::move(def)),
        root_index_(root_index),
        iso_lo_(lo),
        iso_hi_(hi),
        lo_(std::move(lo)),
        hi_(std::move(hi)),
        sign_lo_(sign_lo) {}

  int level() const { return level_; }
  bool is_algebraic() const { return !value_.has_value(); }

  /// Exact value if the coordinate is (or has been found to be) rational.
  std::optional<mpq_class> rational() const {
    if (value_) return value_;
    std::lock_guard<std::mutex> g(mu_);
    return exact_;
  }
  std::pair<mpq_class, mpq_class> interval() const {
    if (value_) return {*value_, *value_};
    std::lock_guard<std::mutex> g(mu_);
    return {lo_, hi_};
  }
  /// The interval from isolation; fixed, unlike interval().
  std::pair<mpq_class, mpq_class> isolating_interval() const {
    if (value_) return {*value_, *value_};
    return {iso_lo_, iso_hi_};
  }
  const RPoly& def() const { return def_; }
  int root_index() const { return root_index_; }
  std::mutex& mutex() const { return mu_; }

  // The following are only called with mutex() held.
  int sign_lo_locked() const { return sign_lo_; }
  const mpq_class& lo_locked() const { return lo_; }
  const mpq_class& hi_locked() const { return hi_; }
  bool exact_locked() const { return exact_.has_value(); }
  void set_lo_locked(mpq_class v) const { lo_ = std::move(v); }
  void set_hi_locked(mpq_class v) const { hi_ = std::move(v); }
  void set_exact_locked(const mpq_class& v) const {
    exact_ = v;
    lo_ = hi_ = v;
  }

 private:
  int level_;
  std::optional<mpq_class> value_;
  RPoly def_;
  int root_index_ = 0;
  mpq_class iso_lo_, iso_hi_;
  mutable std::mutex mu_;
  mutable mpq_class lo_, hi_;
  mutable int sign_lo_ = 0;
  mutable std::optional<mpq_class> exact_;
};

using NodePtr = std::shared_ptr<const SampleNode>;

/// Coordinates x_1..x_k; prefixes are shared between cells.
class SamplePoint {
 public:
  SamplePoint() = default;
  explicit SamplePoint(std::vector<NodePtr> nodes) : nodes_(std::move(nodes)) {}

  static SamplePoint from_rationals(const std::vector<mpq_class>& values) {
    std::vector<NodePtr> ns;
    for (std::size_t i = 0; i < values.size(); ++i)
      ns.push_back(std::make_shared<SampleNode>(static_cast<int>(i), values[i]));
    return SamplePoint(std::move(ns));
  }

  std::size_t size() const { return nodes_.size(); }
  const SampleNode& operator[](std::size_t i) const { return *nodes_[i]; }
  const NodePtr& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<NodePtr>& nodes() const { return nodes_; }

  SamplePoint extended(NodePtr n) const {
    SamplePoint r = *this;
    r.nodes_.push_back(std::move(n));
    return r;
  }
  SamplePoint prefix(std::size_t k) const {
    return SamplePoint(std::vector<NodePtr>(nodes_.begin(), nodes_.begin() + static_cast<long>(k)));
  }

 private:
  std::vector<NodePtr> nodes_;
};

// ---------------------------------------------------------------------------
// Signs at sample points

int sign_at(const RPoly& p, const SamplePoint& s);

namespace detail {

/// Substitutes every rational coordinate (scaled by a positive constant).
inline RPoly substitute_rationals(RPoly p, const SamplePoint& s) {
  for (int r = std::min<int>(p.var(), static_cast<int>(s.size()) - 1); r >= 0; --r) {
    if (p.deg_in(r) == 0) continue;
    auto q = s[r].rational();
    if (q) p = p.substitute_scaled(r, q->get_num(), q->get_den());
  }
  return p;
}

inline Interval eval_interval(const RPoly& p, const std::vector<Interval>& box, mpfr_prec_t prec) {
  if (p.is_const()) return Interval(p.const_value(), prec);
  const auto& cs = p.coeffs();
  Interval acc = eval_interval(cs.back(), box, prec);
  for (std::size_t k = cs.size() - 1; k-- > 0;) {
    acc.mul(box[p.var()]);
    if (!cs[k].is_zero()) acc.add(eval_interval(cs[k], box, prec));
  }
  return acc;
}

inline std::vector<Interval> make_box(const SamplePoint& s, int upto, mpfr_prec_t prec) {
  std::vector<Interval> box;
  box.reserve(upto + 1);
  for (int i = 0; i <= upto; ++i) {
    auto [lo, hi] = s[i].interval();
    box.emplace_back(lo, hi, prec);
  }
  return box;
}

/// One bisection step of an algebraic coordinate.
inline void bisect(const SamplePoint& s, int level) {
  const SampleNode& n = s[level];
  if (!n.is_algebraic()) return;
  std::lock_guard<std::mutex> g(n.mutex());
  if (n.exact_locked()) return;
  mpq_class mid = (n.lo_locked() + n.hi_locked()) / 2;
  RPoly dm = n.def().substitute_scaled(level, mid.get_num(), mid.get_den());
  int sm = sign_at(dm, s);
  if (sm == 0) {
    n.set_exact_locked(mid);
  } else if (sm == n.sign_lo_locked()) {
    n.set_lo_locked(mid);
  } else {
    n.set_hi_locked(mid);
  }
}

inline void refine_levels(const SamplePoint& s, const RPoly& p, int upto, int steps) {
  for (int i = 0; i <= upto; ++i) {
    if (!s[i].is_algebraic() || p.deg_in(i) == 0) continue;
    for (int k = 0; k < steps; ++k) bisect(s, i);
  }
}

/// Drops leading coefficients in x_j that vanish at s.
inline RPoly truncate_at(RPoly b, int j, const SamplePoint& s) {
  while (b.var() == j) {
    const RPoly& lc = b.lc(j);
    if (sign_at(lc, s) != 0) return b;
    std::vector<RPoly> cs(b.coeffs().begin(), b.coeffs().end() - 1);
    b = RPoly::from_coeffs(j, std::move(cs));
  }
  if (!b.is_zero() && sign_at(b, s) == 0) return RPoly();
  return b;
}

/// Removes integer content and any polynomial content nonzero at s.
inline RPoly reduce_at(RPoly r, int j, const SamplePoint& s) {
  r.make_integer_primitive();
  if (r.var() == j) {
    RPoly c = rcontent(r);
    if (!c.is_const() && sign_at(c, s) != 0) r = divide_or_throw(r, c);
  }
  return r;
}

/// gcd of a(s, x_j) and b(s, x_j) up to a nonzero constant, as a polynomial in
/// x_1..x_j whose leading coefficient is nonzero at s. Requires lc(a) nonzero at s.
inline RPoly tower_gcd(RPoly a, RPoly b, int j, const SamplePoint& s) {
  if (b.deg_in(j) >= a.deg_in(j)) b = prem(b, a, j);
  while (true) {
    b = truncate_at(std::move(b), j, s);
    if (b.is_zero()) return a;
    if (b.var() < j) return RPoly(1);
    RPoly r = prem(a, b, j);
    a = std::move(b);
    b = reduce_at(std::move(r), j, s);
  }
}

/// Exact test p(s) = 0 where the main variable x_j of p is algebraic at s.
inline bool vanishes_at(const RPoly& p, const SamplePoint& s) {
  int j = p.var();
  const SampleNode& n = s[j];
  RPoly d = substitute_rationals(n.def(), s.prefix(j));
  RPoly g = tower_gcd(d, p, j, s);
  if (g.var() < j) return false;
  auto [lo, hi] = n.interval();
  if (lo == hi) {
    return sign_at(g.substitute_scaled(j, lo.get_num(), lo.get_den()), s) == 0;
  }
  int a = sign_at(g.substitute_scaled(j, lo.get_num(), lo.get_den()), s);
  int b = sign_at(g.substitute_scaled(j, hi.get_num(), hi.get_den()), s);
  return a != b;
}

}  // namespace detail

/// Exact sign of p at s; p's variables are indexed as in s.
inline int sign_at(const RPoly& p0, const SamplePoint& s) {
  RPoly p = detail::substitute_rationals(p0, s);
  if (p.is_const()) return sgn(p.const_value());
  if (p.var() >= static_cast<int>(s.size())) throw UsageError("sign_at: variable beyond the sample point");
  mpfr_prec_t prec = 64;
  bool zero_tested = false;
  for (int round = 0;; ++round) {
    int j = p.var();
    auto box = detail::make_box(s, j, prec);
    int sg = detail::eval_interval(p, box, prec).sign();
    if (sg != 0) return sg;
    if (round >= 2 && !zero_tested) {
      if (detail::vanishes_at(p, s)) return 0;
      zero_tested = true;
    }
    detail::refine_levels(s, p, j, 4);
    prec += 32;
    p = detail::substitute_rationals(std::move(p), s);
    if (p.is_const()) return sgn(p.const_value());
  }
}

inline int sign_at(const Polynomial& p, const SamplePoint& s) {
  return sign_at(to_rpoly(p, -1).poly, s);
}

/// Sign of p at a point given by rational coordinates.
inline int sign_at_rational(const Polynomial& p, const std::vector<mpq_class>& xs) {
  return sgn(p.evaluate(xs));
}

// ---------------------------------------------------------------------------
// Substitution of a sample into a polynomial and root isolation over it

enum class ImageKind { Nullified, Constant, Proper };

/// p(s, x_k) after dropping coefficients that vanish at s.
struct UnivariateImage {
  ImageKind kind = ImageKind::Nullified;
  int constant_sign = 0;  // for Constant
  RPoly poly;             // lower rational coordinates substituted; leading coefficient nonzero at s
};

inline UnivariateImage substitute_partial(const RPoly& q, const SamplePoint& s, int k) {
  UnivariateImage out;
  RPoly p = detail::substitute_rationals(q, s);
  if (p.var() > k) throw UsageError("substitute_partial: polynomial above the lifting variable");
  if (p.var() < k) {
    int sg = sign_at(p, s);
    if (sg == 0) return out;
    out.kind = ImageKind::Constant;
    out.constant_sign = sg;
    out.poly = p;
    return out;
  }
  p = detail::truncate_at(std::move(p), k, s);
  if (p.is_zero()) return out;
  if (p.var() < k) {
    out.kind = ImageKind::Constant;
    out.constant_sign = sign_at(p, s);
    out.poly = p;
    return out;
  }
  out.kind = ImageKind::Proper;
  out.poly = std::move(p);
  return out;
}

inline UnivariateImage substitute_partial(const Polynomial& q, const SamplePoint& s, Var v) {
  return substitute_partial(to_rpoly(q, -1).poly, s, v.index);
}

namespace detail {

inline bool coefficients_constant(const RPoly& p, int k) {
  if (p.var() < k) return p.is_const();
  for (const auto& c : p.coeffs())
    if (!c.is_const()) return false;
  return true;
}

inline void refine_all(const SamplePoint& s, int steps) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int t = 0; t < steps; ++t) bisect(s, static_cast<int>(i));
}

/// Bound exponent on the roots of sum c_i x^i at s (lc nonzero at s).
inline unsigned cauchy_bits_at(const std::vector<RPoly>& cs, const SamplePoint& s) {
  mpfr_prec_t prec = 96;
  for (int round = 0;; ++round) {
    int top = static_cast<int>(s.size()) - 1;
    auto box = make_box(s, top, prec);
    Interval lc = eval_interval(cs.back(), box, prec);
    if (lc.sign() != 0) {
      mpq_class low = lc.magnitude_lower(), m = 0;
      for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        mpq_class u = eval_interval(cs[i], box, prec).magnitude_upper() / low;
        if (u > m) m = u;
      }
      return bits_for_bound(m + 1);
    }
    refine_all(s, 4);
    prec += 32;
  }
}

}  // namespace detail

/// Distinct real roots of q(s, x_k) as new coordinate nodes, ascending.
/// Returns nothing when q is nullified at s.
inline std::optional<std::vector<NodePtr>> isolate_roots_over(const RPoly& q, const SamplePoint& s, int k) {
  UnivariateImage img = substitute_partial(q, s, k);
  if (img.kind == ImageKind::Nullified) return std::nullopt;
  std::vector<NodePtr> out;
  if (img.kind == ImageKind::Constant) return out;
  const RPoly& p = img.poly;
  if (detail::coefficients_constant(p, k)) {
    std::vector<mpz_class> dense;
    for (const auto& c : p.coeffs()) dense.push_back(c.const_value());
    auto sq = detail::squarefree_dense(dense);
    std::vector<RPoly> cs(sq.begin(), sq.end());
    RPoly def = RPoly::from_coeffs(k, cs);
    int idx = 0;
    for (auto& [b, slo] : detail::isolate_dense(sq)) {
      ++idx;
      if (b.exact) out.push_back(std::make_shared<SampleNode>(k, b.lo));
      else out.push_back(std::make_shared<SampleNode>(k, def, idx, b.lo, b.hi, slo));
    }
    return out;
  }
  // Algebraic coefficients: squarefree part over the tower, then Descartes
  // with exact coefficient signs.
  RPoly g = detail::tower_gcd(p, p.derivative(k), k, s);
  RPoly sq = p;
  if (g.var() == k) sq = pseudo_divide(p, g, k).first;
  sq = detail::reduce_at(std::move(sq), k, s);
  std::vector<RPoly> cs = sq.coeffs();
  auto sign = [&](const RPoly& c) { return sign_at(c, s); };
  auto boxes = detail::isolate_generic(cs, detail::cauchy_bits_at(cs, s), sign);
  RPoly dsq = sq.derivative(k);
  auto sign_x = [&](const RPoly& f, const mpq_class& x) {
    return sign_at(f.substitute_scaled(k, x.get_num(), x.get_den()), s);
  };
  int idx = 0;
  for (auto& b : boxes) {
    ++idx;
    auto [cb, slo] = detail::clean_box(
        b, [&](const mpq_class& x) { return sign_x(sq, x); },
        [&](const mpq_class& x) { return sign_x(dsq, x); });
    if (cb.exact) out.push_back(std::make_shared<SampleNode>(k, cb.lo));
    else out.push_back(std::make_shared<SampleNode>(k, sq, idx, cb.lo, cb.hi, slo));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

inline std::string coordinate_to_string(const SampleNode& n, const std::vector<std::string>& names = {}) {
  if (!n.is_algebraic()) return n.rational()->get_str();
  auto [lo, hi] = n.isolating_interval();
  std::ostringstream os;
  os << "root(" << to_string(from_rpoly(n.def(), -1), names) << ", " << n.root_index() << ") in ["
     << lo.get_str() << "," << hi.get_str() << "]";
  return os.str();
}

/// Floating approximation of a coordinate (for display and tests only).
inline double approx(const SampleNode& n) {
  auto [lo, hi] = n.interval();
  return mpq_class((lo + hi) / 2).get_d();
}

}  // namespace eccad

#endif  // ECCAD_REALALG_HPP
