// gcd, content, resultant and squarefree decomposition on RPoly, plus
// conversion from and to the sparse Polynomial type.

#ifndef ECCAD_RALG_HPP
#define ECCAD_RALG_HPP

#include <cstdint>
#include <vector>

#include "eccad/polynomial.hpp"
#include "eccad/rpoly.hpp"

namespace eccad {

// ---------------------------------------------------------------------------
// Conversion. Variable `top` is given rank kMaxVars so that it is the main
// variable; every other variable keeps its index as rank.

inline int rank_of(int var, int top) { return var == top ? kMaxVars : var; }
inline int var_of(int rank, int top) { return rank == kMaxVars ? top : rank; }

namespace detail {

struct RItem {
  std::array<std::uint16_t, kMaxVars + 1> e{};
  mpz_class c;
};

inline RPoly build_rpoly(std::vector<RItem>& items, std::size_t lo, std::size_t hi, int maxrank) {
  if (lo == hi) return {};
  int r = -1;
  for (int k = maxrank; k >= 0 && r < 0; --k)
    for (std::size_t i = lo; i < hi; ++i)
      if (items[i].e[k] != 0) {
        r = k;
        break;
      }
  if (r < 0) {
    mpz_class s = 0;
    for (std::size_t i = lo; i < hi; ++i) s += items[i].c;
    return RPoly(s);
  }
  std::sort(items.begin() + lo, items.begin() + hi,
            [r](const RItem& a, const RItem& b) { return a.e[r] < b.e[r]; });
  unsigned maxdeg = items[hi - 1].e[r];
  std::vector<RPoly> cs(maxdeg + 1);
  std::size_t i = lo;
  while (i < hi) {
    std::size_t j = i;
    unsigned d = items[i].e[r];
    while (j < hi && items[j].e[r] == d) ++j;
    cs[d] = build_rpoly(items, i, j, r - 1);
    i = j;
  }
  return RPoly::from_coeffs(r, std::move(cs));
}

}  // namespace detail

/// Integer multiple den * p as an RPoly; den > 0 is the lcm of denominators.
struct ScaledRPoly {
  RPoly poly;
  mpz_class den;
};

inline ScaledRPoly to_rpoly(const Polynomial& p, int top) {
  mpz_class den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
  std::vector<detail::RItem> items;
  items.reserve(p.size());
  for (const auto& t : p.terms()) {
    detail::RItem it;
    for (int i = 0; i < kMaxVars; ++i) it.e[rank_of(i, top)] = t.exp[i];
    mpz_class c = t.coef.get_num() * (den / t.coef.get_den());
    it.c = std::move(c);
    items.push_back(std::move(it));
  }
  return {detail::build_rpoly(items, 0, items.size(), kMaxVars), den};
}

inline Polynomial from_rpoly(const RPoly& r, int top) {
  std::vector<Term> terms;
  r.for_each_term([&](const std::vector<std::pair<int, unsigned>>& path, const mpz_class& c) {
    Term t;
    for (const auto& [rank, k] : path) t.exp[var_of(rank, top)] = static_cast<std::uint16_t>(k);
    t.coef = c;
    terms.push_back(std::move(t));
  });
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Arithmetic modulo a prime, for the coprimality filter.

namespace detail {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime), hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}
inline std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

inline std::uint64_t mpz_mod_prime(const mpz_class& z) {
  return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

/// Value of r with every rank below `main` set to vals[rank]; result dense in `main`.
inline std::uint64_t eval_mod(const RPoly& r, const std::vector<std::uint64_t>& vals) {
  if (r.is_const()) return mpz_mod_prime(r.const_value());
  std::uint64_t acc = 0, x = vals[r.var()];
  const auto& cs = r.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) acc = addmod(mulmod(acc, x), eval_mod(cs[k], vals));
  return acc;
}

inline std::vector<std::uint64_t> image_mod(const RPoly& r, int main, const std::vector<std::uint64_t>& vals) {
  std::vector<std::uint64_t> out;
  if (r.var() != main) {
    out.push_back(eval_mod(r, vals));
  } else {
    for (const auto& c : r.coeffs()) out.push_back(eval_mod(c, vals));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline std::size_t gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  while (!b.empty()) {
    std::uint64_t inv = invmod(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = submod(a[off + i], mulmod(f, b[i]));
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

/// Upper bound on deg gcd(a, b) in `main` from one modular image, or -1 if the image is unlucky.
inline int modular_gcd_degree(const RPoly& a, const RPoly& b, int main, int seed) {
  std::vector<std::uint64_t> vals(kMaxVars + 1);
  std::uint64_t s = 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(seed + 1);
  for (auto& v : vals) {
    s ^= s >> 33;
    s *= 0xff51afd7ed558ccdull;
    s ^= s >> 29;
    v = s % kPrime;
  }
  auto ia = image_mod(a, main, vals), ib = image_mod(b, main, vals);
  if (ia.size() != a.deg_in(main) + 1 || ib.size() != b.deg_in(main) + 1) return -1;
  return static_cast<int>(gcd_degree_mod(std::move(ia), std::move(ib)));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gcd over Q, represented by integer-primitive RPolys with positive lead.

inline RPoly integer_primitive(RPoly r) {
  r.make_integer_primitive();
  return r;
}

RPoly rgcd(const RPoly& a, const RPoly& b);

/// gcd of the coefficients in the main variable (up to units of Q).
inline RPoly rcontent(const RPoly& a) {
  if (a.is_const()) return a.is_zero() ? RPoly() : RPoly(1);
  const auto& cs = a.coeffs();
  std::size_t first = cs.size();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero() && (first == cs.size() || cs[i].term_count() < cs[first].term_count())) first = i;
  RPoly g = integer_primitive(cs[first]);
  for (std::size_t i = 0; i < cs.size() && !g.is_const(); ++i) {
    if (i == first || cs[i].is_zero()) continue;
    g = rgcd(g, cs[i]);
  }
  return g.is_const() ? RPoly(1) : g;
}

/// Primitive part in the main variable, integer-primitive with positive lead.
inline RPoly rprimitive(const RPoly& a) {
  RPoly c = rcontent(a);
  RPoly p = c.is_const() ? a : divide_or_throw(a, c);
  return integer_primitive(std::move(p));
}

namespace detail {

// Subresultant PRS gcd for inputs primitive in `v` with positive degree.
inline RPoly prs_gcd(RPoly a, RPoly b, int v) {
  if (a.deg_in(v) < b.deg_in(v)) std::swap(a, b);
  RPoly g = 1, h = 1;
  while (true) {
    unsigned delta = a.deg_in(v) - b.deg_in(v);
    RPoly r = prem(a, b, v);
    if (r.is_zero()) break;
    if (r.var() < v) return 1;
    a = std::move(b);
    b = divide_or_throw(r, g * h.pow(delta));
    g = a.lc(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(delta), h.pow(delta - 1));
    }
  }
  return rprimitive(b);
}

inline RPoly primitive_gcd(const RPoly& a, const RPoly& b, int v) {
  int bound = -1;
  for (int seed = 0; seed < 3 && bound < 0; ++seed) bound = modular_gcd_degree(a, b, v, seed);
  if (bound == 0) return 1;
  const RPoly& small = a.deg_in(v) <= b.deg_in(v) ? a : b;
  const RPoly& big = a.deg_in(v) <= b.deg_in(v) ? b : a;
  if (bound == static_cast<int>(small.deg_in(v)) && divide_exact(big, small)) return integer_primitive(small);
  return prs_gcd(a, b, v);
}

}  // namespace detail

inline RPoly rgcd(const RPoly& a, const RPoly& b) {
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  if (a.is_const() || b.is_const()) return 1;
  if (a == b) return integer_primitive(a);
  int v = std::max(a.var(), b.var());
  if (a.var() < v) return rgcd(a, rcontent(b));
  if (b.var() < v) return rgcd(b, rcontent(a));
  RPoly ca = rcontent(a), cb = rcontent(b);
  RPoly c = rgcd(ca, cb);
  RPoly pa = ca.is_const() ? a : divide_or_throw(a, ca);
  RPoly pb = cb.is_const() ? b : divide_or_throw(b, cb);
  RPoly g = detail::primitive_gcd(pa, pb, v);
  return integer_primitive(c * g);
}

// ---------------------------------------------------------------------------
// Resultant (subresultant algorithm, no content removal) in the main variable v.

inline RPoly rresultant(const RPoly& p, const RPoly& q, int v) {
  unsigned dp = p.deg_in(v), dq = q.deg_in(v);
  if (dp == 0 || dq == 0) throw UsageError("resultant needs positive degree in the variable");
  RPoly a = p, b = q;
  RPoly g = 1, h = 1;
  int s = 1;
  if (dp < dq) {
    std::swap(a, b);
    if ((dp & 1) && (dq & 1)) s = -1;
  }
  while (true) {
    unsigned da = a.deg_in(v), db = b.deg_in(v);
    unsigned delta = da - db;
    if ((da & 1) && (db & 1)) s = -s;
    RPoly r = prem(a, b, v);
    a = std::move(b);
    if (r.is_zero()) return {};
    b = divide_or_throw(r, g * h.pow(delta));
    g = a.lc(v);
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = divide_or_throw(g.pow(delta), h.pow(delta - 1));
    }
    if (b.var() < v) break;
  }
  unsigned da = a.deg_in(v);
  RPoly res = da == 1 ? b : divide_or_throw(b.pow(da), h.pow(da - 1));
  if (s < 0) res.negate();
  return res;
}

/// Yun's squarefree factors (multiplicities dropped) of a primitive-in-v input.
inline std::vector<RPoly> ryun(const RPoly& p, int v) {
  std::vector<RPoly> out;
  if (p.var() < v) return out;
  RPoly dp = p.derivative(v);
  RPoly a = rgcd(p, dp);
  if (a.var() < v) {
    out.push_back(integer_primitive(p));
    return out;
  }
  RPoly b = divide_or_throw(p, a);
  RPoly c = divide_or_throw(dp, a);
  RPoly d = c - b.derivative(v);
  while (b.var() == v) {
    RPoly f = rgcd(b, d);
    if (f.var() == v) out.push_back(f);
    b = divide_or_throw(b, f);
    c = divide_or_throw(d, f);
    d = c - b.derivative(v);
  }
  return out;
}

}  // namespace eccad

#endif  // ECCAD_RALG_HPP
