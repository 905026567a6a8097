// Independent reference computations for the test suites.

#ifndef ECCAD_TESTS_ORACLES_HPP
#define ECCAD_TESTS_ORACLES_HPP

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "eccad/polyalg.hpp"

namespace oracle {

using eccad::Polynomial;
using eccad::Var;

/// Sylvester matrix of (p, q) in v, p's rows first.
inline std::vector<std::vector<Polynomial>> sylvester(const Polynomial& p, const Polynomial& q, Var v) {
  auto cp = p.coefficients_by_power(v), cq = q.coefficients_by_power(v);
  std::size_t m = cp.size() - 1, n = cq.size() - 1, N = m + n;
  std::vector<std::vector<Polynomial>> M(N, std::vector<Polynomial>(N));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) M[r][r + j] = cp[m - j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) M[n + r][r + j] = cq[n - j];
  return M;
}

/// Determinant by Laplace expansion along columns, memoized on the used-row mask.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
  std::size_t N = M.size();
  std::map<unsigned, Polynomial> memo;
  std::function<Polynomial(std::size_t, unsigned)> rec = [&](std::size_t col, unsigned used) -> Polynomial {
    if (col == N) return 1;
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial acc;
    int sign = 1;
    for (std::size_t r = 0; r < N; ++r) {
      if (used & (1u << r)) continue;
      if (!M[r][col].is_zero()) {
        Polynomial minor = rec(col + 1, used | (1u << r));
        Polynomial t = M[r][col] * minor;
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo[used] = acc;
    return acc;
  };
  return rec(0, 0);
}

inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, Var v) {
  return determinant(sylvester(p, q, v));
}

/// Sturm sequence of a univariate polynomial in v (exact, over Q).
inline std::vector<Polynomial> sturm_sequence(const Polynomial& p, Var v) {
  std::vector<Polynomial> seq{p, p.derivative(v)};
  while (!seq.back().is_zero() && seq.back().degree(v) > 0) {
    const Polynomial& a = seq[seq.size() - 2];
    const Polynomial& b = seq.back();
    Polynomial r = a;
    unsigned db = b.degree(v);
    mpq_class lb = b.coefficient(v, db).constant_value();
    while (!r.is_zero() && r.degree(v) >= db) {
      unsigned dr = r.degree(v);
      mpq_class f = r.coefficient(v, dr).constant_value() / lb;
      r -= (b * f).shift(v, dr - db);
    }
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sign_changes(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int sg : signs) {
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

/// Number of distinct real roots of a univariate polynomial in v.
inline int sturm_count(const Polynomial& p, Var v) {
  auto seq = sturm_sequence(p, v);
  std::vector<int> neg, pos;
  for (const auto& s : seq) {
    unsigned d = s.degree(v);
    int sg = sgn(s.coefficient(v, d).constant_value());
    pos.push_back(sg);
    neg.push_back(d % 2 == 1 ? -sg : sg);
  }
  return sign_changes(neg) - sign_changes(pos);
}

/// Distinct real roots in the half-open interval (a, b]; p(a) must be nonzero.
inline int sturm_count_between(const Polynomial& p, Var v, const mpq_class& a, const mpq_class& b) {
  auto seq = sturm_sequence(p, v);
  auto at = [&](const mpq_class& x) {
    std::vector<int> sg;
    for (const auto& s : seq) sg.push_back(sgn(s.substitute(v, x).constant_value()));
    return sign_changes(sg);
  };
  return at(a) - at(b);
}

/// Random dense polynomial in the first nvars variables with max degree per variable.
inline Polynomial random_poly(std::mt19937& rng, int nvars, int maxdeg, int coef_range = 5,
                              double density = 0.5) {
  std::uniform_int_distribution<int> cd(-coef_range, coef_range);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::vector<eccad::Term> terms;
  eccad::Exponents e{};
  std::function<void(int)> rec = [&](int i) {
    if (i == nvars) {
      if (keep(rng) < density) terms.push_back({e, mpq_class(cd(rng))});
      return;
    }
    for (int k = 0; k <= maxdeg; ++k) {
      e[i] = static_cast<std::uint16_t>(k);
      rec(i + 1);
    }
    e[i] = 0;
  };
  rec(0);
  return Polynomial::from_terms(terms);
}

}  // namespace oracle

#endif  // ECCAD_TESTS_ORACLES_HPP
