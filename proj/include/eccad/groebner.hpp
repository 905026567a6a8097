// Reduced Groebner bases over Q, pure lex with x_n > ... > x_1.

#ifndef ECCAD_GROEBNER_HPP
#define ECCAD_GROEBNER_HPP

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "eccad/polyalg.hpp"
#include "eccad/polyset.hpp"

namespace eccad {

namespace detail {

inline Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponents quot_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

inline bool coprime_exp(const Exponents& a, const Exponents& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

/// Monic scaling keeps rational coefficient growth in check during the run.
inline Polynomial monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading_term().coef);
}

/// Full normal form of f modulo g (all terms reduced). skip excludes one index.
inline Polynomial normal_form(Polynomial f, const std::vector<Polynomial>& g, std::size_t skip = SIZE_MAX) {
  std::vector<Term> rem;
  while (!f.is_zero()) {
    const Term& lt = f.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == skip || g[i].is_zero()) continue;
      const Term& gl = g[i].leading_term();
      if (!divides(gl.exp, lt.exp)) continue;
      f -= g[i].times_term(quot_exp(lt.exp, gl.exp), lt.coef / gl.coef);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lt);
      f -= Polynomial::monomial(lt.exp, lt.coef);
    }
  }
  return Polynomial::from_terms(std::move(rem));
}

inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const Term& la = a.leading_term();
  const Term& lb = b.leading_term();
  Exponents l = lcm_exp(la.exp, lb.exp);
  return a.times_term(quot_exp(l, la.exp), 1 / la.coef) - b.times_term(quot_exp(l, lb.exp), 1 / lb.coef);
}

}  // namespace detail

/// Reduced lex Groebner basis of <F>, elements canonical. <F> = (1) gives {1}.
inline std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& F) {
  using detail::lcm_exp;
  std::vector<Polynomial> G;
  for (const auto& f : F)
    if (!f.is_zero()) G.push_back(detail::monic(f));
  if (G.empty()) return {};
  for (const auto& g : G)
    if (g.is_constant()) return {Polynomial(1)};

  // Pairs (i, j), i < j, processed in order of lcm total degree (normal strategy).
  auto pair_less = [&](const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
    Exponents la = lcm_exp(G[a.first].leading_term().exp, G[a.second].leading_term().exp);
    Exponents lb = lcm_exp(G[b.first].leading_term().exp, G[b.second].leading_term().exp);
    int c = compare_grlex(la, lb);
    if (c != 0) return c < 0;
    return a < b;
  };
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      queue.emplace_back(i, j);
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    auto [i, j] = *it;
    queue.erase(it);
    pending.erase({i, j});
    const Exponents& li = G[i].leading_term().exp;
    const Exponents& lj = G[j].leading_term().exp;
    // First criterion: coprime leading monomials.
    if (detail::coprime_exp(li, lj)) continue;
    // Second criterion: some g_k divides lcm and both (i,k), (j,k) are already treated.
    Exponents l = lcm_exp(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(G[k].leading_term().exp, l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
    }
    if (chain) continue;
    Polynomial h = detail::normal_form(detail::s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Polynomial(1)};
    G.push_back(detail::monic(h));
    add_pairs(G.size() - 1);
  }

  // Minimal basis, then inter-reduce.
  std::vector<Polynomial> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool drop = false;
    for (std::size_t k = 0; k < G.size() && !drop; ++k) {
      if (k == i) continue;
      const Exponents& lk = G[k].leading_term().exp;
      const Exponents& li = G[i].leading_term().exp;
      if (divides(lk, li) && (lk != li || k < i)) drop = true;
    }
    if (!drop) M.push_back(G[i]);
  }
  for (std::size_t i = 0; i < M.size(); ++i) M[i] = detail::monic(detail::normal_form(M[i], M, i));
  std::vector<Polynomial> out;
  for (const auto& m : M) out.push_back(canonical(m));
  std::sort(out.begin(), out.end(), poly_display_less);
  return out;
}

/// True iff f reduces to zero modulo the basis G.
inline bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& G) {
  return detail::normal_form(f, G).is_zero();
}

}  // namespace eccad

#endif  // ECCAD_GROEBNER_HPP
