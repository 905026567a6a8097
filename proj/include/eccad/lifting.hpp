// Base phase, stack generation, reduced lifting and the admissible-cell rule.

#ifndef ECCAD_LIFTING_HPP
#define ECCAD_LIFTING_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccad/projection.hpp"
#include "eccad/realalg.hpp"

namespace eccad {

enum class Truth { True, False, Undetermined };

inline const char* truth_text(Truth t) {
  switch (t) {
    case Truth::True: return "TRUE";
    case Truth::False: return "FALSE";
    case Truth::Undetermined: return "UNDETERMINED";
  }
  return "?";
}

inline std::string index_text(const std::vector<int>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

class WellOrientedFailure : public std::runtime_error {
 public:
  WellOrientedFailure(Polynomial poly, std::vector<int> cell, const std::vector<std::string>& names = {})
      : std::runtime_error("not well-oriented: " + (names.empty() ? to_string(poly) : to_string(poly, names)) +
                           " is nullified over cell " + index_text(cell)),
        poly_(std::move(poly)),
        cell_(std::move(cell)) {}
  const Polynomial& poly() const { return poly_; }
  const std::vector<int>& cell() const { return cell_; }

 private:
  Polynomial poly_;
  std::vector<int> cell_;
};

class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::size_t cells_so_far)
      : std::runtime_error(what), cells_(cells_so_far) {}
  /// Lower bound on the final top-level cell count.
  std::size_t cells_so_far() const { return cells_; }

 private:
  std::size_t cells_;
};

/// Limits on one run. Zero means unlimited.
struct Budget {
  std::size_t max_cells = 0;
  double max_seconds = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  bool out_of_time() const {
    if (max_seconds <= 0) return false;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > max_seconds;
  }
};

struct Cell {
  std::vector<int> index;
  SamplePoint sample;
  Truth truth = Truth::Undetermined;
  bool cylinder = false;  // built as a trivial cylinder, or lies over one
  bool trivial = false;   // the last coordinate came from a trivial cylinder
  std::vector<Polynomial> vanishing;  // lifting polynomials known to vanish at the sample
  std::size_t child_begin = 0, child_count = 0;
};

/// D_1..D_n by variable index, plus per level the lifting set and whether
/// the admissible-cell rule restricted it.
struct Cad {
  std::vector<std::vector<Cell>> levels;
  std::vector<PolySet> lifting;
  std::vector<bool> restricted;

  int n() const { return static_cast<int>(levels.size()); }
  std::size_t size() const { return levels.empty() ? 0 : levels.back().size(); }
};

namespace detail {

inline RPoly linear_minus(int k, const mpq_class& c) {
  return RPoly::from_coeffs(k, {RPoly(mpz_class(-c.get_num())), RPoly(c.get_den())});
}

/// sign(alpha - c) for the last coordinate alpha of t (at variable index k).
inline int cmp_rational(const SamplePoint& t, int k, const mpq_class& c) {
  if (auto q = t[k].rational()) return sgn(*q - c);
  return sign_at(linear_minus(k, c), t);
}

/// Largest m with m/den <= alpha.
inline mpz_class floor_scaled(const SamplePoint& t, int k, const mpz_class& den) {
  auto [lo, hi] = t[k].interval();
  mpz_class a = floor_q(lo * den), b = floor_q(hi * den);
  while (a < b) {
    mpz_class mid = b - (b - a) / 2;
    if (cmp_rational(t, k, mpq_class(mid, den)) >= 0) a = mid;
    else b = mid - 1;
  }
  return a;
}

/// Smallest m with m/den >= alpha.
inline mpz_class ceil_scaled(const SamplePoint& t, int k, const mpz_class& den) {
  auto [lo, hi] = t[k].interval();
  mpz_class a = ceil_q(lo * den), b = ceil_q(hi * den);
  while (a < b) {
    mpz_class mid = a + (b - a) / 2;
    if (cmp_rational(t, k, mpq_class(mid, den)) <= 0) b = mid;
    else a = mid + 1;
  }
  return a;
}

/// Canonical rational in the open gap between two roots (either may be absent).
inline mpq_class gap_sample(const SamplePoint& base, int k, const NodePtr& a, const NodePtr& b) {
  if (!a && !b) return 0;
  if (!a) return mpq_class(floor_scaled(base.extended(b), k, 1) - 1);
  if (!b) return mpq_class(ceil_scaled(base.extended(a), k, 1) + 1);
  SamplePoint ta = base.extended(a), tb = base.extended(b);
  mpz_class den = 1;
  while (true) {
    mpz_class lo = floor_scaled(ta, k, den) + 1, hi = ceil_scaled(tb, k, den) - 1;
    if (lo <= hi) {
      mpq_class r(least_magnitude(lo, hi), den);
      r.canonicalize();
      return r;
    }
    den *= 2;
  }
}

/// Order of two distinct roots over the same base.
inline bool node_less(const SamplePoint& base, int k, const NodePtr& a, const NodePtr& b) {
  SamplePoint ta = base.extended(a), tb = base.extended(b);
  for (;;) {
    auto qa = a->rational(), qb = b->rational();
    if (qa) return cmp_rational(tb, k, *qa) > 0;
    if (qb) return cmp_rational(ta, k, *qb) < 0;
    auto [alo, ahi] = a->interval();
    auto [blo, bhi] = b->interval();
    if (ahi <= blo) return true;
    if (bhi <= alo) return false;
    bisect(ta, k);
    bisect(tb, k);
  }
}

/// True iff root a (of some polynomial) equals the root r of q.
inline bool same_root(const SamplePoint& base, int k, const NodePtr& a, const NodePtr& r, const RPoly& q) {
  SamplePoint ta = base.extended(a);
  if (auto qr = r->rational()) return cmp_rational(ta, k, *qr) == 0;
  auto [rlo, rhi] = r->interval();
  auto [alo, ahi] = a->interval();
  if (ahi <= rlo || rhi <= alo) {
    if (!a->rational() || (ahi < rlo || rhi < alo)) return false;
  }
  if (cmp_rational(ta, k, rlo) < 0 || cmp_rational(ta, k, rhi) > 0) return false;
  return sign_at(q, ta) == 0;
}

}  // namespace detail

struct StackRoot {
  NodePtr node;
  std::vector<Polynomial> owners;  // members of L vanishing at this root
};

/// Distinct real roots, ascending, of the polynomials L at x_k over base,
/// each with the members of L it is a root of. Throws WellOrientedFailure
/// when one of them vanishes identically there.
inline std::vector<StackRoot> stack_roots_owned(const PolySet& L, const SamplePoint& base, int k,
                                                const std::vector<int>& cell_index) {
  std::vector<StackRoot> roots;
  for (const auto& q : L) {
    RPoly rq = to_rpoly(q, -1).poly;
    auto rs = isolate_roots_over(rq, base, k);
    if (!rs) throw WellOrientedFailure(q, cell_index);
    std::vector<StackRoot> fresh;
    for (auto& r : *rs) {
      bool dup = false;
      for (auto& a : roots) {
        if (detail::same_root(base, k, a.node, r, rq)) {
          a.owners.push_back(q);
          dup = true;
          break;
        }
      }
      if (!dup) fresh.push_back({r, {q}});
    }
    for (auto& r : fresh) roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end(), [&](const StackRoot& a, const StackRoot& b) {
    return detail::node_less(base, k, a.node, b.node);
  });
  return roots;
}

/// Distinct real roots, ascending, of the polynomials L at x_k over base.
inline std::vector<NodePtr> stack_roots(const PolySet& L, const SamplePoint& base, int k,
                                        const std::vector<int>& cell_index) {
  std::vector<NodePtr> out;
  for (auto& r : stack_roots_owned(L, base, k, cell_index)) out.push_back(std::move(r.node));
  return out;
}

/// Stack over cell c with respect to L in variable index k.
inline std::vector<Cell> generate_stack(const Cell& c, const PolySet& L, int k) {
  auto roots = stack_roots_owned(L, c.sample, k, c.index);
  std::vector<Cell> out;
  auto sector = [&](const NodePtr& a, const NodePtr& b, int idx) {
    Cell cell;
    cell.index = c.index;
    cell.index.push_back(idx);
    cell.sample = c.sample.extended(std::make_shared<SampleNode>(k, detail::gap_sample(c.sample, k, a, b)));
    cell.cylinder = c.cylinder;
    cell.vanishing = c.vanishing;
    out.push_back(std::move(cell));
  };
  NodePtr prev;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    sector(prev, roots[i].node, static_cast<int>(2 * i + 1));
    Cell sec;
    sec.index = c.index;
    sec.index.push_back(static_cast<int>(2 * i + 2));
    sec.sample = c.sample.extended(roots[i].node);
    sec.cylinder = c.cylinder;
    sec.vanishing = c.vanishing;
    for (auto& q : roots[i].owners) sec.vanishing.push_back(std::move(q));
    out.push_back(std::move(sec));
    prev = roots[i].node;
  }
  sector(prev, nullptr, static_cast<int>(2 * roots.size() + 1));
  return out;
}

/// Decomposition of the line at the roots of L (E_1's factors or the basis of A_1).
inline std::vector<Cell> base_phase(const PolySet& L) {
  Cell root;
  return generate_stack(root, L, 0);
}

/// F_k when a constraint is designated at k, else B_k.
inline PolySet select_lifting_set(const ProjectionLayers& layers, int k, bool reduced) {
  if (reduced && !layers.F[k].empty()) return layers.F[k];
  return layers.B[k];
}

/// Positions of admissible (C_a) and other (C_b) cells of the previous level.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> select_admissible(const std::vector<Cell>& prev,
                                                                                         bool restrict_to_sections) {
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    if (!restrict_to_sections || prev[i].index.back() % 2 == 0) a.push_back(i);
    else b.push_back(i);
  }
  return {a, b};
}

/// One lift: stacks over C_a, trivial cylinders over C_b, in base-cell order.
inline std::vector<Cell> lift_level(std::vector<Cell>& prev, const PolySet& L, int k, bool restrict_to_sections,
                                    const Budget& budget = {}) {
  auto [ca, cb] = select_admissible(prev, restrict_to_sections);
  std::vector<char> admissible(prev.size(), 0);
  for (auto i : ca) admissible[i] = 1;
  std::vector<std::vector<Cell>> stacks(prev.size());
  std::vector<std::exception_ptr> errs(prev.size());
  std::atomic<std::size_t> produced{0};
  std::atomic<bool> stop{false};
  detail::parallel_for(ca.size(), [&](std::size_t j) {
    std::size_t i = ca[j];
    if (stop) return;
    try {
      stacks[i] = generate_stack(prev[i], L, k);
      produced += stacks[i].size();
      if ((budget.max_cells && produced > budget.max_cells) || budget.out_of_time()) stop = true;
    } catch (...) {
      errs[i] = std::current_exception();
    }
  });
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  // every base cell gets at least one cell above it
  if (stop) throw ResourceLimit("resource limit reached while lifting x" + std::to_string(k + 1), std::max<std::size_t>(produced, prev.size()));
  std::vector<Cell> out;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    prev[i].child_begin = out.size();
    if (admissible[i]) {
      for (auto& c : stacks[i]) out.push_back(std::move(c));
    } else {
      Cell cyl;
      cyl.index = prev[i].index;
      cyl.index.push_back(1);
      cyl.sample = prev[i].sample.extended(std::make_shared<SampleNode>(k, mpq_class(0)));
      cyl.cylinder = true;
      cyl.trivial = true;
      cyl.truth = Truth::False;
      cyl.vanishing = prev[i].vanishing;
      out.push_back(std::move(cyl));
    }
    prev[i].child_count = out.size() - prev[i].child_begin;
  }
  if (budget.max_cells && out.size() > budget.max_cells)
    throw ResourceLimit("cell limit reached at x" + std::to_string(k + 1), out.size());
  return out;
}

}  // namespace eccad

#endif  // ECCAD_LIFTING_HPP
