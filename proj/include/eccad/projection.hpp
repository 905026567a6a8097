// Projection operators P, P_F, P*_F and the projection phase.

#ifndef ECCAD_PROJECTION_HPP
#define ECCAD_PROJECTION_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eccad/ecprep.hpp"
#include "eccad/polyset.hpp"

namespace eccad {

enum class ProjOp { None, P, PF, PFstar };

inline const char* op_text(ProjOp op) {
  switch (op) {
    case ProjOp::None: return "none";
    case ProjOp::P: return "P";
    case ProjOp::PF: return "PF";
    case ProjOp::PFstar: return "PFstar";
  }
  return "?";
}

namespace detail {

/// Runs jobs(i) for i in [0, n) on up to hardware_concurrency threads.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& job) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  std::size_t nt = std::min<std::size_t>(hw, n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> g(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

struct ProjJob {
  enum Kind { Res, Disc } kind;
  const Polynomial* a;
  const Polynomial* b;
};

inline PolySet run_jobs(const std::vector<ProjJob>& jobs, Var v) {
  std::vector<Polynomial> out(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& j = jobs[i];
    out[i] = j.kind == ProjJob::Res ? resultant(*j.a, *j.b, v) : discriminant(*j.a, v);
  });
  PolySet s;
  for (const auto& p : out)
    if (!p.is_zero()) s.insert_factors(p);
  return s;
}

/// Coefficients from the leading one down, stopping after the first nonzero constant.
inline void add_pruned_coefficients(PolySet& s, const Polynomial& p, Var v) {
  for (const auto& c : coefficients(p, v)) {
    if (c.is_constant()) return;
    s.insert_factors(c);
  }
}

inline void check_mvar(const PolySet& B, Var v) {
  for (const auto& b : B)
    if (b.mvar() != v.index) throw UsageError("projection input does not have the projected main variable");
}

inline PolySet set_minus(const PolySet& B, const PolySet& F) {
  PolySet r;
  for (const auto& b : B)
    if (!F.contains(b)) r.insert(b);
  return r;
}

}  // namespace detail

/// res(B) u disc(B) u coeff(B).
inline PolySet proj_P(const PolySet& B, Var v) {
  detail::check_mvar(B, v);
  std::vector<detail::ProjJob> jobs;
  for (std::size_t i = 0; i < B.size(); ++i) {
    jobs.push_back({detail::ProjJob::Disc, &B[i], nullptr});
    for (std::size_t j = i + 1; j < B.size(); ++j) jobs.push_back({detail::ProjJob::Res, &B[i], &B[j]});
  }
  PolySet s = detail::run_jobs(jobs, v);
  for (const auto& b : B) detail::add_pruned_coefficients(s, b, v);
  return s;
}

/// P(F) u { res(f, g) : f in F, g in B \ F }.
inline PolySet proj_PF(const PolySet& B, const PolySet& F, Var v) {
  detail::check_mvar(B, v);
  PolySet rest = detail::set_minus(B, F);
  PolySet s = proj_P(F, v);
  std::vector<detail::ProjJob> jobs;
  for (const auto& f : F)
    for (const auto& g : rest) jobs.push_back({detail::ProjJob::Res, &f, &g});
  s.insert_all(detail::run_jobs(jobs, v));
  return s;
}

/// P_F(B) u disc(B \ F) u coeff(B \ F).
inline PolySet proj_PFstar(const PolySet& B, const PolySet& F, Var v) {
  PolySet s = proj_PF(B, F, v);
  PolySet rest = detail::set_minus(B, F);
  std::vector<detail::ProjJob> jobs;
  for (const auto& g : rest) jobs.push_back({detail::ProjJob::Disc, &g, nullptr});
  s.insert_all(detail::run_jobs(jobs, v));
  for (const auto& g : rest) detail::add_pruned_coefficients(s, g, v);
  return s;
}

/// Per variable index k: A_k (mvar <= x_k), the basis B_k, the constraint
/// factors F_k, the contents C_k split off at k, and the operator used to
/// produce A_{k-1}.
struct ProjectionLayers {
  std::vector<PolySet> A, B, F, C;
  std::vector<ProjOp> op;

  explicit ProjectionLayers(int n = 0) : A(n), B(n), F(n), C(n), op(n, ProjOp::None) {}
  int n() const { return static_cast<int>(A.size()); }
};

/// Basis elements dividing e (the constraint's factors as members of B).
inline PolySet match_factors(const PolySet& B, const Polynomial& e) {
  PolySet F;
  for (const auto& b : B)
    if (divide_exact(e, b)) F.insert(b);
  return F;
}

/// Projection phase: P where no constraint is designated, P_F at the top
/// level and at x_2, P*_F elsewhere (P_F at every designated level when
/// pf_only is set, for the single-constraint baseline).
inline ProjectionLayers projection_phase(const PolySet& An, const Designation& E, bool pf_only = false) {
  int n = E.n();
  ProjectionLayers L(n);
  if (n == 0) return L;
  L.A[n - 1] = An;
  for (int k = n - 1; k >= 0; --k) {
    Var v{k};
    std::vector<Polynomial> prims;
    PolySet C;
    for (const auto& p : L.A[k]) {
      auto cp = content_primpart(p, v);
      if (!cp.content.is_constant()) C.insert_factors(cp.content);
      if (p.has_var(v)) prims.push_back(cp.primitive);
    }
    L.C[k] = C;
    L.B[k] = PolySet(squarefree_basis(prims, v));
    if (E.has(k)) {
      L.F[k] = match_factors(L.B[k], *E.E[k]);
      if (L.F[k].empty()) throw UsageError("designated constraint has no factor in the basis");
    }
    if (k == 0) break;
    PolySet next = C;
    if (!E.has(k)) {
      L.op[k] = ProjOp::P;
      next.insert_all(proj_P(L.B[k], v));
    } else if (pf_only || k == n - 1 || k == 1) {
      L.op[k] = ProjOp::PF;
      next.insert_all(proj_PF(L.B[k], L.F[k], v));
    } else {
      L.op[k] = ProjOp::PFstar;
      next.insert_all(proj_PFstar(L.B[k], L.F[k], v));
    }
    L.A[k - 1] = next;
  }
  return L;
}

}  // namespace eccad

#endif  // ECCAD_PROJECTION_HPP
