// End-to-end CAD construction in three modes, truth assignment, solution
// extraction and point location.

#ifndef ECCAD_ENGINE_HPP
#define ECCAD_ENGINE_HPP

#include <chrono>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eccad/ecprep.hpp"
#include "eccad/lifting.hpp"
#include "eccad/projection.hpp"

namespace eccad {

enum class Mode { SignInvariant, SingleEc, MultiEc };

inline const char* mode_text(Mode m) {
  switch (m) {
    case Mode::SignInvariant: return "sign_invariant";
    case Mode::SingleEc: return "single_ec";
    case Mode::MultiEc: return "multi_ec";
  }
  return "?";
}

struct RunConfig {
  Mode mode = Mode::MultiEc;
  EcSource source = EcSource::Propagate;
  std::vector<std::string> designation_ids;  // empty: automatic
  std::optional<Designation> designation;    // overrides ids when set
  bool cell_restriction = true;
  bool strict = false;
  Budget budget;
};

struct PhaseTimes {
  double prep = 0, projection = 0, lifting = 0, truth = 0;
};

struct CadResult {
  std::vector<std::string> names;
  Formula formula;
  Mode mode = Mode::MultiEc;
  EcPreparation prep;
  Designation designation;
  ProjectionLayers layers;
  Cad cad;
  std::vector<std::string> warnings;
  PhaseTimes times;

  std::vector<std::size_t> level_counts() const {
    std::vector<std::size_t> out;
    for (const auto& l : cad.levels) out.push_back(l.size());
    return out;
  }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

/// Highest level with a primitive explicit constraint; first in auto order there.
inline Designation single_designation(const Formula& f, int n, const std::vector<std::string>& names,
                                      std::vector<std::string>& warnings) {
  auto prep = prepare_ecs(f, n, EcSource::Explicit, names);
  Designation all = designate_auto(prep.pool, &warnings);
  Designation d(n);
  for (int k = n - 1; k >= 0; --k) {
    if (!all.has(k)) continue;
    d.E[k] = all.E[k];
    d.prov[k] = all.prov[k];
    d.ids[k] = all.ids[k];
    break;
  }
  return d;
}

/// Memoised "q divides p" for formula atoms against lifting polynomials.
class DivisibilityCache {
 public:
  bool operator()(const Polynomial& q, const Polynomial& p) {
    {
      std::lock_guard<std::mutex> g(mu_);
      for (const auto& e : seen_)
        if (e.q == q && e.p == p) return e.result;
    }
    bool r = q.mvar() <= p.mvar() && divide_exact(p, q).has_value();
    std::lock_guard<std::mutex> g(mu_);
    seen_.push_back({q, p, r});
    return r;
  }

 private:
  struct Entry {
    Polynomial q, p;
    bool result;
  };
  std::mutex mu_;
  std::vector<Entry> seen_;
};

}  // namespace detail

/// Builds a truth-invariant CAD for f in the given mode (a sign-invariant
/// one in sign_invariant mode). Throws WellOrientedFailure, NonPrimitiveEC
/// or ResourceLimit.
inline CadResult build_cad(const Formula& f, const std::vector<std::string>& names, const RunConfig& cfg) {
  using clock = std::chrono::steady_clock;
  int n = static_cast<int>(names.size());
  if (n == 0) throw UsageError("no variables declared");
  CadResult R;
  R.names = names;
  R.formula = f;
  R.mode = cfg.mode;

  auto t0 = clock::now();
  PolySet A;
  switch (cfg.mode) {
    case Mode::SignInvariant:
      R.designation = Designation(n);
      A = extract_polynomials(f);
      break;
    case Mode::SingleEc:
      if (cfg.designation) {
        R.designation = Designation(n);
        for (int k = n - 1; k >= 0; --k) {
          if (!cfg.designation->has(k)) continue;
          R.designation.E[k] = cfg.designation->E[k];
          R.designation.ids[k] = cfg.designation->ids[k];
          R.designation.prov[k] = cfg.designation->prov[k];
          break;
        }
      } else {
        R.designation = detail::single_designation(f, n, names, R.warnings);
      }
      A = extract_polynomials(f);
      for (const auto& e : R.designation.E)
        if (e) A.insert(*e);
      break;
    case Mode::MultiEc: {
      R.prep = prepare_ecs(f, n, cfg.source, names);
      if (R.prep.gb_unsat) {
        R.warnings.push_back("Groebner basis is {1}: the constraints have no common zero; using propagation instead");
        R.prep = prepare_ecs(f, n, EcSource::Propagate, names);
      }
      if (cfg.designation) {
        R.designation = *cfg.designation;
      } else if (!cfg.designation_ids.empty()) {
        R.designation = designate_ids(R.prep.pool, cfg.designation_ids);
      } else {
        std::vector<std::string> skipped;
        R.designation = designate_auto(R.prep.pool, &skipped);
        if (cfg.strict && !skipped.empty()) throw NonPrimitiveEC(skipped.front());
        for (auto& w : skipped) R.warnings.push_back(w);
        if (!skipped.empty() && R.designation.count() == 0)
          R.warnings.push_back("no primitive constraint to designate; building a sign-invariant CAD");
      }
      A = working_set(f, R.prep, R.designation);
      break;
    }
  }
  R.times.prep = detail::seconds_since(t0);

  t0 = clock::now();
  R.layers = projection_phase(A, R.designation, cfg.mode == Mode::SingleEc);
  R.times.projection = detail::seconds_since(t0);

  t0 = clock::now();
  Budget budget = cfg.budget;
  budget.start = t0;
  bool reduced = cfg.mode != Mode::SignInvariant;
  R.cad.lifting.push_back(select_lifting_set(R.layers, 0, reduced));
  R.cad.restricted.push_back(false);
  R.cad.levels.push_back(base_phase(R.cad.lifting[0]));
  for (int k = 1; k < n; ++k) {
    PolySet L = select_lifting_set(R.layers, k, reduced);
    bool restrict_ = cfg.mode == Mode::MultiEc && cfg.cell_restriction && R.designation.has(k - 1);
    std::vector<Cell> next;
    try {
      next = lift_level(R.cad.levels[k - 1], L, k, restrict_, budget);
    } catch (const WellOrientedFailure& e) {
      throw WellOrientedFailure(e.poly(), e.cell(), R.names);
    } catch (const ResourceLimit& e) {
      std::string what = e.what();
      throw ResourceLimit(what.substr(0, what.rfind(' ') + 1) + R.names[k], e.cells_so_far());
    }
    R.cad.lifting.push_back(std::move(L));
    R.cad.restricted.push_back(restrict_);
    R.cad.levels.push_back(std::move(next));
  }
  R.times.lifting = detail::seconds_since(t0);

  t0 = clock::now();
  auto& top = R.cad.levels.back();
  detail::DivisibilityCache divides;
  detail::parallel_for(top.size(), [&](std::size_t i) {
    Cell& c = top[i];
    if (c.cylinder) {
      c.truth = Truth::False;
      return;
    }
    bool t = f.evaluate([&](const Polynomial& p) {
      for (const auto& q : c.vanishing)
        if (divides(q, p)) return 0;
      return sign_at(p, c.sample);
    });
    c.truth = t ? Truth::True : Truth::False;
  });
  R.times.truth = detail::seconds_since(t0);
  return R;
}

/// Top-level cells with truth TRUE, in index order.
inline std::vector<const Cell*> solution_cells(const Cad& D) {
  std::vector<const Cell*> out;
  if (D.levels.empty()) return out;
  for (const auto& c : D.levels.back())
    if (c.truth == Truth::True) out.push_back(&c);
  return out;
}

/// Top-level cell containing a rational point.
inline const Cell& locate(const Cad& D, const std::vector<mpq_class>& point) {
  int n = D.n();
  if (static_cast<int>(point.size()) != n) throw UsageError("point dimension does not match the CAD");
  const Cell* cur = nullptr;
  for (int k = 0; k < n; ++k) {
    const auto& level = D.levels[k];
    std::size_t begin = cur ? cur->child_begin : 0;
    std::size_t count = cur ? cur->child_count : level.size();
    if (count == 1) {
      cur = &level[begin];
      continue;
    }
    std::vector<mpq_class> pre(point.begin(), point.begin() + k);
    SamplePoint base = SamplePoint::from_rationals(pre);
    auto roots = stack_roots(D.lifting[k], base, k, cur ? cur->index : std::vector<int>{});
    if (2 * roots.size() + 1 != count) throw std::logic_error("stack size changed inside a cell during locate");
    std::size_t pos = 2 * roots.size();  // 0-based position in the stack
    for (std::size_t i = 0; i < roots.size(); ++i) {
      int s = detail::cmp_rational(base.extended(roots[i]), k, point[k]);  // sign(root - x)
      if (s == 0) {
        pos = 2 * i + 1;
        break;
      }
      if (s > 0) {
        pos = 2 * i;
        break;
      }
    }
    cur = &level[begin + pos];
  }
  return *cur;
}

/// First lifting polynomial nullified over an admissible cell, if any.
inline std::optional<std::pair<Polynomial, std::vector<int>>> find_nullification(const Cad& D) {
  for (int k = 1; k < D.n(); ++k) {
    for (const auto& c : D.levels[k - 1]) {
      if (D.restricted[k] && c.index.back() % 2 == 1) continue;
      for (const auto& q : D.lifting[k]) {
        auto img = substitute_partial(q, c.sample, Var{k});
        if (img.kind == ImageKind::Nullified) return std::make_pair(q, c.index);
      }
    }
  }
  return std::nullopt;
}

}  // namespace eccad

#endif  // ECCAD_ENGINE_HPP
