// Equational constraints: explicit ones, resultant propagation, Groebner
// derivation, and the per-level designation E_1..E_n.

#ifndef ECCAD_ECPREP_HPP
#define ECCAD_ECPREP_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eccad/formula.hpp"
#include "eccad/groebner.hpp"

namespace eccad {

class NonPrimitiveEC : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Provenance { Explicit, Propagated, Groebner };
enum class EcSource { Explicit, Propagate, Groebner };

inline const char* provenance_text(Provenance p) {
  switch (p) {
    case Provenance::Explicit: return "explicit";
    case Provenance::Propagated: return "propagated";
    case Provenance::Groebner: return "groebner";
  }
  return "?";
}

/// `=` atoms that are top-level conjuncts.
inline PolySet explicit_ecs(const Formula& f) {
  PolySet out;
  for (const Formula* c : f.conjuncts())
    if (c->kind() == Formula::Kind::Atom && c->atom().rel == Rel::Eq) out.insert(c->atom().poly);
  return out;
}

inline bool is_primitive_in_mvar(const Polynomial& p) {
  if (p.is_constant()) return false;
  return content(p, Var{p.mvar()}).is_constant();
}

struct Candidate {
  Polynomial poly;
  int level = 0;  // var index of the main variable
  Provenance prov = Provenance::Explicit;
  std::optional<Polynomial> parent_a, parent_b;  // resultant ancestry
  bool primitive = true;
  std::string id;
};

/// Candidates by level with stable ids like "y2" (variable name, 1-based rank).
class CandidatePool {
 public:
  CandidatePool() = default;
  explicit CandidatePool(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Candidate>& items() const { return items_; }

  const Candidate* find(const Polynomial& p) const {
    Polynomial c = canonical(p);
    for (const auto& it : items_)
      if (it.poly == c) return &it;
    return nullptr;
  }
  const Candidate* find_id(const std::string& id) const {
    for (const auto& it : items_)
      if (it.id == id) return &it;
    return nullptr;
  }
  std::vector<const Candidate*> at_level(int k) const {
    std::vector<const Candidate*> out;
    for (const auto& it : items_)
      if (it.level == k) out.push_back(&it);
    return out;
  }

  /// Adds a candidate unless an equal polynomial is present.
  bool add(Candidate c) {
    c.poly = canonical(c.poly);
    if (c.poly.is_constant() || find(c.poly)) return false;
    c.level = c.poly.mvar();
    c.primitive = is_primitive_in_mvar(c.poly);
    items_.push_back(std::move(c));
    return true;
  }

  /// Orders each level by the auto-designation key and assigns ids.
  void finalize(const std::vector<std::string>& names) {
    names_ = names;
    std::stable_sort(items_.begin(), items_.end(), [](const Candidate& a, const Candidate& b) {
      if (a.level != b.level) return a.level > b.level;
      return auto_less(a.poly, b.poly);
    });
    int last = -1, rank = 0;
    for (auto& it : items_) {
      if (it.level != last) {
        last = it.level;
        rank = 0;
      }
      std::string vn = it.level < static_cast<int>(names.size()) ? names[it.level] : "x" + std::to_string(it.level + 1);
      it.id = vn + std::to_string(++rank);
    }
  }

  /// Auto designation preference: degree in the main variable, term count, text.
  static bool auto_less(const Polynomial& a, const Polynomial& b) {
    unsigned da = a.degree(Var{a.mvar()}), db = b.degree(Var{b.mvar()});
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    return to_string(a) < to_string(b);
  }

 private:
  int nvars_ = 0;
  std::vector<Candidate> items_;
  std::vector<std::string> names_;
};

/// Squarefree part of a resultant, used as the derived constraint.
inline Polynomial squarefree_product(const Polynomial& p) {
  Polynomial acc(1);
  for (const auto& f : canonical_factors(p)) acc *= f;
  return canonical(acc);
}

/// Closes the explicit constraints under pairwise resultants, level by level downward.
inline CandidatePool propagate(const PolySet& E, int nvars, const std::vector<std::string>& names = {}) {
  CandidatePool pool(nvars);
  for (const auto& e : E) pool.add(Candidate{e, 0, Provenance::Explicit, std::nullopt, std::nullopt, true, ""});
  for (int k = nvars - 1; k >= 1; --k) {
    std::vector<Polynomial> level;
    for (const auto* c : pool.at_level(k)) level.push_back(c->poly);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        Polynomial r = resultant(level[i], level[j], Var{k});
        if (r.is_zero() || r.is_constant()) continue;
        pool.add(Candidate{squarefree_product(r), 0, Provenance::Propagated, level[i], level[j], true, ""});
      }
    }
  }
  pool.finalize(names);
  return pool;
}

/// Reduced lex basis elements bucketed by main variable. Empty pool and
/// unsat = true when the ideal is the whole ring.
inline CandidatePool groebner_pool(const PolySet& E, int nvars, const std::vector<std::string>& names, bool& unsat) {
  CandidatePool pool(nvars);
  auto gb = groebner_basis(E.elems());
  unsat = gb.size() == 1 && gb[0].is_constant();
  if (!unsat)
    for (const auto& g : gb) pool.add(Candidate{g, 0, Provenance::Groebner, std::nullopt, std::nullopt, true, ""});
  pool.finalize(names);
  return pool;
}

/// E_k per variable index; empty optional = no designated constraint.
struct Designation {
  std::vector<std::optional<Polynomial>> E;
  std::vector<Provenance> prov;
  std::vector<std::string> ids;

  explicit Designation(int n = 0) : E(n), prov(n, Provenance::Explicit), ids(n) {}
  int n() const { return static_cast<int>(E.size()); }
  bool has(int k) const { return k >= 0 && k < n() && E[k].has_value(); }
  int count() const {
    int c = 0;
    for (const auto& e : E) c += e.has_value();
    return c;
  }
  std::string label() const {
    std::string s;
    for (int k = n() - 1; k >= 0; --k) {
      if (!E[k]) continue;
      if (!s.empty()) s += ",";
      s += ids[k].empty() ? to_string(*E[k]) : ids[k];
    }
    return s.empty() ? "none" : s;
  }
};

inline void designate_candidate(Designation& d, const Candidate& c) {
  if (!c.primitive) throw NonPrimitiveEC("constraint " + to_string(c.poly) + " is not primitive in its main variable");
  d.E[c.level] = c.poly;
  d.prov[c.level] = c.prov;
  d.ids[c.level] = c.id;
}

/// Per level the first primitive candidate in auto order; non-primitive ones are reported in warnings.
inline Designation designate_auto(const CandidatePool& pool, std::vector<std::string>* warnings = nullptr) {
  Designation d(pool.nvars());
  for (int k = pool.nvars() - 1; k >= 0; --k) {
    for (const auto* c : pool.at_level(k)) {
      if (!c->primitive) {
        if (warnings)
          warnings->push_back("constraint " + to_string(c->poly, pool.names()) +
                              " is not primitive in its main variable; not designated");
        continue;
      }
      designate_candidate(d, *c);
      break;
    }
  }
  return d;
}

/// Forced designation from candidate ids (at most one per level).
inline Designation designate_ids(const CandidatePool& pool, const std::vector<std::string>& ids) {
  Designation d(pool.nvars());
  for (const auto& id : ids) {
    const Candidate* c = pool.find_id(id);
    if (!c) throw UsageError("unknown candidate id '" + id + "'");
    if (d.has(c->level)) throw UsageError("two designations for one level: '" + id + "'");
    designate_candidate(d, *c);
  }
  return d;
}

/// Forced designation by polynomial (must be in the pool).
inline Designation designate_polys(const CandidatePool& pool, const std::vector<Polynomial>& ps) {
  std::vector<std::string> ids;
  for (const auto& p : ps) {
    const Candidate* c = pool.find(p);
    if (!c) throw UsageError("polynomial " + to_string(p) + " is not a candidate");
    ids.push_back(c->id);
  }
  return designate_ids(pool, ids);
}

/// Every choice of one primitive candidate per nonempty level, capped.
inline std::vector<Designation> enumerate_designations(const CandidatePool& pool, std::size_t cap = 256) {
  std::vector<std::vector<const Candidate*>> levels;
  for (int k = pool.nvars() - 1; k >= 0; --k) {
    std::vector<const Candidate*> ok;
    for (const auto* c : pool.at_level(k))
      if (c->primitive) ok.push_back(c);
    if (!ok.empty()) levels.push_back(std::move(ok));
  }
  std::vector<Designation> out;
  std::vector<std::size_t> idx(levels.size(), 0);
  while (out.size() < cap) {
    Designation d(pool.nvars());
    for (std::size_t l = 0; l < levels.size(); ++l) designate_candidate(d, *levels[l][idx[l]]);
    out.push_back(std::move(d));
    std::size_t l = levels.size();
    while (l > 0) {
      --l;
      if (++idx[l] < levels[l].size()) break;
      idx[l] = 0;
      if (l == 0) return out;
    }
    if (levels.empty()) return out;
  }
  return out;
}

inline std::size_t designation_space(const CandidatePool& pool) {
  std::size_t total = 1;
  for (int k = 0; k < pool.nvars(); ++k) {
    std::size_t c = 0;
    for (const auto* it : pool.at_level(k)) c += it->primitive;
    if (c) total *= c;
  }
  return total;
}

/// Candidate pool for the chosen source.
struct EcPreparation {
  CandidatePool pool;
  EcSource source = EcSource::Propagate;
  bool gb_unsat = false;
};

inline EcPreparation prepare_ecs(const Formula& f, int nvars, EcSource source, const std::vector<std::string>& names) {
  EcPreparation prep;
  prep.source = source;
  PolySet E = explicit_ecs(f);
  switch (source) {
    case EcSource::Explicit: {
      CandidatePool pool(nvars);
      for (const auto& e : E) pool.add(Candidate{e, 0, Provenance::Explicit, std::nullopt, std::nullopt, true, ""});
      pool.finalize(names);
      prep.pool = std::move(pool);
      break;
    }
    case EcSource::Propagate:
      prep.pool = propagate(E, nvars, names);
      break;
    case EcSource::Groebner:
      if (E.empty()) {
        prep.pool = CandidatePool(nvars);
      } else {
        prep.pool = groebner_pool(E, nvars, names, prep.gb_unsat);
      }
      break;
  }
  return prep;
}

/// Input set A_n: atom polynomials (explicit constraints replaced by the
/// basis on the Groebner route), plus every designated polynomial.
inline PolySet working_set(const Formula& f, const EcPreparation& prep, const Designation& d) {
  PolySet A;
  if (prep.source == EcSource::Groebner && !prep.pool.items().empty()) {
    PolySet E = explicit_ecs(f);
    PolySet all = extract_polynomials(f);
    for (const auto& p : all) {
      bool only_as_ec = E.contains(p);
      // keep p if it also occurs in a non-conjunct or non-equation atom
      if (only_as_ec) {
        bool other = false;
        std::vector<const Formula*> cs = f.conjuncts();
        for (const Formula* c : cs) {
          bool is_ec_atom = c->kind() == Formula::Kind::Atom && c->atom().rel == Rel::Eq;
          if (is_ec_atom) continue;
          c->for_each_atom([&](const Atom& a) {
            if (a.poly == p) other = true;
          });
        }
        if (other) A.insert(p);
      } else {
        A.insert(p);
      }
    }
    for (const auto& c : prep.pool.items()) A.insert(c.poly);
  } else {
    A = extract_polynomials(f);
  }
  for (const auto& e : d.E)
    if (e) A.insert(*e);
  return A;
}

}  // namespace eccad

#endif  // ECCAD_ECPREP_HPP
