// Duplicate-free sets of canonical, nonconstant polynomials.

#ifndef ECCAD_POLYSET_HPP
#define ECCAD_POLYSET_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "eccad/polyalg.hpp"

namespace eccad {

/// Display/iteration order: main variable, then degree, then size, then terms.
inline bool poly_display_less(const Polynomial& a, const Polynomial& b) {
  if (a.mvar() != b.mvar()) return a.mvar() < b.mvar();
  unsigned da = a.mvar() < 0 ? 0 : a.degree(Var{a.mvar()});
  unsigned db = b.mvar() < 0 ? 0 : b.degree(Var{b.mvar()});
  if (da != db) return da < db;
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class PolySet {
 public:
  PolySet() = default;
  PolySet(std::initializer_list<Polynomial> ps) {
    for (const auto& p : ps) insert(p);
  }
  explicit PolySet(const std::vector<Polynomial>& ps) {
    for (const auto& p : ps) insert(p);
  }

  /// Inserts canonical(p); constants are ignored. Returns true if new.
  bool insert(const Polynomial& p) {
    if (p.is_constant()) return false;
    Polynomial c = canonical(p);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), c, poly_display_less);
    if (it != elems_.end() && *it == c) return false;
    elems_.insert(it, std::move(c));
    return true;
  }

  void insert_all(const PolySet& o) {
    for (const auto& p : o) insert(p);
  }

  /// Inserts every nonconstant squarefree factor of p.
  void insert_factors(const Polynomial& p) {
    for (const auto& f : canonical_factors(p)) insert(f);
  }

  bool contains(const Polynomial& p) const {
    if (p.is_constant()) return false;
    Polynomial c = canonical(p);
    return std::binary_search(elems_.begin(), elems_.end(), c, poly_display_less);
  }

  bool subset_of(const PolySet& o) const {
    return std::all_of(elems_.begin(), elems_.end(), [&](const Polynomial& p) { return o.contains(p); });
  }

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return elems_[i]; }
  std::vector<Polynomial>::const_iterator begin() const { return elems_.begin(); }
  std::vector<Polynomial>::const_iterator end() const { return elems_.end(); }
  const std::vector<Polynomial>& elems() const { return elems_; }

  friend bool operator==(const PolySet& a, const PolySet& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Polynomial> elems_;
};

inline std::string to_string(const PolySet& s, const std::vector<std::string>& names = {}) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + to_string(s[i], names);
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const PolySet& s) { return os << to_string(s); }

}  // namespace eccad

#endif  // ECCAD_POLYSET_HPP
