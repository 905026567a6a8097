// Growth of the (m,d)-property through projection and the closed-form
// dominant terms of the cell-count bounds. Exact integer arithmetic.

#ifndef ECCAD_BOUNDS_HPP
#define ECCAD_BOUNDS_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eccad/polynomial.hpp"

namespace eccad {

enum class Flavor { P_only, EC_then_P, GB_EC_then_P };
enum class DominantTerm { Eq8, Eq10, Eq11 };

inline const char* flavor_text(Flavor f) {
  switch (f) {
    case Flavor::P_only: return "P_only";
    case Flavor::EC_then_P: return "EC_then_P";
    case Flavor::GB_EC_then_P: return "GB_EC_then_P";
  }
  return "?";
}

/// Bound for the projection set in `level` variables. For the Groebner
/// flavor `degree` is the bound on the non-designated polynomials and
/// `ec_degree` the bound on the designated one; otherwise the two agree.
struct GrowthRow {
  int level = 0;
  mpz_class count, degree, ec_degree;
  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

namespace detail {

inline mpz_class zpow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return r;
}

inline mpz_class zpow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline mpq_class qpow(long base, long e) {
  mpz_class p = zpow(base, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1, p) : mpq_class(p);
}

inline unsigned long two_to(long e) { return 1ul << e; }

inline void check_params(int n, int m, int d, int l, bool ec) {
  if (n < 1 || m < 1 || d < 1) throw UsageError("bounds need n, m, d >= 1");
  if (n > 16) throw UsageError("bounds: n above 16 is not supported (doubly exponential sizes)");
  if (ec && (l < 1 || l > std::min(m, n))) throw UsageError("bounds need 1 <= l <= min(m, n) for EC flavors");
  if (!ec && l != 0) throw UsageError("P_only takes l = 0");
}

}  // namespace detail

/// Rows for n, n-1, ..., 1 variables.
inline std::vector<GrowthRow> growth_table(int n, int m, int d, int l, Flavor flavor) {
  using detail::two_to;
  using detail::zpow;
  detail::check_params(n, m, d, l, flavor != Flavor::P_only);
  std::vector<GrowthRow> rows;
  for (int level = n; level >= 1; --level) {
    int s = n - level;  // projections applied so far
    GrowthRow row;
    row.level = level;
    if (flavor == Flavor::P_only) {
      if (s == 0) {
        row.count = m;
        row.degree = d;
      } else {
        row.count = zpow(2, two_to(s - 1)) * zpow(m, two_to(s));
        row.degree = zpow(2, two_to(s) - 1) * zpow(d, two_to(s));
      }
      row.ec_degree = row.degree;
    } else {
      if (s <= l) {
        row.count = zpow(3, s) * m;
        row.degree = zpow(2, two_to(s) - 1) * zpow(d, two_to(s));
      } else {
        int r = s - l;
        row.count = zpow(3, two_to(r) * l) * zpow(m, two_to(r));
        row.degree = zpow(2, two_to(l + r) - 1) * zpow(d, two_to(l + r));
      }
      row.ec_degree = row.degree;
      if (flavor == Flavor::GB_EC_then_P) {
        if (s <= l) {
          row.ec_degree = zpow(s + 1, s + 1) * zpow(d, s + 1);
          row.degree = zpow(d, s * (s + 1) / 2 + 1);
        } else {
          int r = s - l;
          row.degree = zpow(d, two_to(r - 1) * l * (l + 1) + two_to(r));
          row.ec_degree = row.degree;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Closed-form dominant term of a cell-count bound: Eq8 for the
/// sign-invariant operator, Eq10 with reduced projection for l constraints,
/// Eq11 with reduced projection and lifting.
inline mpq_class dominant_term(int n, int m, int d, int l, DominantTerm which) {
  detail::check_params(n, m, d, which == DominantTerm::Eq8 ? 0 : l, which != DominantTerm::Eq8);
  long N = 1l << n;
  mpq_class base = detail::qpow(2 * d, N - 1);
  auto mp = [&](long e) {
    mpz_class p = detail::zpow(m, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(1, p) : mpq_class(p);
  };
  long L = l, K = 1l << (n - l);
  switch (which) {
    case DominantTerm::Eq8: return base * mp(N - 1) * detail::qpow(2, N / 2 - 1);
    case DominantTerm::Eq10: return base * mp(K + L - 1) * detail::qpow(3, L * K + L * (L - 3) / 2);
    case DominantTerm::Eq11: return base * mp(K - 2) * detail::qpow(2, -L) * detail::qpow(3, L * K - 2 * L);
  }
  return 0;
}

/// Exponent of d in the bound with constraints taken from a Groebner basis:
/// 2^(n-l) (l^2 + l + 2) / 2 - (l^2 + l) / 2 - 2.
inline mpz_class gb_degree_exponent(int n, int l) {
  if (l < 1 || l >= n) throw UsageError("gb_degree_exponent needs 1 <= l < n");
  if (n > 60) throw UsageError("gb_degree_exponent: n too large");
  mpz_class L = l;
  return detail::zpow(2, static_cast<unsigned long>(n - l)) * (L * L + L + 2) / 2 - (L * L + L) / 2 - 2;
}

}  // namespace eccad

#endif  // ECCAD_BOUNDS_HPP
