// Outward-rounded interval arithmetic on MPFR floats.

#ifndef ECCAD_INTERVAL_HPP
#define ECCAD_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace eccad {

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Interval(const mpq_class& q, mpfr_prec_t prec) : Interval(prec) {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const mpq_class& lo, const mpq_class& hi, mpfr_prec_t prec) : Interval(prec) {
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
  }
  Interval(const mpz_class& z, mpfr_prec_t prec) : Interval(prec) {
    mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
  }
  Interval(const Interval& o) : Interval(mpfr_get_prec(o.lo_)) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Interval& operator=(const Interval& o) {
    if (this != &o) {
      mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
      mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }

  /// -1, +1 when the whole interval has that sign, 0 when it contains zero.
  int sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }
  bool is_point_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

  void add(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  }

  void mul(const Interval& o) {
    mpfr_prec_t p = prec();
    mpfr_t a, b, c, d;
    mpfr_inits2(p, a, b, c, d, static_cast<mpfr_ptr>(nullptr));
    mpfr_mul(a, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(b, lo_, o.hi_, MPFR_RNDD);
    mpfr_mul(c, hi_, o.lo_, MPFR_RNDD);
    mpfr_mul(d, hi_, o.hi_, MPFR_RNDD);
    mpfr_t lo;
    mpfr_init2(lo, p);
    mpfr_min(lo, a, b, MPFR_RNDD);
    mpfr_min(lo, lo, c, MPFR_RNDD);
    mpfr_min(lo, lo, d, MPFR_RNDD);
    mpfr_mul(a, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(b, lo_, o.hi_, MPFR_RNDU);
    mpfr_mul(c, hi_, o.lo_, MPFR_RNDU);
    mpfr_mul(d, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(hi_, a, b, MPFR_RNDU);
    mpfr_max(hi_, hi_, c, MPFR_RNDU);
    mpfr_max(hi_, hi_, d, MPFR_RNDU);
    mpfr_set(lo_, lo, MPFR_RNDD);
    mpfr_clears(a, b, c, d, lo, static_cast<mpfr_ptr>(nullptr));
  }

  /// Upper bound of |x| over the interval.
  mpq_class magnitude_upper() const {
    mpq_class a = to_q(lo_), b = to_q(hi_);
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return a > b ? a : b;
  }
  /// Lower bound of |x| over the interval (0 if it contains zero).
  mpq_class magnitude_lower() const {
    if (sign() == 0) return 0;
    mpq_class a = to_q(lo_), b = to_q(hi_);
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    return a < b ? a : b;
  }

  double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

 private:
  mpfr_t lo_, hi_;

  static mpq_class to_q(const mpfr_t x) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
  }
};

}  // namespace eccad

#endif  // ECCAD_INTERVAL_HPP
