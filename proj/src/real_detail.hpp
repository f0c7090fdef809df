#pragma once

// Internal MPFR helpers: a small RAII wrapper plus the directed-rounding
// conversions the library needs. Not installed; include from src/ only.

#include <mpfr.h>

#include "brauer/rational.hpp"

namespace brauer::detail {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Exact conversion of a finite mpfr value to a rational.
Rational to_rational(mpfr_srcptr x);

Real from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

double rational_to_double(const Rational& q, mpfr_rnd_t rnd);

}  // namespace brauer::detail
