#include "brauer/phipsi.hpp"

#include <cmath>
#include <stdexcept>

#include "brauer/primes.hpp"
#include "real_detail.hpp"

namespace brauer {

BigInt phi_exp(long n) {
  if (n < 0) throw std::invalid_argument("phi_exp requires n >= 0");
  BigInt prod = 1;
  for (long i = 0; i <= n; ++i) {
    prod *= nth_prime(static_cast<std::size_t>(i)) - 1;
  }
  return prod;
}

double phi(long n) {
  // phi_exp(n) overflows double well before n = 200; go through mpfr.
  const BigInt e = phi_exp(n);
  detail::Real r(96);
  mpfr_set_z(r.get(), e.get_mpz_t(), MPFR_RNDN);
  mpfr_log(r.get(), r.get(), MPFR_RNDN);
  return mpfr_get_d(r.get(), MPFR_RNDN);
}

Rational psi(long n) {
  if (n < -1) throw std::invalid_argument("psi requires n >= -1");
  BigInt num = 1, den = 1;
  for (long i = 0; i <= n + 1; ++i) {
    const std::uint64_t p = nth_prime(static_cast<std::size_t>(i));
    num *= p;
    den *= p - 1;
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

PhiInput PhiInput::log_of_rational(Rational q) {
  if (q < 1) throw std::invalid_argument("log-of-rational input requires Q >= 1");
  PhiInput in;
  in.exact_ = true;
  in.q_ = std::move(q);
  return in;
}

PhiInput PhiInput::raw_real(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("raw-real input requires t >= 0");
  if (t > 1e6) throw std::invalid_argument("raw-real t too large; use the exact Q path");
  PhiInput in;
  in.exact_ = false;
  in.t_ = t;
  return in;
}

long phi_inverse(const PhiInput& input) {
  if (input.is_exact()) {
    // max n with phi_exp(n) <= Q, by exact comparison of the running product.
    const BigInt& qn = input.q().get_num();
    const BigInt& qd = input.q().get_den();
    long n = 0;
    BigInt prod = 1;  // phi_exp(0)
    for (;;) {
      BigInt next = prod * (nth_prime(static_cast<std::size_t>(n + 1)) - 1);
      if (BigInt(next * qd) > qn) return n;
      prod = std::move(next);
      ++n;
    }
  }
  // Raw path: accumulate Phi downward-rounded, so the result never
  // undershoots (an overshoot only loosens downstream bounds).
  detail::Real acc(128), term(128);
  long n = 0;
  for (;;) {
    mpfr_set_ui(term.get(), nth_prime(static_cast<std::size_t>(n + 1)) - 1, MPFR_RNDD);
    mpfr_log(term.get(), term.get(), MPFR_RNDD);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDD);
    if (mpfr_cmp_d(acc.get(), input.t()) > 0) return n;
    ++n;
  }
}

long phi_inverse_pow(const Rational& T, int deg_E) {
  if (deg_E < 2 || deg_E % 2 != 0) throw std::invalid_argument("deg_E must be a positive even integer");
  if (T < 1) throw std::invalid_argument("phi_inverse_pow requires T >= 1");
  long n = 0;
  BigInt prod = 1;
  for (;;) {
    BigInt next = prod * (nth_prime(static_cast<std::size_t>(n + 1)) - 1);
    BigInt powed;
    mpz_pow_ui(powed.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(deg_E));
    if (BigInt(powed * T.get_den()) > T.get_num()) return n;
    prod = std::move(next);
    ++n;
  }
}

Rational psi_phi_inverse_pow(const Rational& T, int deg_E) {
  return pow_rational(psi(phi_inverse_pow(T, deg_E)), deg_E);
}

}  // namespace brauer
