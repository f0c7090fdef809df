#include "brauer/bounds.hpp"

#include <stdexcept>

#include "brauer/phipsi.hpp"
#include "real_detail.hpp"

namespace brauer {

double as_double_upper(const Rational& q) { return detail::rational_to_double(q, MPFR_RNDU); }
double as_double_lower(const Rational& q) { return detail::rational_to_double(q, MPFR_RNDD); }

namespace {

using detail::Real;

void check_precision(int bits) {
  if (bits < 8 || bits > 65536) throw std::invalid_argument("precision_bits out of range [8, 65536]");
}

// Outward enclosure of scale * base^expo for exact rationals scale > 0,
// base > 0 and an enclosed exponent [expo_lo, expo_hi]. x^y is monotone in
// each argument separately, so the extrema over the box sit at corners.
Enclosure scaled_pow_enclosure(const Rational& scale, const Rational& base, const Real& expo_lo,
                               const Real& expo_hi, int prec) {
  const Real base_lo = detail::from_rational(base, prec, MPFR_RNDD);
  const Real base_hi = detail::from_rational(base, prec, MPFR_RNDU);

  Real lo(prec), hi(prec), corner(prec);
  bool first = true;
  for (const Real* b : {&base_lo, &base_hi}) {
    for (const Real* e : {&expo_lo, &expo_hi}) {
      mpfr_pow(corner.get(), b->get(), e->get(), MPFR_RNDD);
      if (first || mpfr_cmp(corner.get(), lo.get()) < 0) mpfr_set(lo.get(), corner.get(), MPFR_RNDD);
      mpfr_pow(corner.get(), b->get(), e->get(), MPFR_RNDU);
      if (first || mpfr_cmp(corner.get(), hi.get()) > 0) mpfr_set(hi.get(), corner.get(), MPFR_RNDU);
      first = false;
    }
  }
  const Real scale_lo = detail::from_rational(scale, prec, MPFR_RNDD);
  const Real scale_hi = detail::from_rational(scale, prec, MPFR_RNDU);
  mpfr_mul(lo.get(), lo.get(), scale_lo.get(), MPFR_RNDD);
  mpfr_mul(hi.get(), hi.get(), scale_hi.get(), MPFR_RNDU);

  Enclosure out;
  out.lower = detail::to_rational(lo.get());
  out.upper = detail::to_rational(hi.get());
  out.exact = false;
  return out;
}

Enclosure exact_enclosure(Rational v) {
  Enclosure e;
  e.lower = v;
  e.upper = std::move(v);
  e.exact = true;
  return e;
}

// [log2 q rounded down, log2 q rounded up]
void log2_enclosure(const Rational& q, int prec, Real& lo, Real& hi) {
  const Real q_lo = detail::from_rational(q, prec, MPFR_RNDD);
  const Real q_hi = detail::from_rational(q, prec, MPFR_RNDU);
  mpfr_log2(lo.get(), q_lo.get(), MPFR_RNDD);
  mpfr_log2(hi.get(), q_hi.get(), MPFR_RNDU);
}

Rational k2_me2(int k_degree, const CMFieldInvariants& inv) {
  if (k_degree < 1) throw std::invalid_argument("k_degree must be >= 1");
  Rational t = Rational(static_cast<long>(k_degree) * k_degree) * me_squared(inv);
  t.canonicalize();
  return t;
}

}  // namespace

std::optional<long> sharp_bound_witness(int k_degree, const CMFieldInvariants& inv) {
  const Rational T = k2_me2(k_degree, inv);
  if (T < 1) return std::nullopt;
  return phi_inverse_pow(T, inv.deg_E);
}

Rational sharp_bound(int k_degree, const CMFieldInvariants& inv) {
  const Rational T = k2_me2(k_degree, inv);
  if (T < 1) return Rational(0);  // no ideal meets the totient constraint
  return T * psi_phi_inverse_pow(T, inv.deg_E) * Rational(inv.norm_rad_dEF);
}

Enclosure crude_bound(int k_degree, const CMFieldInvariants& inv, int precision_bits) {
  check_precision(precision_bits);
  const Rational x = k2_me2(k_degree, inv);  // (k M_E)^2
  BigInt three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(inv.deg_E));
  const Rational scale = Rational(three_pow * inv.norm_rad_dEF);

  long m = 0;
  if (is_power_of_two(x, m)) {
    // (2^m)^(log2 3) = 3^m exactly
    return exact_enclosure(scale * pow_rational(Rational(3), m));
  }
  Real y_lo(precision_bits), y_hi(precision_bits);
  log2_enclosure(Rational(3), precision_bits, y_lo, y_hi);
  return scaled_pow_enclosure(scale, x, y_lo, y_hi, precision_bits);
}

Enclosure delta_bound(int k_degree, const CMFieldInvariants& inv, const Rational& delta,
                      int precision_bits) {
  check_precision(precision_bits);
  if (sgn(delta) <= 0) throw std::invalid_argument("delta must be positive");
  const DeltaResult dr = l_delta(delta);
  const Rational one_plus = Rational(1) + delta;
  const Rational scale =
      pow_rational(one_plus * dr.psi_L, inv.deg_E) * Rational(inv.norm_rad_dEF);
  const Rational x = k2_me2(k_degree, inv);  // exponent target: x^(1 + log2(1+delta))

  long m = 0;
  if (is_power_of_two(x, m)) {
    // (2^m)^(1 + log2(1+delta)) = 2^m (1+delta)^m
    return exact_enclosure(scale * pow_rational(Rational(2), m) * pow_rational(one_plus, m));
  }
  if (is_power_of_two(one_plus, m)) {
    // exponent 1 + m is an integer
    return exact_enclosure(scale * pow_rational(x, 1 + m));
  }
  Real y_lo(precision_bits), y_hi(precision_bits);
  log2_enclosure(one_plus, precision_bits, y_lo, y_hi);
  mpfr_add_ui(y_lo.get(), y_lo.get(), 1, MPFR_RNDD);
  mpfr_add_ui(y_hi.get(), y_hi.get(), 1, MPFR_RNDU);
  return scaled_pow_enclosure(scale, x, y_lo, y_hi, precision_bits);
}

bool check_psi_envelope(double t, const Rational& delta, int precision_bits) {
  check_precision(precision_bits);
  // Left side exact; the raw-real pseudoinverse may overshoot, which only
  // makes the check stricter.
  const long n = phi_inverse(PhiInput::raw_real(t));
  const Rational lhs = psi(n);

  const DeltaResult dr = l_delta(delta);

  // Right side Psi(L) * (1+delta)^(1 + t/log 2), rounded downward throughout,
  // so `true` certifies the inequality.
  Real log2_up(precision_bits), expo(precision_bits);
  mpfr_const_log2(log2_up.get(), MPFR_RNDU);
  mpfr_set_d(expo.get(), t, MPFR_RNDD);  // exact: t is the input itself
  mpfr_div(expo.get(), expo.get(), log2_up.get(), MPFR_RNDD);
  mpfr_add_ui(expo.get(), expo.get(), 1, MPFR_RNDD);

  Real rhs(precision_bits);
  const Real base = detail::from_rational(Rational(1) + delta, precision_bits, MPFR_RNDD);
  mpfr_pow(rhs.get(), base.get(), expo.get(), MPFR_RNDD);
  const Real psi_lo = detail::from_rational(dr.psi_L, precision_bits, MPFR_RNDD);
  mpfr_mul(rhs.get(), rhs.get(), psi_lo.get(), MPFR_RNDD);

  return lhs <= detail::to_rational(rhs.get());
}

BoundReport bound_report(int k_degree, const CMFieldInvariants& inv,
                         const std::vector<Rational>& deltas, int precision_bits) {
  BoundReport r;
  r.k_degree = k_degree;
  r.invariants = inv;
  r.me2 = me_squared(inv);
  r.sharp = sharp_bound(k_degree, inv);
  r.sharp_ceil = ceil_rational(r.sharp);
  r.phi_inv_n = sharp_bound_witness(k_degree, inv);
  r.psi_value = r.phi_inv_n ? psi(*r.phi_inv_n) : Rational(0);
  r.crude = crude_bound(k_degree, inv, precision_bits);
  for (const Rational& d : deltas) {
    DeltaBoundEntry entry;
    entry.delta = d;
    const DeltaResult dr = l_delta(d);
    entry.L = dr.L;
    entry.psi_L = dr.psi_L;
    entry.value = delta_bound(k_degree, inv, d, precision_bits);
    r.delta_bounds.push_back(std::move(entry));
  }
  r.precision_bits = precision_bits;
  return r;
}

}  // namespace brauer
