#pragma once

#include "brauer/rational.hpp"

namespace brauer {

// phi_exp(n) = prod_{i=0}^{n} (p_i - 1), so Phi(n) = log phi_exp(n).
BigInt phi_exp(long n);

// Phi(n) as a double; display/exploration only (the exact object is phi_exp).
double phi(long n);

// Psi(n) = prod_{i=0}^{n+1} p_i / (p_i - 1), n >= -1. Exact.
Rational psi(long n);

// Argument of the pseudoinverse Phi^-1. The exact flavour encodes t = log Q
// for a rational Q >= 1; the raw flavour is a best-effort real t >= 0 whose
// comparisons use a downward-rounded Phi (the result may overshoot, never
// undershoot).
class PhiInput {
 public:
  static PhiInput log_of_rational(Rational q);
  static PhiInput raw_real(double t);

  bool is_exact() const { return exact_; }
  const Rational& q() const { return q_; }
  double t() const { return t_; }

 private:
  PhiInput() = default;
  bool exact_ = false;
  Rational q_;
  double t_ = 0.0;
};

// Phi^-1(t) = max{n >= 0 : Phi(n) <= t}.
long phi_inverse(const PhiInput& input);

// max{n >= 0 : phi_exp(n)^deg_E <= T}, decided in exact integer arithmetic.
// This is Phi^-1(log(T)/deg_E) without ever forming the logarithm.
// Requires T >= 1 and deg_E a positive even integer.
long phi_inverse_pow(const Rational& T, int deg_E);

// Psi(Phi^-1(log(T)/deg_E))^deg_E, exact.
Rational psi_phi_inverse_pow(const Rational& T, int deg_E);

}  // namespace brauer
