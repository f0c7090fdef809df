#pragma once

#include <optional>
#include <vector>

#include "brauer/cmfield.hpp"
#include "brauer/deltabound.hpp"
#include "brauer/rational.hpp"

namespace brauer {

inline constexpr int kDefaultPrecisionBits = 128;

// A certified enclosure of a bound value. Endpoints are exact (dyadic)
// rationals; lower == upper when the value was computed on an exact path.
// Only upper is ever reported as "the bound".
struct Enclosure {
  Rational lower;
  Rational upper;
  bool exact = false;
};

double as_double_upper(const Rational& q);
double as_double_lower(const Rational& q);

// k^2 * M_E^2 * Psi(n)^deg_E * norm_rad_dEF, exact, where n is the largest
// integer with phi_exp(n)^deg_E <= k^2 * M_E^2. Returns 0 when
// k^2 * M_E^2 < 1: then no conjugation-invariant ideal meets the totient
// constraint (even the unit ideal has ratio 1), so the feasible set is empty.
Rational sharp_bound(int k_degree, const CMFieldInvariants& inv);

// Witness n for sharp_bound, or nullopt in the degenerate case above.
std::optional<long> sharp_bound_witness(int k_degree, const CMFieldInvariants& inv);

// 3^deg_E * norm_rad_dEF * (k * M_E)^(2 log2 3). Exact whenever k^2 M_E^2 is
// a power of 2 (the power collapses to an integer power of 3); otherwise an
// outward-rounded enclosure at the requested precision.
Enclosure crude_bound(int k_degree, const CMFieldInvariants& inv,
                      int precision_bits = kDefaultPrecisionBits);

// ((1+delta) Psi(L_delta))^deg_E * norm_rad_dEF * (k M_E)^(2(1 + log2(1+delta))).
// Exact when k^2 M_E^2 is a power of 2 (any rational delta) or when 1+delta
// is a power of 2 (the exponent becomes an integer); otherwise enclosed.
Enclosure delta_bound(int k_degree, const CMFieldInvariants& inv, const Rational& delta,
                      int precision_bits = kDefaultPrecisionBits);

// Certified check of Psi(Phi^-1(t)) <= Psi(L_delta) * (1+delta)^(1 + t/log 2):
// left side exact, right side rounded downward, so `true` is a proof.
bool check_psi_envelope(double t, const Rational& delta,
                        int precision_bits = kDefaultPrecisionBits);

struct DeltaBoundEntry {
  Rational delta;
  long L = -1;        // minimal L_delta used
  Rational psi_L;
  Enclosure value;
};

struct BoundReport {
  int k_degree = 1;
  CMFieldInvariants invariants;
  Rational me2;
  Rational sharp;               // 0 when k^2 M_E^2 < 1
  BigInt sharp_ceil;
  std::optional<long> phi_inv_n;
  Rational psi_value;           // Psi(phi_inv_n), or 0 when degenerate
  Enclosure crude;
  std::vector<DeltaBoundEntry> delta_bounds;
  int precision_bits = kDefaultPrecisionBits;
};

BoundReport bound_report(int k_degree, const CMFieldInvariants& inv,
                         const std::vector<Rational>& deltas,
                         int precision_bits = kDefaultPrecisionBits);

}  // namespace brauer
