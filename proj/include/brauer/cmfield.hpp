#pragma once

#include <cstdint>
#include <string>

#include "brauer/rational.hpp"

namespace brauer {

enum class SplittingType { split, inert, ramified };
const char* to_string(SplittingType t);

// Arithmetic invariants of a CM field E with maximal totally real subfield F,
// sufficient to evaluate M_E^2:
//
//   M_E = (unit_index * h_F / h_E) * 2^(omega_dEF + omega_dEF2) * sqrt(norm_dEF2)
//
// where unit_index = [O_E^x : O_F^x], omega counts distinct prime divisors of
// the relative discriminant d_{E/F} (resp. of its 2-part), and norm_dEF2 and
// norm_rad_dEF are the norms of the 2-part and of the radical of d_{E/F}.
struct CMFieldInvariants {
  int deg_E = 2;  // [E:Q], even
  std::int64_t h_E = 1;
  std::int64_t h_F = 1;
  std::int64_t unit_index = 1;
  int omega_dEF = 0;
  int omega_dEF2 = 0;
  std::int64_t norm_dEF2 = 1;     // supported on primes over 2: a power of 2
  std::int64_t norm_rad_dEF = 1;

  void validate() const;  // throws std::invalid_argument
};

// M_E^2, exact. M_E itself is irrational whenever norm_dEF2 is an odd power
// of 2; use me_upper for display.
Rational me_squared(const CMFieldInvariants& inv);
double me_upper(const CMFieldInvariants& inv);

// An imaginary quadratic field Q(sqrt(d)), d squarefree and negative.
struct IQField {
  std::int64_t d = -1;
  std::int64_t D = -4;  // fundamental discriminant: d if d = 1 mod 4, else 4d
  std::int64_t h = 1;   // class number
  CMFieldInvariants invariants;
};

// Computes all invariants natively. Throws std::invalid_argument when d is
// nonnegative or not squarefree.
IQField iq_field(std::int64_t d);

// Number of reduced binary quadratic forms (a,b,c) of fundamental
// discriminant D < 0: b^2 - 4ac = D, |b| <= a <= c, b >= 0 when |b| = a
// or a = c.
std::int64_t class_number(std::int64_t D);

// Splitting of the rational prime p in Q(sqrt(d)), via the Kronecker symbol
// (D|p): ramified iff p | D, split iff (D|p) = 1, inert otherwise.
SplittingType splitting_type(const IQField& field, std::uint64_t p);

// Invariants file: a JSON object with exactly the keys
//   deg_E, h_E, h_F, unit_index, omega_dEF, omega_dEF2, norm_dEF2, norm_rad_dEF
// all integers. Unknown or missing keys are rejected.
CMFieldInvariants parse_invariants_json(const std::string& text);
CMFieldInvariants load_invariants_json(const std::string& path);

}  // namespace brauer
