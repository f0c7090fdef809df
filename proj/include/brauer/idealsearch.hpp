#pragma once

#include <cstdint>
#include <vector>

#include "brauer/cmfield.hpp"
#include "brauer/rational.hpp"

namespace brauer {

// Local factor of a conjugation-invariant ideal at the rational prime p:
// (P Pbar)^a when p splits, P^a otherwise.
struct PrimeLocalChoice {
  std::uint64_t p = 2;
  SplittingType stype = SplittingType::ramified;
  int a = 1;
};

// Conjugation-invariant ideal encoded by its per-prime choices (distinct p,
// ascending), with exact totient ratio phi_E(I)/phi_F(J) and norm Nm(I).
struct IdealProfile {
  std::vector<PrimeLocalChoice> choices;
  BigInt ratio = 1;
  BigInt norm = 1;
};

// phi_E(I_p)/phi_F(J_p): split -> p^(a-1)(p-1), inert -> p^(a-1)(p+1),
// ramified -> p^floor(a/2). Requires a >= 1.
BigInt totient_ratio(SplittingType stype, std::uint64_t p, int a);

// Nm(I_p): p^(2a) for split and inert, p^a for ramified. Requires a >= 1.
BigInt local_norm(SplittingType stype, std::uint64_t p, int a);

struct SearchResult {
  // False iff k^2 M_E^2 < 1, in which case not even the unit ideal satisfies
  // the totient constraint and norm is 0.
  bool feasible = false;
  BigInt norm = 0;
  IdealProfile witness;
};

// Exact maximum of Nm(I) over conjugation-invariant ideals I with
// (phi_E(I)/phi_F(J))^2 <= k_degree^2 * M_E^2, by depth-first search over
// candidate primes ascending, pruning on the squared ratio budget. Every
// k-permissible ideal satisfies the constraint, so the result is a valid
// bound on the transcendental Brauer group.
SearchResult max_permissible_norm(const IQField& field, int k_degree);

// Independent validator: exhaustively enumerates every profile with
// norm <= norm_cap and returns the constrained maximum.
SearchResult brute_oracle(const IQField& field, int k_degree, const BigInt& norm_cap);

// Exhaustively checks, over all sets S of primes of O_E with norms <=
// prime_cap and prod_{P in S}(Nm P - 1) <= T, that
//   prod_{P in S} Nm P/(Nm P - 1) <= Psi(Phi^-1(log T / 2))^2,
// in exact rational arithmetic. Returns true iff no counterexample exists.
bool check_bounded_product_lemma(const IQField& field, const BigInt& T,
                                 std::uint64_t prime_cap);

}  // namespace brauer
