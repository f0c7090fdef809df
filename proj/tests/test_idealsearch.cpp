#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "brauer/bounds.hpp"
#include "brauer/idealsearch.hpp"
#include "brauer/primes.hpp"

using namespace brauer;

namespace {

// Totient of the local ideal via the per-prime totient formula, routed
// through the primes of O_E explicitly (independent of the closed forms).
BigInt totient_of_local_ideal(SplittingType st, std::uint64_t p, int a) {
  auto totient_prime_power = [](const BigInt& nm, int e) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), nm.get_mpz_t(), static_cast<unsigned long>(e - 1));
    return BigInt(t * (nm - 1));
  };
  switch (st) {
    case SplittingType::split:  // two primes of norm p, each to the a-th power
      return totient_prime_power(BigInt(p), a) * totient_prime_power(BigInt(p), a);
    case SplittingType::inert:  // one prime of norm p^2
      return totient_prime_power(BigInt(p) * p, a);
    case SplittingType::ramified:  // one prime of norm p
      return totient_prime_power(BigInt(p), a);
  }
  throw std::logic_error("unreachable");
}

BigInt totient_of_contracted_ideal(SplittingType st, std::uint64_t p, int a) {
  const int e = (st == SplittingType::ramified) ? 2 : 1;
  const int contracted = (a + e - 1) / e;  // ceil(a / e)
  BigInt t;
  mpz_pow_ui(t.get_mpz_t(), BigInt(p).get_mpz_t(), static_cast<unsigned long>(contracted - 1));
  return BigInt(t * (p - 1));
}

bool witness_has_prime(const IdealProfile& w, std::uint64_t p) {
  return std::any_of(w.choices.begin(), w.choices.end(),
                     [p](const PrimeLocalChoice& c) { return c.p == p; });
}

}  // namespace

TEST_CASE("totient_ratio closed forms") {
  CHECK(totient_ratio(SplittingType::ramified, 2, 1) == 1);
  CHECK(totient_ratio(SplittingType::split, 5, 1) == 4);
  CHECK(totient_ratio(SplittingType::inert, 3, 2) == 12);
  CHECK_THROWS_AS(totient_ratio(SplittingType::split, 5, 0), std::invalid_argument);
}

TEST_CASE("totient_ratio agrees with the explicit totient quotient") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> pick_type(0, 2);
  std::uniform_int_distribution<int> pick_a(1, 5);
  std::uniform_int_distribution<std::size_t> pick_p(0, 24);  // p <= 97
  for (int i = 0; i < 200; ++i) {
    const SplittingType st = static_cast<SplittingType>(pick_type(rng));
    const std::uint64_t p = nth_prime(pick_p(rng));
    const int a = pick_a(rng);
    const BigInt num = totient_of_local_ideal(st, p, a);
    const BigInt den = totient_of_contracted_ideal(st, p, a);
    CHECK(num % den == 0);
    CHECK(totient_ratio(st, p, a) == num / den);
  }
}

TEST_CASE("local_norm") {
  CHECK(local_norm(SplittingType::split, 5, 1) == 25);
  CHECK(local_norm(SplittingType::ramified, 2, 3) == 8);
  CHECK(local_norm(SplittingType::inert, 3, 1) == 9);
  CHECK_THROWS_AS(local_norm(SplittingType::inert, 3, 0), std::invalid_argument);
}

TEST_CASE("max_permissible_norm on Q(i)") {
  const IQField qi = iq_field(-1);
  const SearchResult r = max_permissible_norm(qi, 1);
  REQUIRE(r.feasible);
  CHECK(r.norm == 800);  // {2^5 ramified, 5 split}: ratio 4*4 = 16, 16^2 = 256
  CHECK(r.witness.ratio == 16);
  CHECK(witness_has_prime(r.witness, 2));
  CHECK(r.norm % qi.invariants.norm_rad_dEF == 0);
  CHECK(Rational(r.norm) <= sharp_bound(1, qi.invariants));
}

TEST_CASE("max_permissible_norm examples") {
  CHECK(max_permissible_norm(iq_field(-3), 1).norm == 147);
  CHECK(max_permissible_norm(iq_field(-5), 1).norm == 1440);
  CHECK(max_permissible_norm(iq_field(-7), 1).norm == 112);  // uses split 2 at a = 2
  CHECK(Rational(max_permissible_norm(iq_field(-5), 1).norm) <=
        sharp_bound(1, iq_field(-5).invariants));
}

TEST_CASE("brute_oracle agrees with the search") {
  const IQField qi = iq_field(-1);
  const SearchResult brute = brute_oracle(qi, 1, BigInt(10'000));
  CHECK(brute.norm == 800);
  CHECK(brute.norm == max_permissible_norm(qi, 1).norm);

  const SearchResult tiny = brute_oracle(qi, 1, BigInt(1));
  CHECK(tiny.feasible);
  CHECK(tiny.norm == 1);
  CHECK(tiny.witness.choices.empty());

  const IQField d3 = iq_field(-3);
  CHECK(brute_oracle(d3, 1, BigInt(10'000)).norm == max_permissible_norm(d3, 1).norm);

  CHECK_THROWS_AS(brute_oracle(qi, 1, BigInt(0)), std::invalid_argument);
}

TEST_CASE("degenerate budget: both routes report infeasible") {
  const IQField d23 = iq_field(-23);  // M_E = 2/3
  const SearchResult dfs = max_permissible_norm(d23, 1);
  const SearchResult brute = brute_oracle(d23, 1, BigInt(100));
  CHECK(!dfs.feasible);
  CHECK(!brute.feasible);
  CHECK(dfs.norm == 0);
  CHECK(brute.norm == 0);
  CHECK(max_permissible_norm(d23, 2).feasible);
}

TEST_CASE("dominance and free inclusion over a small grid") {
  for (std::int64_t d = -1; d >= -30; --d) {
    IQField field;
    try {
      field = iq_field(d);
    } catch (const std::invalid_argument&) {
      continue;
    }
    for (int k : {1, 2}) {
      const SearchResult r = max_permissible_norm(field, k);
      const Rational sharp = sharp_bound(k, field.invariants);
      if (!r.feasible) {
        CHECK(sharp == 0);
        continue;
      }
      CHECK(Rational(r.norm) <= sharp);
      CHECK(brute_oracle(field, k, BigInt(2 * r.norm + 1)).norm == r.norm);
      // every ramified prime participates and the radical divides the norm
      std::uint64_t rest = static_cast<std::uint64_t>(-field.D);
      for (std::uint64_t p = 2; p <= rest / p; ++p) {
        if (rest % p == 0) {
          CHECK(witness_has_prime(r.witness, p));
          while (rest % p == 0) rest /= p;
        }
      }
      if (rest > 1) CHECK(witness_has_prime(r.witness, rest));
      CHECK(r.norm % field.invariants.norm_rad_dEF == 0);
      // ramified exponents odd by dominance
      for (const PrimeLocalChoice& c : r.witness.choices) {
        if (c.stype == SplittingType::ramified) CHECK(c.a % 2 == 1);
      }
    }
  }
}

TEST_CASE("bounded-product lemma checks") {
  CHECK(check_bounded_product_lemma(iq_field(-1), BigInt(16), 50));
  CHECK(check_bounded_product_lemma(iq_field(-1), BigInt(1), 50));
  CHECK(check_bounded_product_lemma(iq_field(-7), BigInt(64), 100));
  CHECK_THROWS_AS(check_bounded_product_lemma(iq_field(-1), BigInt(0), 50),
                  std::invalid_argument);
}
