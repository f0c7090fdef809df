#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "brauer/phipsi.hpp"
#include "brauer/primes.hpp"

using namespace brauer;

TEST_CASE("phi_exp values") {
  CHECK(phi_exp(0) == 1);
  CHECK(phi_exp(2) == 8);
  CHECK(phi_exp(3) == 48);
  CHECK(phi(0) == 0.0);
  CHECK(phi(3) == doctest::Approx(std::log(48.0)));
  CHECK_THROWS_AS(phi_exp(-1), std::invalid_argument);
}

TEST_CASE("psi values") {
  CHECK(psi(-1) == Rational(2));
  CHECK(psi(0) == Rational(3));
  CHECK(psi(2) == Rational(35, 8));
  CHECK(psi(3) == Rational(77, 16));
  CHECK_THROWS_AS(psi(-2), std::invalid_argument);
}

TEST_CASE("psi exactness: psi(n) * prod(p_i - 1) = prod p_i") {
  for (long n = -1; n <= 100; ++n) {
    BigInt num = 1, den = 1;
    for (long i = 0; i <= n + 1; ++i) {
      num *= nth_prime(static_cast<std::size_t>(i));
      den *= nth_prime(static_cast<std::size_t>(i)) - 1;
    }
    CHECK(psi(n) * Rational(den) == Rational(num));
  }
}

TEST_CASE("phi_inverse on the exact path") {
  CHECK(phi_inverse(PhiInput::log_of_rational(Rational(1))) == 0);
  CHECK(phi_inverse(PhiInput::log_of_rational(Rational(16))) == 2);
  CHECK(phi_inverse(PhiInput::log_of_rational(Rational(48))) == 3);
  CHECK(phi_inverse(PhiInput::log_of_rational(Rational(47))) == 2);
  CHECK_THROWS_AS(PhiInput::log_of_rational(Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("phi_inverse on the raw path") {
  CHECK(phi_inverse(PhiInput::raw_real(0.0)) == 0);
  CHECK(phi_inverse(PhiInput::raw_real(std::log(16.0))) == 2);
  // Nudging t across Phi(n) by more than the double rounding error but far
  // less than the gap log(p_{n+1} - 1) pins the answer on both sides.
  for (long n = 0; n <= 60; ++n) {
    const double t = phi(n);
    const double slack = std::max(t * 4e-15, 1e-13);
    CHECK(phi_inverse(PhiInput::raw_real(t + slack)) == n);
    if (n >= 1) CHECK(phi_inverse(PhiInput::raw_real(t - slack)) == n - 1);
  }
  CHECK_THROWS_AS(PhiInput::raw_real(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhiInput::raw_real(2e6), std::invalid_argument);
}

TEST_CASE("pseudoinverse identity on 0..200") {
  for (long n = 0; n <= 200; ++n) {
    CHECK(phi_inverse(PhiInput::log_of_rational(Rational(phi_exp(n)))) == n);
  }
}

TEST_CASE("monotonicity") {
  BigInt prev = phi_exp(0);
  Rational prev_psi = psi(-1);
  for (long n = 1; n <= 300; ++n) {
    const BigInt cur = phi_exp(n);
    CHECK(cur > prev);
    prev = cur;
    const Rational ps = psi(n - 1);
    CHECK(ps > prev_psi);
    prev_psi = ps;
  }

  // phi_inverse nondecreasing in Q
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(1, 1'000'000'000L);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng));
    a.canonicalize();
    Rational b(num(rng), den(rng));
    b.canonicalize();
    if (a < 1 || b < 1) continue;
    if (b < a) std::swap(a, b);
    CHECK(phi_inverse(PhiInput::log_of_rational(a)) <= phi_inverse(PhiInput::log_of_rational(b)));
  }
}

TEST_CASE("psi_phi_inverse_pow") {
  CHECK(psi_phi_inverse_pow(Rational(256), 2) == Rational(1225, 64));
  CHECK(psi_phi_inverse_pow(Rational(1), 2) == Rational(9));
  CHECK(psi_phi_inverse_pow(Rational(48 * 48), 2) == Rational(5929, 256));
  CHECK(phi_inverse_pow(Rational(256), 2) == 2);
  CHECK(phi_inverse_pow(Rational(48 * 48), 2) == 3);
  CHECK_THROWS_AS(psi_phi_inverse_pow(Rational(16), 3), std::invalid_argument);
  CHECK_THROWS_AS(psi_phi_inverse_pow(Rational(16), 0), std::invalid_argument);
  CHECK_THROWS_AS(psi_phi_inverse_pow(Rational(1, 2), 2), std::invalid_argument);
}
