#include "brauer/primes.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace brauer {

PrimeTable sieve(std::uint64_t limit) {
  if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
  std::vector<std::uint8_t> composite(limit, 0);
  std::uint64_t cells = 0;
  for (std::uint64_t p = 2; p <= (limit - 1) / p; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m < limit; m += p) {
      composite[m] = 1;
      ++cells;
    }
  }
  PrimeTable t;
  t.limit_ = limit;
  t.cells_touched_ = cells;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (!composite[i]) t.primes_.push_back(i);
  }
  return t;
}

namespace {

// n * (log n + log log n [- 1]) with all operations rounded in direction rnd.
double bracket_endpoint(std::uint64_t n, bool subtract_one, mpfr_rnd_t rnd) {
  mpfr_t x, l, ll;
  mpfr_inits2(96, x, l, ll, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(x, n, rnd);
  mpfr_log(l, x, rnd);    // log n
  mpfr_log(ll, l, rnd);   // log log n; log is increasing, so one direction suffices
  mpfr_add(l, l, ll, rnd);
  if (subtract_one) mpfr_sub_ui(l, l, 1, rnd);
  mpfr_mul_ui(l, l, n, rnd);
  const double out = mpfr_get_d(l, rnd);
  mpfr_clears(x, l, ll, static_cast<mpfr_ptr>(nullptr));
  return out;
}

std::mutex g_prime_mutex;
std::vector<std::uint64_t> g_primes;
std::uint64_t g_prime_limit = 0;

void grow_prime_cache(std::size_t n) {
  // Ceiling certain to cover index n: for n >= 5 the (n+1)-th prime p_n is
  // below (n+1)(log(n+1) + log log(n+1)). Grow geometrically so ascending
  // scans re-sieve O(log n) times.
  std::uint64_t limit = 13;
  if (n >= 5) {
    const double hi = bracket_endpoint(n + 1, false, MPFR_RNDU);
    limit = static_cast<std::uint64_t>(std::floor(hi)) + 2;
  }
  limit = std::max(limit, 2 * g_prime_limit);
  PrimeTable t = sieve(limit);
  g_primes = t.primes();
  g_prime_limit = limit;
}

}  // namespace

std::uint64_t nth_prime(std::size_t n) {
  std::lock_guard<std::mutex> lock(g_prime_mutex);
  if (n >= g_primes.size()) grow_prime_cache(n);
  return g_primes[n];
}

std::pair<double, double> prime_bracket(std::uint64_t n) {
  if (n < 6) throw std::invalid_argument("prime_bracket requires n >= 6");
  return {bracket_endpoint(n, true, MPFR_RNDD), bracket_endpoint(n, false, MPFR_RNDU)};
}

}  // namespace brauer
