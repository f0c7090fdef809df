#include "brauer/deltabound.hpp"

#include <cmath>
#include <stdexcept>

#include "brauer/phipsi.hpp"
#include "brauer/primes.hpp"
#include "real_detail.hpp"

namespace brauer {

namespace {

// Exact test p >= 1 + 1/delta, i.e. a(p - 1) >= b for delta = a/b.
bool prime_admissible(std::uint64_t p, const BigInt& a, const BigInt& b) {
  return BigInt(a * (p - 1)) >= b;
}

}  // namespace

DeltaResult l_delta(const Rational& delta) {
  if (sgn(delta) <= 0) throw std::invalid_argument("l_delta requires delta > 0");
  const BigInt& a = delta.get_num();
  const BigInt& b = delta.get_den();

  DeltaResult res;
  res.delta = delta;

  // 1 + 1/delta <= 3 already admits p_1 = 3, so L = -1 without any sieving.
  if (prime_admissible(3, a, b)) {
    res.L = -1;
    res.psi_L = psi(-1);
    res.sieve_limit = 0;
    res.search_steps = 0;
    return res;
  }

  // Threshold 1 + 1/delta, rounded up so that bracket-lower >= threshold_up
  // certifies p_{n+2} >= 1 + 1/delta.
  Rational threshold = Rational(a + b, a);
  threshold.canonicalize();
  const double threshold_up = detail::rational_to_double(threshold, MPFR_RNDU);

  // Smallest n >= 6 whose bracket already certifies admissibility of p_{n+2};
  // gallop upward, then bisect.
  std::uint64_t hi = 6;
  while (prime_bracket(hi + 3).first < threshold_up) {
    hi *= 2;
    if (hi > (std::uint64_t{1} << 33)) {
      throw std::invalid_argument("delta too small: the sieve ceiling would be impractical");
    }
  }
  std::uint64_t lo = hi / 2 < 6 ? 6 : hi / 2;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (prime_bracket(mid + 3).first >= threshold_up) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::uint64_t L0 = hi;

  res.sieve_limit = static_cast<std::uint64_t>(std::floor(prime_bracket(L0 + 3).second)) + 1;
  const PrimeTable table = sieve(res.sieve_limit);
  if (table.size() < L0 + 3) throw std::logic_error("sieve ceiling failed to cover the bracket");

  // Binary search for the first admissible index in [1, L0 + 2]; the top
  // index is admissible by the bracket guarantee.
  std::size_t first = 1, last = static_cast<std::size_t>(L0) + 2;
  int steps = 0;
  while (first < last) {
    const std::size_t mid = first + (last - first) / 2;
    ++steps;
    if (prime_admissible(table[mid], a, b)) {
      last = mid;
    } else {
      first = mid + 1;
    }
  }
  res.L = static_cast<long>(first) - 2;
  res.psi_L = psi(res.L);
  res.search_steps = steps;
  return res;
}

}  // namespace brauer
