#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace brauer {

// Ascending table of all primes below a fixed ceiling. Immutable after
// construction, safe to share across threads.
class PrimeTable {
 public:
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::uint64_t limit() const { return limit_; }
  // Number of composite-marking operations performed by the sieve; this is
  // the instrumentation counter behind the complexity checks.
  std::uint64_t cells_touched() const { return cells_touched_; }

  std::size_t size() const { return primes_.size(); }
  std::uint64_t operator[](std::size_t i) const { return primes_[i]; }

 private:
  friend PrimeTable sieve(std::uint64_t limit);
  PrimeTable() = default;

  std::vector<std::uint64_t> primes_;
  std::uint64_t limit_ = 0;
  std::uint64_t cells_touched_ = 0;
};

// Sieve of Eratosthenes: all primes < limit. Requires limit >= 2.
PrimeTable sieve(std::uint64_t limit);

// p_n with p_0 = 2, p_1 = 3, ... Backed by a process-wide table that grows
// on demand; safe to call concurrently.
std::uint64_t nth_prime(std::size_t n);

// (n(log n + log log n - 1), n(log n + log log n)) for n >= 6, rounded
// outward, so that lower < p_{n-1} < upper always holds.
std::pair<double, double> prime_bracket(std::uint64_t n);

}  // namespace brauer
