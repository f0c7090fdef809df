#pragma once

#include <cstdint>

#include "brauer/rational.hpp"

namespace brauer {

struct DeltaResult {
  Rational delta;
  // Minimal L >= -1 with p_{L+2}/(p_{L+2} - 1) <= 1 + delta, equivalently
  // p_{L+2} >= 1 + 1/delta; decided by exact rational comparison.
  long L = -1;
  Rational psi_L;
  // Instrumentation: ceiling passed to the sieve (0 when the small-delta
  // fast path answered without sieving) and binary-search iteration count.
  std::uint64_t sieve_limit = 0;
  int search_steps = 0;
};

DeltaResult l_delta(const Rational& delta);

}  // namespace brauer
