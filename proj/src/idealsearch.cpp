#include "brauer/idealsearch.hpp"

#include <algorithm>
#include <stdexcept>

#include "brauer/phipsi.hpp"
#include "brauer/primes.hpp"

namespace brauer {

BigInt totient_ratio(SplittingType stype, std::uint64_t p, int a) {
  if (a < 1) throw std::invalid_argument("exponent a must be >= 1");
  BigInt r;
  switch (stype) {
    case SplittingType::split:
      mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(a - 1));
      return r * (p - 1);
    case SplittingType::inert:
      mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(a - 1));
      return r * (p + 1);
    case SplittingType::ramified:
      mpz_ui_pow_ui(r.get_mpz_t(), p, static_cast<unsigned long>(a / 2));
      return r;
  }
  throw std::logic_error("unreachable");
}

BigInt local_norm(SplittingType stype, std::uint64_t p, int a) {
  if (a < 1) throw std::invalid_argument("exponent a must be >= 1");
  BigInt r;
  const unsigned long e = (stype == SplittingType::ramified) ? a : 2UL * a;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

namespace {

struct Candidate {
  std::uint64_t p;
  SplittingType stype;
  bool mandatory;  // contributes ratio 1 at a = 1: never harmful to include
};

// Squared-ratio budget B = k^2 * M_E^2 as an exact rational; ratio^2 <= B.
struct Budget {
  BigInt num, den;
  bool admits(const BigInt& ratio) const { return BigInt(ratio * ratio * den) <= num; }
};

// Candidate primes in ascending order: every ramified prime (p | D; ratio 1
// at a = 1, so never capped), plus every split/inert p whose minimal ratio
// contribution (p -/+ 1) can still fit the budget on its own.
std::vector<Candidate> candidate_primes(const IQField& field, const Budget& budget) {
  std::vector<Candidate> out;
  std::uint64_t rest = static_cast<std::uint64_t>(-field.D);
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p) continue;
    out.push_back({p, SplittingType::ramified, true});
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) out.push_back({rest, SplittingType::ramified, true});

  BigInt sqrt_cap;  // floor(sqrt(num/den)) + 2 > any admissible single ratio
  mpz_sqrt(sqrt_cap.get_mpz_t(), BigInt(budget.num / budget.den).get_mpz_t());
  sqrt_cap += 2;
  if (!sqrt_cap.fits_ulong_p() || sqrt_cap.get_ui() > 100'000'000) {
    throw std::invalid_argument("ratio budget too large for candidate enumeration");
  }
  const PrimeTable table = sieve(std::max<std::uint64_t>(sqrt_cap.get_ui() + 1, 3));
  for (std::uint64_t p : table.primes()) {
    const SplittingType st = splitting_type(field, p);
    if (st == SplittingType::ramified) continue;  // already listed
    if (budget.admits(totient_ratio(st, p, 1))) {
      out.push_back({p, st, st == SplittingType::split && p == 2});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& x, const Candidate& y) { return x.p < y.p; });
  return out;
}

struct DfsState {
  const std::vector<Candidate>* cands;
  const Budget* budget;
  std::vector<PrimeLocalChoice> stack;
  BigInt best_norm;
  std::vector<PrimeLocalChoice> best_choices;

  void record(const BigInt& norm) {
    if (norm > best_norm) {
      best_norm = norm;
      best_choices = stack;
    }
  }

  void run(std::size_t i, const BigInt& ratio, const BigInt& norm) {
    record(norm);
    if (i >= cands->size()) return;
    const Candidate& c = (*cands)[i];
    if (!c.mandatory) run(i + 1, ratio, norm);  // skip branch
    const int step = (c.stype == SplittingType::ramified) ? 2 : 1;  // even ramified a dominated
    for (int a = 1;; a += step) {
      const BigInt r = ratio * totient_ratio(c.stype, c.p, a);
      if (!budget->admits(r)) break;
      stack.push_back({c.p, c.stype, a});
      run(i + 1, r, BigInt(norm * local_norm(c.stype, c.p, a)));
      stack.pop_back();
    }
  }
};

SearchResult infeasible_result() {
  SearchResult r;
  r.feasible = false;
  r.norm = 0;
  return r;
}

IdealProfile make_profile(std::vector<PrimeLocalChoice> choices) {
  std::sort(choices.begin(), choices.end(),
            [](const PrimeLocalChoice& x, const PrimeLocalChoice& y) { return x.p < y.p; });
  IdealProfile prof;
  prof.ratio = 1;
  prof.norm = 1;
  for (const PrimeLocalChoice& c : choices) {
    prof.ratio *= totient_ratio(c.stype, c.p, c.a);
    prof.norm *= local_norm(c.stype, c.p, c.a);
  }
  prof.choices = std::move(choices);
  return prof;
}

Budget make_budget(const IQField& field, int k_degree) {
  if (k_degree < 1) throw std::invalid_argument("k_degree must be >= 1");
  const Rational me2 = me_squared(field.invariants);
  Rational b = Rational(static_cast<long>(k_degree) * k_degree) * me2;
  b.canonicalize();
  return Budget{b.get_num(), b.get_den()};
}

}  // namespace

SearchResult max_permissible_norm(const IQField& field, int k_degree) {
  const Budget budget = make_budget(field, k_degree);
  if (!budget.admits(1)) return infeasible_result();  // k*M_E < 1: empty feasible set

  DfsState dfs;
  const std::vector<Candidate> cands = candidate_primes(field, budget);
  dfs.cands = &cands;
  dfs.budget = &budget;
  dfs.best_norm = 0;
  dfs.run(0, 1, 1);

  SearchResult res;
  res.feasible = true;
  res.witness = make_profile(dfs.best_choices);
  res.norm = res.witness.norm;
  return res;
}

SearchResult brute_oracle(const IQField& field, int k_degree, const BigInt& norm_cap) {
  if (norm_cap < 1) throw std::invalid_argument("norm_cap must be >= 1");
  const Budget budget = make_budget(field, k_degree);
  if (!budget.admits(1)) return infeasible_result();

  // Candidates: any prime whose minimal local norm fits under the cap.
  std::vector<Candidate> cands;
  if (!norm_cap.fits_ulong_p() || norm_cap.get_ui() > 100'000'000) {
    throw std::invalid_argument("norm_cap too large for the exhaustive oracle");
  }
  const std::uint64_t p_cap = norm_cap.get_ui();
  const PrimeTable table = sieve(std::max<std::uint64_t>(p_cap + 1, 3));
  for (std::uint64_t p : table.primes()) {
    const SplittingType st = splitting_type(field, p);
    if (local_norm(st, p, 1) <= norm_cap) cands.push_back({p, st, false});
  }

  // Exhaustive enumeration of all profiles with norm <= cap; the ratio
  // constraint is only consulted when recording, never to prune.
  BigInt best_norm = 0;
  std::vector<PrimeLocalChoice> best, stack;
  auto rec = [&](auto&& self, std::size_t i, const BigInt& ratio, const BigInt& norm) -> void {
    if (budget.admits(ratio) && norm > best_norm) {
      best_norm = norm;
      best = stack;
    }
    for (std::size_t j = i; j < cands.size(); ++j) {
      const Candidate& c = cands[j];
      for (int a = 1;; ++a) {
        const BigInt n = norm * local_norm(c.stype, c.p, a);
        if (n > norm_cap) break;
        stack.push_back({c.p, c.stype, a});
        self(self, j + 1, BigInt(ratio * totient_ratio(c.stype, c.p, a)), n);
        stack.pop_back();
      }
    }
  };
  rec(rec, 0, 1, 1);

  SearchResult res;
  res.feasible = true;
  res.witness = make_profile(best);
  res.norm = res.witness.norm;
  return res;
}

bool check_bounded_product_lemma(const IQField& field, const BigInt& T, std::uint64_t prime_cap) {
  if (T < 1) throw std::invalid_argument("T must be >= 1");
  // Primes of O_E with norm <= prime_cap: split p yields two primes of norm
  // p, inert p one prime of norm p^2, ramified p one prime of norm p.
  std::vector<BigInt> norms;
  const PrimeTable table = sieve(std::max<std::uint64_t>(prime_cap + 1, 3));
  for (std::uint64_t p : table.primes()) {
    switch (splitting_type(field, p)) {
      case SplittingType::split:
        norms.push_back(p);
        norms.push_back(p);
        break;
      case SplittingType::ramified:
        norms.push_back(p);
        break;
      case SplittingType::inert:
        if (p <= prime_cap / p) norms.push_back(BigInt(p) * p);
        break;
    }
  }

  const Rational bound = psi_phi_inverse_pow(Rational(T), 2);
  bool ok = true;
  auto rec = [&](auto&& self, std::size_t i, const BigInt& prod_m1, const Rational& lhs) -> void {
    if (!ok) return;
    if (lhs > bound) {
      ok = false;
      return;
    }
    for (std::size_t j = i; j < norms.size(); ++j) {
      const BigInt next = prod_m1 * (norms[j] - 1);
      if (next > T) continue;
      Rational factor(norms[j], norms[j] - 1);
      factor.canonicalize();
      self(self, j + 1, next, Rational(lhs * factor));
    }
  };
  rec(rec, 0, 1, Rational(1));
  return ok;
}

}  // namespace brauer
