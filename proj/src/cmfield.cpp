#include "brauer/cmfield.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "real_detail.hpp"

namespace brauer {

const char* to_string(SplittingType t) {
  switch (t) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

void CMFieldInvariants::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid invariants: " + msg); };
  if (deg_E < 2 || deg_E % 2 != 0) fail("deg_E must be a positive even integer");
  if (deg_E > 10000) fail("deg_E out of range");
  if (h_E < 1 || h_F < 1 || unit_index < 1) fail("h_E, h_F, unit_index must be positive");
  if (omega_dEF < 0 || omega_dEF2 < 0) fail("omega counts must be nonnegative");
  if (omega_dEF > 10000 || omega_dEF2 > 10000) fail("omega counts out of range");
  if (omega_dEF2 > omega_dEF) fail("omega_dEF2 must not exceed omega_dEF");
  if (norm_dEF2 < 1 || (norm_dEF2 & (norm_dEF2 - 1)) != 0) fail("norm_dEF2 must be a power of 2");
  if ((omega_dEF2 == 0) != (norm_dEF2 == 1)) fail("omega_dEF2 and norm_dEF2 disagree on triviality of the 2-part");
  if (norm_rad_dEF < 1) fail("norm_rad_dEF must be positive");
}

Rational me_squared(const CMFieldInvariants& inv) {
  inv.validate();
  Rational index_part(BigInt(inv.unit_index) * inv.h_F, BigInt(inv.h_E));
  index_part.canonicalize();
  BigInt four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4,
                static_cast<unsigned long>(inv.omega_dEF + inv.omega_dEF2));
  return index_part * index_part * Rational(four_pow * inv.norm_dEF2);
}

double me_upper(const CMFieldInvariants& inv) {
  const Rational m2 = me_squared(inv);
  detail::Real r(64);
  mpfr_set_q(r.get(), m2.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return mpfr_get_d(r.get(), MPFR_RNDU);
}

namespace {

// Distinct prime factors of n > 0 by trial division; returns false when n is
// not squarefree.
bool factor_squarefree(std::uint64_t n, std::vector<std::uint64_t>& primes_out) {
  primes_out.clear();
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return false;
    primes_out.push_back(p);
  }
  if (n > 1) primes_out.push_back(n);
  return true;
}

int mod4(std::int64_t v) { return static_cast<int>(((v % 4) + 4) % 4); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

bool is_fundamental(std::int64_t D) {
  std::vector<std::uint64_t> fs;
  if (mod4(D) == 1) {
    return factor_squarefree(static_cast<std::uint64_t>(-D), fs);
  }
  if (mod4(D) == 0) {
    const std::int64_t m = D / 4;
    const int r = mod4(m);
    return (r == 2 || r == 3) && factor_squarefree(static_cast<std::uint64_t>(-m), fs);
  }
  return false;
}

}  // namespace

IQField iq_field(std::int64_t d) {
  if (d >= 0) throw std::invalid_argument("d must be negative");
  std::vector<std::uint64_t> primes;
  if (!factor_squarefree(static_cast<std::uint64_t>(-d), primes)) {
    throw std::invalid_argument("d must be squarefree");
  }
  const int omega = static_cast<int>(primes.size());

  IQField f;
  f.d = d;
  f.D = (mod4(d) == 1) ? d : 4 * d;
  f.h = class_number(f.D);

  CMFieldInvariants& inv = f.invariants;
  inv.deg_E = 2;
  inv.h_E = f.h;
  inv.h_F = 1;
  inv.unit_index = (d == -1) ? 2 : (d == -3 ? 3 : 1);
  switch (mod4(d)) {
    case 1:
      inv.omega_dEF = omega;
      inv.omega_dEF2 = 0;
      inv.norm_dEF2 = 1;
      inv.norm_rad_dEF = -d;
      break;
    case 2:
      inv.omega_dEF = omega;
      inv.omega_dEF2 = 1;
      inv.norm_dEF2 = 8;
      inv.norm_rad_dEF = -d;
      break;
    default:  // d = 3 mod 4: the prime 2 ramifies and joins the radical
      inv.omega_dEF = omega + 1;
      inv.omega_dEF2 = 1;
      inv.norm_dEF2 = 4;
      inv.norm_rad_dEF = -2 * d;
      break;
  }
  inv.validate();
  return f;
}

std::int64_t class_number(std::int64_t D) {
  if (D >= 0 || mod4(D) > 1) throw std::invalid_argument("D must be a negative discriminant");
  if (!is_fundamental(D)) throw std::invalid_argument("D must be fundamental");
  // Count reduced forms (a, b, c): for 0 <= b <= a <= c with b^2 - 4ac = D,
  // the pair (a, -b, c) is also reduced exactly when 0 < b < a < c.
  std::int64_t h = 0;
  const std::int64_t amax = static_cast<std::int64_t>(std::sqrt(static_cast<double>(-D) / 3.0)) + 1;
  for (std::int64_t a = 1; a <= amax; ++a) {
    if (3 * a * a > -D) break;
    for (std::int64_t b = (D % 2 == 0) ? 0 : 1; b <= a; b += 2) {
      const std::int64_t num = b * b - D;
      if (num % (4 * a)) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      h += (b > 0 && b < a && a < c) ? 2 : 1;
    }
  }
  return h;
}

SplittingType splitting_type(const IQField& field, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  const std::int64_t D = field.D;
  if (p == 2) {
    if (D % 2 == 0) return SplittingType::ramified;
    const int r = static_cast<int>(((D % 8) + 8) % 8);
    return r == 1 ? SplittingType::split : SplittingType::inert;
  }
  const std::uint64_t r =
      static_cast<std::uint64_t>(((D % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                 static_cast<std::int64_t>(p));
  if (r == 0) return SplittingType::ramified;
  return powmod(r, (p - 1) / 2, p) == 1 ? SplittingType::split : SplittingType::inert;
}

namespace {

std::int64_t take_int_key(nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("invariants file: missing key ") + key);
  if (!it->is_number_integer()) {
    throw std::invalid_argument(std::string("invariants file: key ") + key + " must be an integer");
  }
  const std::int64_t v = it->get<std::int64_t>();
  j.erase(it);
  return v;
}

}  // namespace

CMFieldInvariants parse_invariants_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("invariants file: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("invariants file: top level must be a JSON object");

  CMFieldInvariants inv;
  inv.deg_E = static_cast<int>(take_int_key(j, "deg_E"));
  inv.h_E = take_int_key(j, "h_E");
  inv.h_F = take_int_key(j, "h_F");
  inv.unit_index = take_int_key(j, "unit_index");
  inv.omega_dEF = static_cast<int>(take_int_key(j, "omega_dEF"));
  inv.omega_dEF2 = static_cast<int>(take_int_key(j, "omega_dEF2"));
  inv.norm_dEF2 = take_int_key(j, "norm_dEF2");
  inv.norm_rad_dEF = take_int_key(j, "norm_rad_dEF");
  if (!j.empty()) {
    throw std::invalid_argument("invariants file: unknown key " + j.begin().key());
  }
  inv.validate();
  return inv;
}

CMFieldInvariants load_invariants_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open invariants file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_invariants_json(ss.str());
}

}  // namespace brauer
