#include "brauer/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "real_detail.hpp"

namespace brauer {

namespace {

bool parse_integer(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = BigInt(s, 10);
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  bool ok;
  if (slash == std::string::npos) {
    ok = parse_integer(text, num);
  } else {
    ok = parse_integer(text.substr(0, slash), num) &&
         parse_integer(text.substr(slash + 1), den) && den > 0;
  }
  if (!ok) throw std::invalid_argument("not a rational 'a' or 'a/b': \"" + text + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

BigInt ceil_rational(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

BigInt floor_rational(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (sgn(base) == 0) {
    if (e < 0) throw std::invalid_argument("0 cannot be raised to a negative power");
    return Rational(0);
  }
  const unsigned long mag =
      (e < 0) ? 0UL - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  Rational r = (e > 0) ? Rational(n, d) : Rational(d, n);
  r.canonicalize();
  return r;
}

bool is_power_of_two(const Rational& q, long& m) {
  if (sgn(q) <= 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_popcount(num.get_mpz_t()) != 1 || mpz_popcount(den.get_mpz_t()) != 1) return false;
  const long en = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - 1;
  const long ed = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  m = en - ed;  // canonical form: at most one of num, den exceeds 1
  return true;
}

namespace detail {

Rational to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  BigInt mant;
  const mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  if (e >= 0) {
    BigInt n;
    mpz_mul_2exp(n.get_mpz_t(), mant.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(n);
  }
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, 0);  // d = 1
  mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  Rational q(mant, d);
  q.canonicalize();
  return q;
}

Real from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Real r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
  return r;
}

double rational_to_double(const Rational& q, mpfr_rnd_t rnd) {
  Real r(64);
  mpfr_set_q(r.get(), q.get_mpq_t(), rnd);
  return mpfr_get_d(r.get(), rnd);
}

}  // namespace detail

}  // namespace brauer
