#include "subsums/halfgamma.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace subsums {

namespace {

// Gamma(m + 1/2) = (2m)! / (4^m m!) * sqrt(pi)
Rational half_gamma_coeff(int m) {
  Integer two_m_fact, m_fact, four_pow;
  mpz_fac_ui(two_m_fact.get_mpz_t(), 2 * static_cast<unsigned long>(m));
  mpz_fac_ui(m_fact.get_mpz_t(), static_cast<unsigned long>(m));
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(m));
  Rational r(two_m_fact, four_pow * m_fact);
  r.canonicalize();
  return r;
}

// lo <= coeff*sqrt(pi) <= hi at the working precision
void gamma_bounds(const HalfGamma& g, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
  mpfr_t pi, sq;
  mpfr_init2(pi, prec);
  mpfr_init2(sq, prec);

  mpfr_const_pi(pi, MPFR_RNDD);
  mpfr_sqrt(sq, pi, MPFR_RNDD);
  mpfr_mul_q(lo, sq, g.sqrtpi_coeff.get_mpq_t(), MPFR_RNDD);

  mpfr_const_pi(pi, MPFR_RNDU);
  mpfr_sqrt(sq, pi, MPFR_RNDU);
  mpfr_mul_q(hi, sq, g.sqrtpi_coeff.get_mpq_t(), MPFR_RNDU);

  mpfr_clear(pi);
  mpfr_clear(sq);
}

Integer floor_of(mpfr_t v) {
  mpfr_floor(v, v);
  Integer z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDN);
  return z;
}

// floor(x / Gamma) for odd n: refine directed-rounding bounds until the
// floors agree. The quotient is irrational for x > 0, so they must.
Integer refine_floor_div(const HalfGamma& g, const Integer& x) {
  size_t xbits = mpz_sizeinbase(x.get_mpz_t(), 2);
  mpfr_prec_t prec = std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(xbits + 64));
  for (; prec <= (1 << 22); prec *= 2) {
    mpfr_t lo, hi, qlo, qhi, xv;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(qlo, prec);
    mpfr_init2(qhi, prec);
    mpfr_init2(xv, prec);
    gamma_bounds(g, prec, lo, hi);
    mpfr_set_z(xv, x.get_mpz_t(), MPFR_RNDN);  // exact: prec > bits(x)
    mpfr_div(qlo, xv, hi, MPFR_RNDD);
    mpfr_div(qhi, xv, lo, MPFR_RNDU);
    Integer flo = floor_of(qlo);
    Integer fhi = floor_of(qhi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(qlo);
    mpfr_clear(qhi);
    mpfr_clear(xv);
    if (flo == fhi) return flo;
  }
  throw std::logic_error("floor_quotient: interval refinement did not converge");
}

Integer refine_floor_mul(const HalfGamma& g, long scale, const Rational& offset);

// value in tenths under the published one-decimal convention: truncate
// below one, round half away otherwise
Integer table_tenths(const HalfGamma& g) {
  if (g.exact) return g.integer_value * 10;
  mpfr_t lo, hi;
  mpfr_init2(lo, 128);
  mpfr_init2(hi, 128);
  gamma_bounds(g, 128, lo, hi);
  bool below_one = mpfr_cmp_ui(hi, 1) < 0;  // never straddles: value irrational
  mpfr_clear(lo);
  mpfr_clear(hi);
  return refine_floor_mul(g, 10, below_one ? Rational(0) : Rational(1, 2));
}

// floor(scale*Gamma + offset) for odd n; the scaled value is irrational.
Integer refine_floor_mul(const HalfGamma& g, long scale, const Rational& offset) {
  for (mpfr_prec_t prec = 128; prec <= (1 << 22); prec *= 2) {
    mpfr_t lo, hi;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    gamma_bounds(g, prec, lo, hi);
    mpfr_mul_si(lo, lo, scale, MPFR_RNDD);
    mpfr_mul_si(hi, hi, scale, MPFR_RNDU);
    mpfr_add_q(lo, lo, offset.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(hi, hi, offset.get_mpq_t(), MPFR_RNDU);
    Integer flo = floor_of(lo);
    Integer fhi = floor_of(hi);
    mpfr_clear(lo);
    mpfr_clear(hi);
    if (flo == fhi) return flo;
  }
  throw std::logic_error("gamma floor: interval refinement did not converge");
}

}  // namespace

HalfGamma gamma_half_factorial(int n) {
  if (n < 1) throw std::invalid_argument("gamma_half_factorial: n must be >= 1");
  HalfGamma g;
  g.n = n;
  if (n % 2 == 0) {
    g.exact = true;
    mpz_fac_ui(g.integer_value.get_mpz_t(), static_cast<unsigned long>(n / 2));
  } else {
    g.exact = false;
    g.sqrtpi_coeff = half_gamma_coeff((n + 1) / 2);
  }
  return g;
}

std::string gamma_decimal(const HalfGamma& g, int decimals) {
  if (g.exact) {
    std::string s = g.integer_value.get_str() + ".";
    s.append(static_cast<size_t>(decimals), '0');
    return s;
  }
  mpfr_t pi, val;
  mpfr_init2(pi, 512);
  mpfr_init2(val, 512);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_sqrt(val, pi, MPFR_RNDN);
  mpfr_mul_q(val, val, g.sqrtpi_coeff.get_mpq_t(), MPFR_RNDN);
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rf", decimals, val);
  mpfr_clear(pi);
  mpfr_clear(val);
  return buf;
}

std::string gamma_table_one_decimal(const HalfGamma& g) {
  Integer tenths = table_tenths(g);
  Integer ip = tenths / 10;
  Integer fp = tenths % 10;
  return ip.get_str() + "." + fp.get_str();
}

Integer floor_quotient(const Integer& x, const HalfGamma& g) {
  if (x < 0) throw std::invalid_argument("floor_quotient: negative numerator");
  if (x == 0) return Integer(0);
  if (g.exact) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), g.integer_value.get_mpz_t());
    return q;
  }
  return refine_floor_div(g, x);
}

std::string ratio_decimal(const Integer& u, const HalfGamma& g, int decimals) {
  if (g.exact) {
    Rational r(u, g.integer_value);
    r.canonicalize();
    return rational_decimal(r, decimals);
  }
  mpfr_t pi, val, uz;
  mpfr_init2(pi, 512);
  mpfr_init2(val, 512);
  mpfr_init2(uz, 512);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_sqrt(val, pi, MPFR_RNDN);
  mpfr_mul_q(val, val, g.sqrtpi_coeff.get_mpq_t(), MPFR_RNDN);
  mpfr_set_z(uz, u.get_mpz_t(), MPFR_RNDN);
  mpfr_div(val, uz, val, MPFR_RNDN);
  mpfr_clear(uz);
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rf", decimals, val);
  mpfr_clear(pi);
  mpfr_clear(val);
  return buf;
}

std::string ratio_table(const Integer& u, const HalfGamma& g) {
  Integer tenths = table_tenths(g);
  Integer hundredths;
  mpz_fdiv_q(hundredths.get_mpz_t(), Integer(u * 1000).get_mpz_t(), tenths.get_mpz_t());
  Integer ip = hundredths / 100;
  Integer fp = hundredths % 100;
  std::string f = fp.get_str();
  if (f.size() < 2) f.insert(0, 2 - f.size(), '0');
  return ip.get_str() + "." + f;
}

std::string percent_table_string(const Rational& v) {
  // round 100*v to 13 decimals, half to even; print 14 with trailing 0
  Integer pow13 = 1;
  for (int i = 0; i < 13; ++i) pow13 *= 10;
  Rational scaled = v * 100 * Rational(pow13);
  Integer whole = scaled.get_num() / scaled.get_den();  // truncation; v >= 0 here
  Rational frac = scaled - Rational(whole);
  Rational half(1, 2);
  if (frac > half || (frac == half && mpz_odd_p(whole.get_mpz_t()))) whole += 1;
  std::string digits = whole.get_str();
  if (digits.size() < 14) digits.insert(0, 14 - digits.size(), '0');
  std::string ip = digits.substr(0, digits.size() - 13);
  std::string fp = digits.substr(digits.size() - 13);
  return ip + "." + fp + "0";
}

std::string rational_decimal(const Rational& v, int decimals) {
  bool neg = v < 0;
  Rational a = neg ? Rational(-v) : v;
  Integer ip = a.get_num() / a.get_den();
  Rational rem = a - Rational(ip);
  std::string digits;
  for (int i = 0; i < decimals; ++i) {
    rem *= 10;
    Integer d = rem.get_num() / rem.get_den();
    digits += d.get_str();
    rem -= Rational(d);
  }
  std::string out = ip.get_str();
  if (decimals > 0) out += "." + digits;
  if (neg && (ip != 0 || digits.find_first_not_of('0') != std::string::npos)) out.insert(0, "-");
  return out;
}

}  // namespace subsums
