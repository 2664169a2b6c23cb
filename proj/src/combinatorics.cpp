#include "windtree/combinatorics.hpp"

#include <string>

#include "windtree/error.hpp"

namespace windtree {
namespace {

// floor(pi * 10^120)
const char* const kPiDigits =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286"
    "208998628034825342117067982148086513282306647";

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace

Integer double_factorial(long n) {
  if (n < 0) throw Error(ErrorKind::kDomainViolation, "double factorial of a negative number");
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer factorial(long n) {
  if (n < 0) throw Error(ErrorKind::kDomainViolation, "factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw Error(ErrorKind::kDomainViolation, "binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational delta_closed_form(long m) {
  if (m < 1) throw Error(ErrorKind::kDomainViolation, "delta(m) needs m >= 1");
  return Rational(double_factorial(2 * m), double_factorial(2 * m + 1));
}

Rational even_over_odd_double_factorial(long m) {
  if (m < 0) throw Error(ErrorKind::kDomainViolation, "negative m");
  if (m == 0) return Rational(1);
  return Rational(double_factorial(2 * m), double_factorial(2 * m - 1));
}

AsymptoticComparison delta_asymptotic(long m) {
  AsymptoticComparison out;
  out.m = m;
  out.delta = delta_closed_form(m);

  const Integer pi_scaled(kPiDigits);  // pi * 10^120
  const Integer scale = pow10(kAsymptoticDigits);
  const Integer pi_scale = pow10(120);
  const Integer four_m = Integer(4) * m;

  // (sqrt(pi)/(2 sqrt m))^2 = pi / (4m)
  const Integer lead_sq = pi_scaled * scale * scale / (four_m * pi_scale);
  out.leading_term = Rational(isqrt(lead_sq), scale);

  // (delta * 2 sqrt(m) / sqrt(pi))^2 = 4 m delta^2 / pi
  const Integer a = out.delta.numerator();
  const Integer b = out.delta.denominator();
  const Integer ratio_sq = four_m * a * a * scale * scale * pi_scale / (b * b * pi_scaled);
  const Integer ratio = isqrt(ratio_sq);
  out.ratio = Rational(ratio, scale);
  out.deviation = abs(out.ratio - Rational(1));
  return out;
}

}  // namespace windtree
