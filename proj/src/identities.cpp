#include "windtree/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "windtree/combinatorics.hpp"
#include "windtree/error.hpp"
#include "windtree/parallel.hpp"

namespace windtree {
namespace {

void require_nonnegative(long m) {
  if (m < 0) throw Error(ErrorKind::kDomainViolation, "identities need m >= 0");
}

Rational binomial_ratio_sum(long m, long a_top, long a_shift, long b_top, long b_shift) {
  require_nonnegative(m);
  Rational s;
  for (long k = 0; k <= m; ++k) {
    s += Rational(binomial(a_top, k + a_shift) * binomial(b_top, k + b_shift), binomial(2 * m, 2 * k));
  }
  return s;
}

}  // namespace

Rational s1(long m) { return binomial_ratio_sum(m, m, 0, m, 0); }

Rational s2(long m) { return binomial_ratio_sum(m, m, 0, m, 1); }

Rational s3(long m) { return binomial_ratio_sum(m, m, 0, m + 1, 1); }

Rational s3_factorial_form(long m) {
  require_nonnegative(m);
  Integer s;
  for (long k = 0; k <= m; ++k) {
    const Integer catalan = factorial(2 * k) / (factorial(k) * factorial(k + 1));
    s += catalan * binomial(2 * (m - k), m - k);
  }
  return Rational(s);
}

Integer central_binomial_convolution(long m) {
  require_nonnegative(m);
  Integer s;
  for (long j = 0; j <= m; ++j) s += binomial(2 * j, j) * binomial(2 * m - 2 * j, m - j);
  return s;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

IdentityReport verify_identities(long max_m, int jobs) {
  require_nonnegative(max_m);
  constexpr std::size_t kChecks = 6;
  const std::array<const char*, kChecks> names = {
      "s1_double_factorial", "s1_factorial", "s2", "s3", "pascal_s3_eq_s1_plus_s2", "central_binomial_convolution"};

  std::vector<std::array<bool, kChecks>> ok(static_cast<std::size_t>(max_m + 1));
  parallel_for(ok.size(), jobs, [&](std::size_t i) {
    const long m = static_cast<long>(i);
    const Rational a = s1(m);
    const Rational b = s2(m);
    const Rational c = s3(m);
    const Rational ratio = even_over_odd_double_factorial(m);
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
    const Rational odd(2 * m + 1);
    ok[i] = {a == ratio,
             a == Rational(four_m * factorial(m) * factorial(m), factorial(2 * m)),
             b == odd - ratio,
             c == odd,
             c == a + b,
             central_binomial_convolution(m) == four_m};
  });

  IdentityReport report;
  report.max_m = max_m;
  for (std::size_t j = 0; j < kChecks; ++j) {
    IdentityCheck check{names[j], true, std::nullopt};
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (!ok[i][j]) {
        check.passed = false;
        check.counterexample = static_cast<long>(i);
        break;
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

RecurrenceReport s3_recurrence_check(long max_m) {
  require_nonnegative(max_m);
  const auto residual = [](const std::function<Rational(long)>& s, long m) {
    return Rational(m + 2) * s(m + 1) - Rational(2 * (2 * m + 3)) * s(m);
  };
  RecurrenceReport report;
  report.max_m = max_m;
  for (long m = 0; m <= max_m; ++m) {
    if (report.factorial_form_passed && residual(s3_factorial_form, m) != Rational(0)) {
      report.factorial_form_passed = false;
      report.factorial_form_counterexample = m;
    }
    if (!report.s3_first_nonzero) {
      const Rational r = residual(s3, m);
      if (r != Rational(0)) {
        report.s3_first_nonzero = m;
        report.s3_first_residual = r;
      }
    }
  }
  return report;
}

}  // namespace windtree
