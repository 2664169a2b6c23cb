#pragma once

#include <optional>
#include <string>
#include <vector>

#include "windtree/rational.hpp"

namespace windtree {

/// sum_k C(m,k)^2 / C(2m,2k)
Rational s1(long m);
/// sum_k C(m,k) C(m,k+1) / C(2m,2k)
Rational s2(long m);
/// sum_k C(m,k) C(m+1,k+1) / C(2m,2k)
Rational s3(long m);
/// sum_k (2k)! / (k! (k+1)!) * (2m-2k)! / ((m-k)!)^2, which equals C(2m+1, m).
Rational s3_factorial_form(long m);
/// sum_j C(2j,j) C(2m-2j,m-j)
Integer central_binomial_convolution(long m);

struct IdentityCheck {
  std::string name;
  bool passed = true;
  std::optional<long> counterexample;
};

struct IdentityReport {
  long max_m = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Checks for 0 <= m <= max_m:
///   s1 = (2m)!!/(2m-1)!!,  s1 = 4^m (m!)^2/(2m)!,  s2 = 2m+1 - (2m)!!/(2m-1)!!,
///   s3 = 2m+1,  s3 = s1 + s2,  sum_j C(2j,j) C(2m-2j,m-j) = 4^m.
IdentityReport verify_identities(long max_m, int jobs = 1);

struct RecurrenceReport {
  long max_m = 0;
  /// (m+2) s(m+1) - 2(2m+3) s(m) over the factorial form; all zero when the check passes.
  bool factorial_form_passed = true;
  std::optional<long> factorial_form_counterexample;
  /// The same residual over s3 itself, which is not zero; kept as a recorded discrepancy.
  std::optional<long> s3_first_nonzero;
  Rational s3_first_residual;
};

RecurrenceReport s3_recurrence_check(long max_m);

}  // namespace windtree
