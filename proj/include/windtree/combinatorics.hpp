#pragma once

#include "windtree/rational.hpp"

namespace windtree {

/// Product of the positive integers up to n having the parity of n; 0!! = 1.
Integer double_factorial(long n);

Integer factorial(long n);

/// C(n, k) with C(n, k) = 0 whenever k < 0 or k > n. Rejects n < 0.
Integer binomial(long n, long k);

/// (2m)!! / (2m+1)!!, the diffusion rate of the family B(m).
Rational delta_closed_form(long m);

/// (2m)!! / (2m-1)!!, with the convention (-1)!! = 1 at m = 0.
Rational even_over_odd_double_factorial(long m);

struct AsymptoticComparison {
  long m = 0;
  Rational delta;
  /// sqrt(pi) / (2 sqrt(m)) truncated to kAsymptoticDigits decimals.
  Rational leading_term;
  /// delta * 2 sqrt(m) / sqrt(pi) truncated to kAsymptoticDigits decimals.
  Rational ratio;
  /// |ratio - 1|.
  Rational deviation;
};

inline constexpr int kAsymptoticDigits = 50;

AsymptoticComparison delta_asymptotic(long m);

}  // namespace windtree
