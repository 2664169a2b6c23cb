#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace windtree {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);
  Rational(long numerator, long denominator) : Rational(Integer(numerator), Integer(denominator)) {}

  /// Accepts "p", "p/q" and "-p/q".
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// A Siegel--Veech type quantity q / pi^2, stored through its rational coefficient q.
class SVValue {
 public:
  SVValue() = default;
  explicit SVValue(Rational pi2_coeff) : coeff_(std::move(pi2_coeff)) {}

  const Rational& pi2_coeff() const { return coeff_; }

  /// (pi^2 / 3) * (q / pi^2) = q / 3.
  Rational times_pi2_over_3() const { return coeff_ / Rational(3); }

  std::string str() const { return (coeff_.is_integer() ? coeff_.str() : "(" + coeff_.str() + ")") + "/pi^2"; }

  SVValue& operator+=(const SVValue& o) { coeff_ += o.coeff_; return *this; }
  friend SVValue operator+(SVValue a, const SVValue& b) { return a += b; }
  friend SVValue operator-(SVValue a, const SVValue& b) { return SVValue(a.coeff_ - b.coeff_); }
  friend SVValue operator*(const Rational& s, const SVValue& v) { return SVValue(s * v.coeff_); }
  friend SVValue operator*(const SVValue& v, const Rational& s) { return SVValue(s * v.coeff_); }
  friend bool operator==(const SVValue& a, const SVValue& b) = default;

 private:
  Rational coeff_;
};

}  // namespace windtree
