#include "windtree/rational.hpp"

#include "windtree/error.hpp"

namespace windtree {

Rational::Rational(const Integer& numerator, const Integer& denominator)
    : value_(numerator, denominator) {
  if (denominator == 0) throw Error(ErrorKind::kDomainViolation, "zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
    return Rational(Integer(std::string(text.substr(0, slash))),
                    Integer(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::kParse, "not a rational: '" + std::string(text) + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw Error(ErrorKind::kDomainViolation, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace windtree
