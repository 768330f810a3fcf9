#include "symcurv/rational.hpp"

#include "symcurv/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace symcurv {

namespace {

Rational::Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) throw std::invalid_argument("empty integer in rational literal");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  return Rational::Integer(std::string(text));
}

}  // namespace

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator.is_zero()) throw DivisionByZero("rational with zero denominator");
  // cpp_rational rejects a negative denominator
  if (denominator.sign() < 0) {
    value_ = Value(-numerator, -denominator);
  } else {
    value_ = Value(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), Integer(1));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace symcurv
