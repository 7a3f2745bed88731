#include "shorbounds/rational.hpp"

#include <ostream>

#include "shorbounds/error.hpp"

namespace shorbounds {

namespace {

using Integer = ExactRational::Integer;
using boost::multiprecision::cpp_rational;

Integer pow10(int e) {
  Integer v = 1;
  for (int i = 0; i < e; ++i) v *= 10;
  return v;
}

cpp_rational pow10_signed(int e) {
  return e >= 0 ? cpp_rational(pow10(e)) : cpp_rational(Integer(1), pow10(-e));
}

std::string strip_fraction_zeros(std::string s) {
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

ExactRational::ExactRational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::domain, "zero denominator");
  value_ = den < 0 ? cpp_rational(Integer(-num), Integer(-den)) : cpp_rational(num, den);
}

Integer ExactRational::numerator() const { return boost::multiprecision::numerator(value_); }
Integer ExactRational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string ExactRational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

ExactRational ExactRational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ExactRational(Integer(text), Integer(1));
    return ExactRational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorCode::domain, "not a rational: " + text);
  }
}

std::string ExactRational::to_decimal(int significant) const {
  if (significant < 1) throw Error(ErrorCode::domain, "significant digits must be positive");
  if (value_ == 0) return "0";
  const bool negative = value_ < 0;
  const cpp_rational x = negative ? cpp_rational(-value_) : value_;

  // Decimal exponent E with 10^E <= x < 10^(E+1).
  int exponent = static_cast<int>(numerator().str().size()) -
                 static_cast<int>(denominator().str().size()) - (negative ? 1 : 0);
  while (pow10_signed(exponent) > x) --exponent;
  while (pow10_signed(exponent + 1) <= x) ++exponent;

  const cpp_rational scaled = x * pow10_signed(significant - 1 - exponent);
  const Integer num = boost::multiprecision::numerator(scaled);
  const Integer den = boost::multiprecision::denominator(scaled);
  Integer digits = num / den;
  const Integer twice_rem = 2 * (num % den);
  if (twice_rem > den || (twice_rem == den && digits % 2 == 1)) ++digits;
  if (digits == pow10(significant)) {
    digits /= 10;
    ++exponent;
  }

  std::string body = digits.str();
  std::string out;
  if (exponent >= -5 && exponent < significant) {
    if (exponent >= 0) {
      out = body.substr(0, exponent + 1) + "." + body.substr(exponent + 1);
    } else {
      out = "0." + std::string(-exponent - 1, '0') + body;
    }
    out = strip_fraction_zeros(out);
  } else {
    out = strip_fraction_zeros(body.substr(0, 1) + "." + body.substr(1));
    out += (exponent < 0 ? "e-" : "e+");
    const int mag = exponent < 0 ? -exponent : exponent;
    out += (mag < 10 ? "0" : "") + std::to_string(mag);
  }
  return negative ? "-" + out : out;
}

double ExactRational::to_double() const { return value_.convert_to<double>(); }

ExactRational ExactRational::operator-() const { return ExactRational(cpp_rational(-value_)); }

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  return ExactRational(cpp_rational(a.value_ + b.value_));
}
ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return ExactRational(cpp_rational(a.value_ - b.value_));
}
ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  return ExactRational(cpp_rational(a.value_ * b.value_));
}
ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw Error(ErrorCode::domain, "division by zero rational");
  return ExactRational(cpp_rational(a.value_ / b.value_));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
  return os << r.to_string();
}

}  // namespace shorbounds
