#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace shorbounds {

/// Normalized rational with arbitrary-precision numerator and denominator.
/// Denominator is always positive and coprime to the numerator.
class ExactRational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  ExactRational(const Integer& num, const Integer& den);

  Integer numerator() const;
  Integer denominator() const;

  /// "num/den", always with the slash (e.g. "1/1", "0/1").
  std::string to_string() const;
  static ExactRational parse(const std::string& text);

  /// Decimal rendering at `significant` significant digits, ties to even.
  std::string to_decimal(int significant = 12) const;
  double to_double() const;

  ExactRational operator-() const;
  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  explicit ExactRational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace shorbounds
