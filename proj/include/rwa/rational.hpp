#pragma once

/**
 * @file rational.hpp
 * @brief Exact signed rational numbers over arbitrary-precision integers.
 *
 * Values are always stored in lowest terms with a positive denominator,
 * so structural equality is value equality. Zero is 0/1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace rwa {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT(implicit)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT(implicit)
  Rational(BigInt num, BigInt den);

  /// Parses "p", "p/q", or a finite decimal such as "-2.5" exactly.
  static Rational parse(std::string_view text);

  const BigInt &numerator() const noexcept { return num_; }
  const BigInt &denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational &lhs, const Rational &rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs);

  Rational pow(unsigned exponent) const;

  /// "num/den", or just "num" for integers.
  std::string str() const;

  /// Positional (or scientific, for extreme magnitudes) rendering rounded
  /// half-away-from-zero to `digits` significant digits. Display only.
  std::string to_decimal(unsigned digits = 30) const;

  double to_double() const;

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

} // namespace rwa
