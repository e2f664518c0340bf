#include "rwa/rational.hpp"

#include "rwa/error.hpp"

#include <algorithm>
#include <ostream>

namespace rwa {

namespace {

BigInt pow10(unsigned e) {
  BigInt p = 1;
  for (unsigned i = 0; i < e; ++i) {
    p *= 10;
  }
  return p;
}

// BigInt's string constructor treats a leading 0 as an octal prefix.
BigInt decimal_int(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') {
    s.remove_prefix(1);
  }
  return BigInt(std::string(s));
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Number of decimal digits of a positive integer.
unsigned digit_count(const BigInt &v) { return static_cast<unsigned>(v.str().size()); }

} // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) {
    throw ParameterError("rational with zero denominator");
  }
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return ParameterError("malformed rational literal '" + std::string(text) + "'"); };
  if (text.empty()) {
    throw fail();
  }
  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto p = body.substr(0, slash);
    auto q = body.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) {
      throw fail();
    }
    BigInt den = decimal_int(q);
    if (den.is_zero()) {
      throw fail();
    }
    value = Rational(decimal_int(p), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
      throw fail();
    }
    BigInt num = decimal_int(std::string(ip.empty() ? "0" : ip) + std::string(fp));
    value = Rational(num, pow10(static_cast<unsigned>(fp.size())));
  } else {
    if (!all_digits(body)) {
      throw fail();
    }
    value = Rational(decimal_int(body));
  }
  return negative ? -value : value;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational &Rational::operator+=(const Rational &rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.is_zero()) {
    throw ParameterError("rational division by zero");
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) {
  BigInt l = lhs.num_ * rhs.den_;
  BigInt r = rhs.num_ * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned exponent) const {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) {
    result *= *this;
  }
  return result;
}

std::string Rational::str() const {
  if (is_integer()) {
    return num_.str();
  }
  return num_.str() + "/" + den_.str();
}

std::string Rational::to_decimal(unsigned digits) const {
  if (num_.is_zero()) {
    return "0";
  }
  digits = std::max(digits, 1u);
  const bool negative = num_.sign() < 0;
  const BigInt p = boost::multiprecision::abs(num_);

  // Pick shift s so that 10^(digits-1) <= p*10^s/q < 10^digits before rounding.
  long shift = static_cast<long>(digits) - (static_cast<long>(digit_count(p)) - static_cast<long>(digit_count(den_)));
  auto scaled = [&](long s) {
    BigInt n = p;
    BigInt d = den_;
    if (s >= 0) n *= pow10(static_cast<unsigned>(s));
    else d *= pow10(static_cast<unsigned>(-s));
    return std::pair{n, d};
  };
  const BigInt lower = pow10(digits - 1);
  const BigInt upper = pow10(digits);
  BigInt mantissa;
  for (;;) {
    auto [n, d] = scaled(shift);
    BigInt quo = n / d;
    if (quo >= upper) {
      --shift;
      continue;
    }
    if (quo < lower) {
      ++shift;
      continue;
    }
    BigInt rem = n - quo * d;
    if (2 * rem >= d) {
      ++quo;
    }
    if (quo == upper) {
      quo /= 10;
      --shift;
    }
    mantissa = quo;
    break;
  }

  // value ~= mantissa * 10^(-shift); decimal exponent of the leading digit:
  const long exp10 = static_cast<long>(digits) - 1 - shift;
  std::string m = mantissa.str();
  std::string out = negative ? "-" : "";
  if (exp10 >= 30 || exp10 < -25) {
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += "e" + std::to_string(exp10);
    return out;
  }
  if (exp10 < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + m;
  } else if (static_cast<std::size_t>(exp10) + 1 >= m.size()) {
    out += m + std::string(static_cast<std::size_t>(exp10) + 1 - m.size(), '0');
  } else {
    out += m.substr(0, static_cast<std::size_t>(exp10) + 1) + "." + m.substr(static_cast<std::size_t>(exp10) + 1);
  }
  return out;
}

double Rational::to_double() const {
  return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
}

std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.str(); }

} // namespace rwa
