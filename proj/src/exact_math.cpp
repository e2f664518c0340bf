#include "rwa/exact_math.hpp"

#include "rwa/error.hpp"

#include <charconv>
#include <mutex>
#include <numeric>

namespace rwa::exact {

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParameterError("malformed half-integer literal '" + std::string(whole) + "'");
  }
  return v;
}

} // namespace

HalfInteger HalfInteger::from_twice(std::uint64_t twice_value) {
  if (twice_value == 0) {
    throw ParameterError("half-integer must be >= 1/2");
  }
  return HalfInteger(twice_value);
}

HalfInteger HalfInteger::parse(std::string_view text) {
  auto bad = [&] { return ParameterError("malformed half-integer literal '" + std::string(text) + "'"); };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") {
      throw bad();
    }
    return from_twice(parse_uint(text.substr(0, slash), text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = parse_uint(text.substr(0, dot), text);
    auto frac = text.substr(dot + 1);
    if (frac == "5") return from_twice(2 * whole + 1);
    if (frac == "0") return from_twice(2 * whole);
    throw bad();
  }
  return from_twice(2 * parse_uint(text, text));
}

std::string HalfInteger::str() const {
  return is_integer() ? std::to_string(twice_ / 2) : std::to_string(twice_) + "/2";
}

Rational rising_gamma_ratio(HalfInteger q, std::uint64_t m) {
  // prod_{j<m} (t + 2j)/2 with t = 2q.
  BigInt num = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    num *= q.twice_value() + 2 * j;
  }
  BigInt den = 1;
  den <<= m;
  return Rational(num, den);
}

BigInt factorial(std::uint64_t n) {
  static std::mutex mu;
  static std::vector<BigInt> table{BigInt(1)};
  std::lock_guard lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * table.size());
  }
  return table[n];
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

BigInt multinomial(std::uint64_t r, std::span<const std::uint64_t> parts) {
  std::uint64_t sum = 0;
  for (auto p : parts) {
    sum += p;
  }
  if (sum != r) {
    throw ParameterError("composition parts sum to " + std::to_string(sum) + ", expected " + std::to_string(r));
  }
  BigInt den = 1;
  for (auto p : parts) {
    den *= factorial(p);
  }
  return factorial(r) / den;
}

Compositions::Compositions(std::uint64_t r, std::size_t n) : r_(r), n_(n) {
  if (n == 0) {
    throw ParameterError("compositions need at least one part");
  }
}

Compositions::iterator::iterator(std::uint64_t r, std::size_t n) : parts_(n, 0), done_(false) {
  parts_[0] = r;
}

Compositions::iterator &Compositions::iterator::operator++() {
  // Successor in descending lex order: take one unit from the rightmost
  // non-zero part before the last, and pile everything after it into the
  // next slot.
  const std::size_t n = parts_.size();
  std::size_t j = n - 1;
  while (j-- > 0) {
    if (parts_[j] > 0) {
      break;
    }
  }
  if (j >= n - 1 || parts_[j] == 0) {
    done_ = true;
    return *this;
  }
  std::uint64_t tail = 1;
  for (std::size_t i = j + 1; i < n; ++i) {
    tail += parts_[i];
    parts_[i] = 0;
  }
  --parts_[j];
  parts_[j + 1] = tail;
  return *this;
}

} // namespace rwa::exact
