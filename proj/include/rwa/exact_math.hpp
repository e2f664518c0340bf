#pragma once

// Exact combinatorial substrate: half-integer rising factorials,
// multinomial coefficients and streaming composition enumeration.
// No floating point appears in this module.

#include "rwa/rational.hpp"

#include <cstdint>
#include <iterator>
#include <span>
#include <string_view>
#include <vector>

namespace rwa::exact {

/// A number of the form m/2 with m >= 1, stored as m.
class HalfInteger {
public:
  static HalfInteger from_twice(std::uint64_t twice_value);
  static HalfInteger from_integer(std::uint64_t value) { return from_twice(2 * value); }
  /// Accepts "m/2", an integer "k", or a decimal "k.5"/"k.0".
  static HalfInteger parse(std::string_view text);

  std::uint64_t twice_value() const noexcept { return twice_; }
  bool is_integer() const noexcept { return twice_ % 2 == 0; }
  Rational value() const { return Rational(BigInt(twice_), BigInt(2)); }

  /// this + m for an integer m.
  HalfInteger plus(std::uint64_t m) const { return HalfInteger(twice_ + 2 * m); }
  friend HalfInteger operator+(HalfInteger x, HalfInteger y) { return HalfInteger(x.twice_ + y.twice_); }
  friend bool operator==(HalfInteger, HalfInteger) = default;

  std::string str() const;

private:
  explicit HalfInteger(std::uint64_t twice) : twice_(twice) {}
  std::uint64_t twice_;
};

using Composition = std::vector<std::uint64_t>;

/// Gamma(q + m) / Gamma(q) = q (q+1) ... (q+m-1).
Rational rising_gamma_ratio(HalfInteger q, std::uint64_t m);

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// r! / (i_1! ... i_n!). Throws ParameterError when the parts do not sum to r.
BigInt multinomial(std::uint64_t r, std::span<const std::uint64_t> parts);

/// Streams every composition of r into n ordered non-negative parts, in
/// lexicographically descending order: (r,0,...,0) first, (0,...,0,r) last.
/// Holds one composition at a time.
class Compositions {
public:
  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition *;
    using reference = const Composition &;

    iterator() = default;
    reference operator*() const noexcept { return parts_; }
    pointer operator->() const noexcept { return &parts_; }
    iterator &operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator &it, std::default_sentinel_t) noexcept { return it.done_; }

  private:
    friend class Compositions;
    iterator(std::uint64_t r, std::size_t n);

    Composition parts_;
    bool done_ = true;
  };

  Compositions(std::uint64_t r, std::size_t n);

  iterator begin() const { return iterator(r_, n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

  std::uint64_t order() const noexcept { return r_; }
  std::size_t size_parts() const noexcept { return n_; }
  /// binomial(r + n - 1, n - 1).
  BigInt count() const { return binomial(r_ + n_ - 1, n_ - 1); }

private:
  std::uint64_t r_;
  std::size_t n_;
};

} // namespace rwa::exact
