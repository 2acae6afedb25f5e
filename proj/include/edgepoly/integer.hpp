#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edgepoly {

using Int128 = __int128;

std::string to_string(Int128 v);

/// Throws std::overflow_error when v does not fit in 64 bits.
std::int64_t narrow(Int128 v);

inline Int128 binom2(Int128 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Exact rational with positive denominator, always reduced.
struct Rational {
  Int128 num = 0;
  Int128 den = 1;

  Rational() = default;
  Rational(Int128 n, Int128 d = 1);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int128 l = a.num * b.den, r = b.num * a.den;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

}  // namespace edgepoly
