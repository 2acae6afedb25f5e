#include "edgepoly/integer.hpp"

#include <algorithm>
#include <limits>

namespace edgepoly {

namespace {

Int128 gcd128(Int128 a, Int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

std::int64_t narrow(Int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("value does not fit in 64 bits: " + to_string(v));
  return static_cast<std::int64_t>(v);
}

Rational::Rational(Int128 n, Int128 d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
Rational operator-(const Rational& a, const Rational& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
Rational operator*(const Rational& a, const Rational& b) { return {a.num * b.num, a.den * b.den}; }
Rational operator/(const Rational& a, const Rational& b) { return {a.num * b.den, a.den * b.num}; }

}  // namespace edgepoly
