// Exact number types for the geometry kernel.
//
// Input coordinates are bounded by 2^30, so every orientation determinant
// fits comfortably in 128 bits. Ray parameters and points derived from
// inserted rays can need more, those go through a checked 256-bit integer
// so an overflow throws instead of silently wrapping.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace phicov {

using i128 = __int128;
using BigInt = boost::multiprecision::checked_int256_t;

inline BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(m >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(m);
  return neg ? BigInt(-r) : r;
}

inline int sign(i128 v) { return (v > 0) - (v < 0); }
inline int sign(const BigInt& v) { return v.sign(); }

i128 gcd128(i128 a, i128 b);
std::string to_string(i128 v);

// Exact rational with a positive denominator. Not reduced; comparisons
// cross-multiply in 256 bits.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt l = a.num_ * b.den_;
    const BigInt r = b.num_ * a.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace phicov
