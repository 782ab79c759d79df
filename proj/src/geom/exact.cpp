#include "phicov/exact.hpp"
#include "phicov/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace phicov {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(i128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (m > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

double Rational::to_double() const {
  // Both parts may exceed the double range of exact integers; the
  // long double quotient is only used for display and rasterization.
  return static_cast<double>(num_.convert_to<long double>() / den_.convert_to<long double>());
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

RationalPoint::RationalPoint(i128 x_num, i128 y_num, i128 denom) : xn(x_num), yn(y_num), den(denom) {
  if (den == 0) throw std::domain_error("RationalPoint: zero denominator");
  if (den < 0) {
    xn = -xn;
    yn = -yn;
    den = -den;
  }
  const i128 g = gcd128(gcd128(xn, yn), den);
  if (g > 1) {
    xn /= g;
    yn /= g;
    den /= g;
  }
}

double RationalPoint::x() const { return static_cast<double>(static_cast<long double>(xn) / static_cast<long double>(den)); }
double RationalPoint::y() const { return static_cast<double>(static_cast<long double>(yn) / static_cast<long double>(den)); }

std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b) {
  if (a.den == b.den) {
    if (auto c = a.xn <=> b.xn; c != 0) return c;
    return a.yn <=> b.yn;
  }
  const BigInt ax = to_big(a.xn) * to_big(b.den);
  const BigInt bx = to_big(b.xn) * to_big(a.den);
  if (ax != bx) return ax < bx ? std::strong_ordering::less : std::strong_ordering::greater;
  const BigInt ay = to_big(a.yn) * to_big(b.den);
  const BigInt by = to_big(b.yn) * to_big(a.den);
  if (ay == by) return std::strong_ordering::equal;
  return ay < by ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string to_string(const RationalPoint& p) {
  if (p.den == 1) return "(" + to_string(p.xn) + "," + to_string(p.yn) + ")";
  const std::string d = "/" + to_string(p.den);
  return "(" + to_string(p.xn) + d + "," + to_string(p.yn) + d + ")";
}

std::string to_string(const AABB& b) {
  return "[" + std::to_string(b.xmin) + "," + std::to_string(b.xmax) + "]x[" + std::to_string(b.ymin) + "," +
         std::to_string(b.ymax) + "]";
}

}  // namespace phicov
