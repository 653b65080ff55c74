#ifndef R4EMBED_NUMERIC_HPP
#define R4EMBED_NUMERIC_HPP

#include <array>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace r4embed {

// Exact arithmetic everywhere: integers and rationals of unbounded size.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A point of R^4.  The base 2-plane Pi is {x3 = x4 = 0} (0-indexed: the
// last two coordinates vanish).
using Point4 = std::array<Rational, 4>;

// A point of R^3, used by the segment-angle oracle.
using Point3 = std::array<Rational, 3>;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// floor(sqrt(n)) for n >= 0.
inline Integer isqrt_floor(const Integer& n) {
  Integer r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;        // boost::sqrt already floors; keep it exact
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// A rational q >= 0 with q*q <= x (x >= 0).
inline Rational rational_sqrt_lower(const Rational& x) {
  const Integer p = numerator(x);
  const Integer q = denominator(x);
  // sqrt(p/q) = sqrt(p*q)/q >= floor(sqrt(p*q))/q
  return Rational(isqrt_floor(p * q), q);
}

// ceil(log2(m)) for m >= 1.
inline unsigned ceil_log2(const Integer& m) {
  if (m <= 1) return 0;
  const Integer k = m - 1;
  return static_cast<unsigned>(boost::multiprecision::msb(k)) + 1u;
}

inline std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational squared_distance(const Point4& a, const Point4& b) {
  Rational s = 0;
  for (int i = 0; i < 4; ++i) {
    const Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace r4embed

#endif
