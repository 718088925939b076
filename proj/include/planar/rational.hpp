#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace planar {

// Exact rational charge arithmetic. No floating point is allowed anywhere
// in the discharging pipeline; every amount is a boost::rational over an
// arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline long long rational_num(const Rational& r) {
  return r.numerator().convert_to<long long>();
}

inline long long rational_den(const Rational& r) {
  return r.denominator().convert_to<long long>();
}

inline std::string rational_str(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

}  // namespace planar
