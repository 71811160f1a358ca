#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kneserlab {

// Exact arithmetic everywhere: counts never wrap, comparisons never round.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace kneserlab
