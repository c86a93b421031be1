#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gcmforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;

/// num/den. The two-argument cpp_rational constructor in Boost 1.74 throws
/// on a negative denominator, so build it by division.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num) / Rational(den);
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace gcmforge
