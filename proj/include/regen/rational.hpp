#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace regen {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline BigInt numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& x) {
    const BigInt den = denominator_of(x);
    if (den == 1) {
        return numerator_of(x).str();
    }
    return numerator_of(x).str() + "/" + den.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Largest s with s*s <= x, for x >= 0.
BigInt isqrt(const BigInt& x);

/// Floor and ceiling of num/den for den != 0, rounding toward -inf / +inf.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

BigInt floor_of(const Rational& x);
BigInt ceil_of(const Rational& x);

}  // namespace regen
