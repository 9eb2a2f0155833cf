#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace threebox {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Canonical "num/den" form. Integers keep the explicit denominator ("0/1").
std::string to_fraction_string(const Rational& value);

/// Human-oriented form: "1/5", but "1" and "0" for integers.
std::string to_display_string(const Rational& value);

/// Parses "num/den", "-num/den" or a bare integer. The result is reduced, so
/// "2/4" and "1/2" compare equal. Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long numerator, long denominator = 1) {
    return Rational(BigInt(numerator), BigInt(denominator));
}

}  // namespace threebox
