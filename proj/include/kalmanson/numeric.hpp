#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kalmanson {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses an exact rational from "p", "p/q" or a decimal literal such as
/// "-1.25". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise (always in lowest terms).
std::string to_string(const Rational& value);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace kalmanson
