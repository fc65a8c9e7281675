#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubelab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(a, b) with the falling-factorial convention: zero when b < 0 or b > a.
BigInt binomial(long long a, long long b);

BigInt big_pow(long long base, unsigned exponent);

std::string to_string(const BigInt& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Best continued-fraction approximation p/q with q <= max_denominator, if it
/// lies within `tol` of x.
std::optional<Rational> recognize_rational(double x, long long max_denominator = 10000, double tol = 1e-10);

}  // namespace cubelab
