#include "cubelab/rational.hpp"

#include <cmath>

namespace cubelab {

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigInt big_pow(long long base, unsigned exponent) { return boost::multiprecision::pow(BigInt(base), exponent); }

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::optional<Rational> recognize_rational(double x, long long max_denominator, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(static_cast<double>(h) / static_cast<double>(k) - x) <= tol) return Rational(h, k);
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long long h_next = a * h + h_prev;
    const long long k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace cubelab
