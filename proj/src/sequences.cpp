#include "cubelab/sequences.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "cubelab/error.hpp"

namespace cubelab {

namespace {

/// Coefficients of p(x)^n for a small integer polynomial p.
std::vector<BigInt> polynomial_power(const std::vector<int>& p, int n) {
  std::vector<BigInt> acc{1};
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(acc.size() + p.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += acc[i] * p[j];
    acc = std::move(next);
  }
  return acc;
}

std::vector<Rational> as_rationals(const std::vector<BigInt>& xs) {
  return {xs.begin(), xs.end()};
}

BigInt pow3(long long e) { return big_pow(3, static_cast<unsigned>(e)); }

/// a(k+1) = 6 a(k) - a(k-1) + shift.
std::vector<BigInt> pell_like(BigInt a0, BigInt a1, int shift, long long count) {
  std::vector<BigInt> out;
  for (long long k = 0; k < count; ++k) {
    out.push_back(a0);
    BigInt next = 6 * a1 - a0 + shift;
    a0 = a1;
    a1 = next;
  }
  return out;
}

}  // namespace

const std::vector<SequenceId>& all_sequences() {
  static const std::vector<SequenceId> ids{
      SequenceId::Trinomial, SequenceId::PowTriMult, SequenceId::A013609,    SequenceId::A038220,
      SequenceId::A080956Neg, SequenceId::A075848,   SequenceId::A072221,    SequenceId::A120908,
      SequenceId::ProdSeq,   SequenceId::A003946Neg, SequenceId::A060188,    SequenceId::A279019,
      SequenceId::BallCoeff};
  return ids;
}

std::string to_string(SequenceId id) {
  switch (id) {
    case SequenceId::Trinomial: return "Trinomial";
    case SequenceId::PowTriMult: return "PowTriMult";
    case SequenceId::A013609: return "A013609";
    case SequenceId::A038220: return "A038220";
    case SequenceId::A080956Neg: return "A080956Neg";
    case SequenceId::A075848: return "A075848";
    case SequenceId::A072221: return "A072221";
    case SequenceId::A120908: return "A120908";
    case SequenceId::ProdSeq: return "ProdSeq";
    case SequenceId::A003946Neg: return "A003946Neg";
    case SequenceId::A060188: return "A060188";
    case SequenceId::A279019: return "A279019";
    case SequenceId::BallCoeff: return "BallCoeff";
  }
  return "unknown";
}

SequenceId parse_sequence(std::string_view name) {
  for (SequenceId id : all_sequences())
    if (to_string(id) == name) return id;
  throw PreconditionError("unknown sequence id '" + std::string(name) + "'");
}

bool is_triangle(SequenceId id) {
  return id == SequenceId::Trinomial || id == SequenceId::PowTriMult || id == SequenceId::A013609 ||
         id == SequenceId::A038220;
}

long long first_index(SequenceId id) {
  switch (id) {
    case SequenceId::A080956Neg:
    case SequenceId::ProdSeq: return 1;
    case SequenceId::A120908:
    case SequenceId::A003946Neg: return 2;
    default: return 0;
  }
}

std::vector<BigInt> triangle_row(SequenceId id, int n) {
  if (n < 0) throw PreconditionError("triangle_row: n must be >= 0");
  switch (id) {
    case SequenceId::Trinomial: return polynomial_power({1, 1, 1}, n);
    case SequenceId::PowTriMult: return polynomial_power({1, 1, 0, 1}, n);
    case SequenceId::A013609: return polynomial_power({1, 2}, n);
    case SequenceId::A038220: return polynomial_power({3, 2}, n);
    default: throw PreconditionError(to_string(id) + " is not a triangle");
  }
}

std::vector<Rational> generate(SequenceId id, long long count) {
  if (count < 1) throw PreconditionError("generate: count must be >= 1");
  if (is_triangle(id)) {
    std::vector<Rational> out;
    for (int row = 0; static_cast<long long>(out.size()) < count; ++row)
      for (const BigInt& v : triangle_row(id, row)) {
        if (static_cast<long long>(out.size()) == count) break;
        out.emplace_back(v);
      }
    return out;
  }
  if (id == SequenceId::A075848) return as_rationals(pell_like(0, 6, 0, count));
  if (id == SequenceId::A072221) return as_rationals(pell_like(1, 4, 2, count));

  std::vector<Rational> out;
  const long long start = first_index(id);
  for (long long n = start; n < start + count; ++n) {
    switch (id) {
      case SequenceId::A080956Neg: out.emplace_back(BigInt(n * (n - 3) / 2)); break;
      case SequenceId::A120908: out.emplace_back(4 * BigInt(n - 1) * pow3(n - 2)); break;
      case SequenceId::ProdSeq: out.emplace_back(-2 * BigInt(n) * pow3(2 * n - 2)); break;
      case SequenceId::A003946Neg: out.emplace_back(-4 * pow3(n - 2)); break;
      case SequenceId::A060188: out.emplace_back(pow3(n) - n - 1); break;
      case SequenceId::A279019: out.emplace_back(BigInt(n) * (n + 1)); break;
      case SequenceId::BallCoeff: out.push_back(ball_coefficient(static_cast<int>(n))); break;
      default: throw PreconditionError("generate: unhandled sequence");
    }
  }
  return out;
}

std::vector<BigInt> generate_integers(SequenceId id, long long count) {
  std::vector<BigInt> out;
  for (const Rational& q : generate(id, count)) {
    if (boost::multiprecision::denominator(q) != 1)
      throw PreconditionError(to_string(id) + " has non-integral terms");
    out.push_back(boost::multiprecision::numerator(q));
  }
  return out;
}

PowHammingExtremes pow_hamming_extremes(int n) {
  if (n < 2) throw PreconditionError("pow_hamming_extremes: n must be >= 2");
  const double scale = std::pow(3.0, n - 2);
  const double root = std::sqrt(2.0 * (2 * n + 1) * (n + 2));
  PowHammingExtremes e;
  e.lambda_min = (2.0 * (n - 1) - root) * scale;
  e.lambda_max = (2.0 * (n - 1) + root) * scale;
  e.sum = 4 * BigInt(n - 1) * pow3(n - 2);
  e.product = -2 * BigInt(n) * pow3(2 * n - 2);
  return e;
}

BigInt pow_hamming_integer_eigenvalue(int n) {
  if (n < 2) throw PreconditionError("pow_hamming_integer_eigenvalue: n must be >= 2");
  return -4 * pow3(n - 2);
}

Rational ball_coefficient(int n) {
  if (n < 0) throw PreconditionError("ball_coefficient: n must be >= 0");
  Rational f = (n % 2 == 0) ? Rational(1) : Rational(2);
  for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) f = f * 2 / k;
  return f;
}

BallMeasures ball_measures(int n, double radius) {
  if (n < 0) throw PreconditionError("ball_measures: n must be >= 0");
  if (!(radius > 0.0)) throw PreconditionError("ball_measures: radius must be positive");
  const double coeff = std::pow(std::numbers::pi, n / 2) * to_double(ball_coefficient(n));
  return {coeff * std::pow(radius, n), n * coeff * std::pow(radius, n - 1)};
}

VectorEquilibrium vector_equilibrium(int n) {
  if (n < -1) throw PreconditionError("vector_equilibrium: n must be >= -1");
  VectorEquilibrium ve;
  // |v(n)| = |v(n-1)| + 2n, |v(-1)| = 0; cross-checked against n(n+1).
  long long count = 0;
  for (int k = 0; k <= n; ++k) count += 2 * k;
  if (count != static_cast<long long>(n) * (n + 1)) throw StructuralError("vector equilibrium recurrence mismatch");
  ve.v_count = count;
  static const std::map<int, long long> kissing{{1, 2}, {2, 6}, {3, 12}, {4, 24}, {8, 240}, {24, 196560}};
  if (auto it = kissing.find(n); it != kissing.end()) ve.kissing_known = it->second;
  if (n >= 0 && n < 62) ve.cartesian_embeddable = static_cast<long long>(n) * n - n + 2 == (1LL << n);
  return ve;
}

double fine_structure(double x) { return 4.0 * x * x * x + x * x + x; }

}  // namespace cubelab
