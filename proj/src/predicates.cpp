#include "cubelab/predicates.hpp"

#include <cmath>
#include <string>

#include "cubelab/error.hpp"

namespace cubelab {

namespace {

long long vertex_count(int n) {
  if (n < 1 || n > 20) throw PreconditionError("predicate dimension must be in [1, 20], got " + std::to_string(n));
  return 1LL << n;
}

}  // namespace

BigInt n_shared(int n, long long r, long long p) {
  const long long total = vertex_count(n);
  if (p < 0 || r > total) throw PreconditionError("n_shared: need 0 <= p <= r <= 2^n");
  if (p > r) throw PreconditionError("n_shared: p=" + std::to_string(p) + " exceeds rank r=" + std::to_string(r));
  return binomial(total - p, r - p);
}

BigInt n_related(int n, long long r, long long p) {
  const long long total = vertex_count(n);
  if (p < 1 || p > total || r < 1 || r > total)
    throw PreconditionError("n_related: need 1 <= p <= 2^n and 1 <= r <= 2^n");
  BigInt sum = 0;
  for (long long l = 1; l <= p; ++l) sum += binomial(total - l, r - 1);
  return sum;
}

Rational caf(int n, long long r, long long p) {
  const long long total = vertex_count(n);
  if (r == 0) throw std::domain_error("caf: undefined when no vertex is active (r = 0)");
  if (r < 0 || r > total || p < 1 || p > total)
    throw PreconditionError("caf: need 1 <= r <= 2^n and 1 <= p <= 2^n");
  return Rational(n_related(n, r, p), binomial(total, r));
}

BigInt ict_count(int n, int c) {
  if (n < 0 || c < 0) throw PreconditionError("ict_count: n and c must be nonnegative");
  if (2 * c > n)
    throw PreconditionError("ict_count: (3/4)^c 2^n is not an integer for c=" + std::to_string(c) +
                            ", n=" + std::to_string(n));
  return big_pow(3, static_cast<unsigned>(c)) * big_pow(2, static_cast<unsigned>(n - 2 * c));
}

double logistic(double x, double mu) { return 1.0 / (std::exp(-mu * x) + 1.0); }

}  // namespace cubelab
