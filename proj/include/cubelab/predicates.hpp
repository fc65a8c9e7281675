#pragma once

#include "cubelab/rational.hpp"

namespace cubelab {

// Compound predicates over the 2^n vertices of the {n}-cube. A predicate of
// rank r is an r-subset of the vertices; all counts are exact.

/// Number of rank-r predicates containing a fixed set of p vertices,
/// C(2^n - p, r - p). Independent of which p vertices are chosen.
BigInt n_shared(int n, long long r, long long p);

/// Number of rank-r predicates meeting at least one of p fixed vertices,
/// sum_{l=1..p} C(2^n - l, r - 1).
BigInt n_related(int n, long long r, long long p);

/// Activation f(r, p) = n_related(n, r, p) / C(2^n, r). Undefined for r = 0.
Rational caf(int n, long long r, long long p);

/// Atomic predicates left after c independent implicational constraints,
/// (3/4)^c 2^n = 3^c 2^(n-2c).
BigInt ict_count(int n, int c);

/// 1 / (exp(-mu x) + 1).
double logistic(double x, double mu = 1.0);

}  // namespace cubelab
