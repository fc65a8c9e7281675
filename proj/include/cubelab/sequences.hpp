#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubelab/rational.hpp"

namespace cubelab {

enum class SequenceId {
  Trinomial,   // coefficients of (1 + x + x^2)^n, read by rows
  PowTriMult,  // coefficients of (1 + x + x^3)^n, read by rows
  A013609,     // C(n,k) 2^k, read by rows
  A038220,     // C(n,k) 3^(n-k) 2^k, read by rows
  A080956Neg,  // n(n-3)/2, n >= 1
  A075848,     // a(k+1) = 6a(k) - a(k-1); 0, 6
  A072221,     // a(k+1) = 6a(k) - a(k-1) + 2; 1, 4
  A120908,     // 4(n-1) 3^(n-2), n >= 2
  ProdSeq,     // -2n 3^(2n-2), n >= 1
  A003946Neg,  // -4 3^(n-2), n >= 2
  A060188,     // 3^n - n - 1, n >= 0
  A279019,     // n(n+1), n >= 0
  BallCoeff,   // f_n = 2 f_(n-2) / n; f_0 = 1, f_1 = 2
};

const std::vector<SequenceId>& all_sequences();
std::string to_string(SequenceId id);
SequenceId parse_sequence(std::string_view name);

bool is_triangle(SequenceId id);

/// Index of the first generated term (row-major position for triangles).
long long first_index(SequenceId id);

/// Row n of a triangle sequence.
std::vector<BigInt> triangle_row(SequenceId id, int n);

/// First `count` terms, triangles flattened row by row.
std::vector<Rational> generate(SequenceId id, long long count);

/// Integer view of `generate`; throws for BallCoeff.
std::vector<BigInt> generate_integers(SequenceId id, long long count);

/// Extreme eigenvalues of the {2^n}-cube distance matrix in closed form.
struct PowHammingExtremes {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  BigInt sum;      // 4(n-1) 3^(n-2)
  BigInt product;  // -2n 3^(2n-2)
};

PowHammingExtremes pow_hamming_extremes(int n);

/// -4 3^(n-2): the negative integer eigenvalue of the {2^n}-cube, n >= 2.
BigInt pow_hamming_integer_eigenvalue(int n);

/// f_n as an exact rational.
Rational ball_coefficient(int n);

struct BallMeasures {
  double volume = 0.0;
  double surface = 0.0;
};

BallMeasures ball_measures(int n, double radius);

struct VectorEquilibrium {
  long long v_count = 0;
  std::optional<long long> kissing_known;
  bool cartesian_embeddable = false;
};

VectorEquilibrium vector_equilibrium(int n);

/// 4x^3 + x^2 + x.
double fine_structure(double x);

}  // namespace cubelab
