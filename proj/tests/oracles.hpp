#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

inline std::uint64_t choose(int a, int b) {
  if (b < 0 || b > a) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= a; ++i) {
    std::vector<std::uint64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(b)];
}

/// Coefficients of p(x)^n by repeated convolution.
inline std::vector<long long> poly_power(const std::vector<long long>& p, int n) {
  std::vector<long long> out{1};
  for (int k = 0; k < n; ++k) {
    std::vector<long long> next(out.size() + p.size() - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i + j] += out[i] * p[j];
    out = std::move(next);
  }
  return out;
}

inline std::vector<int> bits_of(std::uint64_t v, int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(k)] = static_cast<int>((v >> k) & 1U);
  return b;
}

/// Hypercube adjacency from explicit coordinate comparison, binary order.
inline Eigen::MatrixXd hypercube(int n) {
  const int N = 1 << n;
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto a = bits_of(static_cast<std::uint64_t>(i), n), b = bits_of(static_cast<std::uint64_t>(j), n);
      int diff = 0;
      for (int k = 0; k < n; ++k) diff += a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)];
      E(i, j) = diff == 1;
    }
  return E;
}

/// Coordinates in {-1,0,1}^n for every ternary index, natural order with
/// digit 0 -> 0, 1 -> +1, 2 -> -1 on the least significant axis first.
inline std::vector<std::vector<int>> ternary_points(int n) {
  std::vector<std::vector<int>> pts;
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  for (std::size_t m = 0; m < total; ++m) {
    std::vector<int> p;
    for (std::size_t rest = m, k = 0; k < static_cast<std::size_t>(n); ++k, rest /= 3)
      p.push_back(std::array<int, 3>{0, 1, -1}[rest % 3]);
    pts.push_back(p);
  }
  return pts;
}

/// Eigenvalue multiset of the Cartesian power of the path P3 Laplacian-like
/// blocks: sums of one eigenvalue from each factor.
inline std::vector<double> factor_sums(const std::vector<double>& factor, int n) {
  std::vector<double> sums{0.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next;
    for (double s : sums)
      for (double f : factor) next.push_back(s + f);
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  return sums;
}

/// Counts of rank-r predicates (vertex subsets) meeting / containing a fixed
/// p-set, by exhaustive enumeration over all subsets of the 2^n vertices.
struct PredicateCounts {
  std::uint64_t related = 0;
  std::uint64_t shared = 0;
};

inline PredicateCounts count_predicates(int n, int r, std::uint32_t fixed) {
  const std::uint32_t all = 1U << (1U << n);
  PredicateCounts c;
  for (std::uint32_t pred = 1; pred < all; ++pred) {
    if (__builtin_popcount(pred) != r) continue;
    c.related += (pred & fixed) != 0;
    c.shared += (pred & fixed) == fixed;
  }
  return c;
}

/// Every n with n(n+1)/2 - 1 a perfect square, by direct search.
inline std::vector<std::pair<long long, long long>> pell_search(long long limit) {
  std::vector<std::pair<long long, long long>> out;
  for (long long n = 1; n <= limit; ++n) {
    const long long d = n * (n + 1) / 2 - 1;
    long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(d))));
    while (s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    if (s * s == d) out.emplace_back(n, 2 * s);
  }
  return out;
}

}  // namespace oracle
