#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubelab/bitspace.hpp"
#include "cubelab/error.hpp"
#include "cubelab/graph_matrix.hpp"
#include "cubelab/rational.hpp"

namespace cubelab {

namespace detail {

template <typename Scalar, typename Fn>
DenseMatrix<Scalar> pairwise(Eigen::Index size, Fn&& entry) {
  DenseMatrix<Scalar> m(size, size);
  for (Eigen::Index j = 0; j < size; ++j)
    for (Eigen::Index i = 0; i < size; ++i) m(i, j) = static_cast<Scalar>(entry(i, j));
  return m;
}

struct BinaryLayout {
  std::vector<std::uint64_t> words;
  Eigen::Index size() const { return static_cast<Eigen::Index>(words.size()); }
  int distance(Eigen::Index i, Eigen::Index j) const {
    return std::popcount(words[static_cast<std::size_t>(i)] ^ words[static_cast<std::size_t>(j)]);
  }
};

/// Vertex data of the 3^n families at each ordered position.
struct TernaryLayout {
  int n = 0;
  std::vector<std::size_t> index;
  std::vector<std::uint64_t> address;
  Eigen::Index size() const { return static_cast<Eigen::Index>(index.size()); }
  /// Positions differ on exactly one axis, one side of which is the origin coordinate.
  bool adjacent(Eigen::Index i, Eigen::Index j) const;
  int address_distance(Eigen::Index i, Eigen::Index j) const {
    return std::popcount(address[static_cast<std::size_t>(i)] ^
                         address[static_cast<std::size_t>(j)]);
  }
  int degree(Eigen::Index i) const { return 2 * n - std::popcount(address[static_cast<std::size_t>(i)]); }
};

BinaryLayout binary_layout(int n, const Ordering& ordering);
TernaryLayout ternary_layout(int n, const Ordering& ordering);

inline Ordering default_ternary(const Ordering& ordering) {
  return ordering.kind == OrderingKind::Binary ? Ordering::ternary_natural()
         : ordering.kind == OrderingKind::Gray ? Ordering::ternary_gray()
                                               : ordering;
}

}  // namespace detail

/// n-cube: entry 1 iff the addresses are at Hamming distance 1.
template <typename Scalar = double>
BasicGraphMatrix<Scalar> ncube_adjacency(int n, const Ordering& ordering = Ordering::binary()) {
  const auto layout = detail::binary_layout(n, ordering);
  return {Family::NCube, MatrixKind::Adjacency, n, ordering,
          detail::pairwise<Scalar>(layout.size(), [&](auto i, auto j) {
            return layout.distance(i, j) == 1 ? 1 : 0;
          })};
}

/// {n}-cube: D_lm = Hamming distance between addresses.
template <typename Scalar = double>
BasicGraphMatrix<Scalar> hamming_distance_matrix(int n, const Ordering& ordering = Ordering::binary()) {
  const auto layout = detail::binary_layout(n, ordering);
  return {Family::HammingCube, MatrixKind::Distance, n, ordering,
          detail::pairwise<Scalar>(layout.size(),
                                   [&](auto i, auto j) { return layout.distance(i, j); })};
}

/// [n]-cube cotan Laplacian in combinatorial form, L = nI - E (negated for OLN).
template <typename Scalar = double>
BasicGraphMatrix<Scalar> tricube_laplacian(int n, const Ordering& ordering = Ordering::binary(),
                                           SignConvention sign = SignConvention::OLP) {
  const auto layout = detail::binary_layout(n, ordering);
  const int s = sign == SignConvention::OLP ? 1 : -1;
  return {Family::TriCube, MatrixKind::Laplacian, n, ordering,
          detail::pairwise<Scalar>(layout.size(), [&](auto i, auto j) {
            const int d = layout.distance(i, j);
            return d == 0 ? s * n : d == 1 ? -s : 0;
          })};
}

/// Cube edges plus both diagonals of every 2-face; degree n + C(n,2).
template <typename Scalar = double>
BasicGraphMatrix<Scalar> regular_tricube_adjacency(int n, const Ordering& ordering = Ordering::binary()) {
  if (n < 2) throw PreconditionError("regular [n]-cube needs n >= 2");
  const auto layout = detail::binary_layout(n, ordering);
  return {Family::RegularTriCube, MatrixKind::Adjacency, n, ordering,
          detail::pairwise<Scalar>(layout.size(), [&](auto i, auto j) {
            const int d = layout.distance(i, j);
            return (d == 1 || d == 2) ? 1 : 0;
          })};
}

/// 2^n-cube on {-1,0,1}^n: the n-fold Cartesian product of the 3-vertex path.
template <typename Scalar = double>
BasicGraphMatrix<Scalar> pow_cube_adjacency(int n, const Ordering& ordering = Ordering::ternary_natural()) {
  const Ordering ord = detail::default_ternary(ordering);
  const auto layout = detail::ternary_layout(n, ord);
  return {Family::PowCube, MatrixKind::Adjacency, n, ord,
          detail::pairwise<Scalar>(layout.size(),
                                   [&](auto i, auto j) { return layout.adjacent(i, j) ? 1 : 0; })};
}

/// [2^n]-cube Kirchhoff Laplacian G - E; degrees run from n to 2n.
template <typename Scalar = double>
BasicGraphMatrix<Scalar> pow_tricube_laplacian(int n, const Ordering& ordering = Ordering::ternary_natural(),
                                               SignConvention sign = SignConvention::OLP) {
  const Ordering ord = detail::default_ternary(ordering);
  const auto layout = detail::ternary_layout(n, ord);
  const int s = sign == SignConvention::OLP ? 1 : -1;
  return {Family::PowTriCube, MatrixKind::Laplacian, n, ord,
          detail::pairwise<Scalar>(layout.size(), [&](auto i, auto j) {
            if (i == j) return s * layout.degree(i);
            return layout.adjacent(i, j) ? -s : 0;
          })};
}

/// {2^n}-cube: Hamming distance between the addresses of all 3^n vertices.
/// Distinct vertices sharing an address are at distance 0.
template <typename Scalar = double>
BasicGraphMatrix<Scalar> pow_hamming_matrix(int n, const Ordering& ordering = Ordering::ternary_natural()) {
  const Ordering ord = detail::default_ternary(ordering);
  const auto layout = detail::ternary_layout(n, ord);
  return {Family::PowHammingCube, MatrixKind::Distance, n, ord,
          detail::pairwise<Scalar>(layout.size(),
                                   [&](auto i, auto j) { return layout.address_distance(i, j); })};
}

/// Runtime dispatch used by the CLI.
GraphMatrix build_family(Family family, int n, const Ordering& ordering);

/// Degree of the regular [n]-cube, n + C(n,2) = n(n+1)/2.
inline int regular_tricube_degree(int n) { return n * (n + 1) / 2; }

/// Number of k-faces of the 2^n-cube, C(n,k) 3^(n-k) 2^k.
BigInt face_count(int n, int k);
/// Sum over k of face_count; equals 5^n.
BigInt face_total(int n);

/// Hierholzer circuit over the regular [n]-cube (positions under `ordering`).
/// Empty when the common degree n(n+1)/2 is odd. The sequence closes on its
/// first vertex, so it has edge_count + 1 entries.
std::optional<std::vector<std::size_t>> eulerian_circuit(int n, const Ordering& ordering = Ordering::binary());

/// True iff `circuit` is closed and uses every edge of `adjacency` exactly once.
bool is_eulerian_circuit(const DenseMatrix<double>& adjacency, const std::vector<std::size_t>& circuit);

}  // namespace cubelab
