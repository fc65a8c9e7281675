#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "cubelab/ordering.hpp"

namespace cubelab {

enum class Family { NCube, HammingCube, TriCube, RegularTriCube, PowCube, PowTriCube, PowHammingCube };
enum class MatrixKind { Adjacency, Distance, Laplacian };

/// OLP: positive cotan weights (PSD Laplacian). OLN: every weight negated.
enum class SignConvention { OLP, OLN };

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense square matrix of one of the cube families, tagged with how it was built.
template <typename Scalar>
struct BasicGraphMatrix {
  Family family = Family::NCube;
  MatrixKind kind = MatrixKind::Adjacency;
  int n = 0;
  Ordering ordering;
  DenseMatrix<Scalar> entries;

  Eigen::Index size() const { return entries.rows(); }

  template <typename NewScalar>
  BasicGraphMatrix<NewScalar> cast() const {
    return {family, kind, n, ordering, entries.template cast<NewScalar>()};
  }
};

using GraphMatrix = BasicGraphMatrix<double>;

std::string to_string(Family family);
std::string to_string(MatrixKind kind);

/// CLI names: ncube, hamming, tricube, regtricube, pow, powtri, powhamming.
Family parse_family(std::string_view name);

MatrixKind kind_of(Family family);

/// True for the 3^n-vertex families.
bool is_ternary_family(Family family);

}  // namespace cubelab
