#pragma once

#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "cubelab/graph_matrix.hpp"

namespace cubelab {

/// A run of eigenvalues grouped under the cluster tolerance.
struct Cluster {
  double value = 0.0;  // mean of the members
  int multiplicity = 0;
  double min = 0.0;
  double max = 0.0;
};

struct MatrixInfo {
  Family family;
  MatrixKind kind;
  int n;
  Ordering ordering;
};

struct Spectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns; empty unless requested
  std::vector<Cluster> clusters;
  double tolerance = 1e-6;
  std::optional<MatrixInfo> source;

  bool has_vectors() const { return vectors.size() != 0; }
  Eigen::Index size() const { return values.size(); }
};

constexpr double kDefaultClusterTol = 1e-6;
constexpr double kSymmetryTol = 1e-10;

/// Greedy grouping of ascending values: a value joins the current cluster
/// while it is within `tol` of that cluster's smallest member.
std::vector<Cluster> cluster_values(const Eigen::VectorXd& ascending, double tol);

Spectrum eig_sym(const Eigen::MatrixXd& M, double cluster_tol = kDefaultClusterTol, bool with_vectors = true);
Spectrum eig_sym(const GraphMatrix& M, double cluster_tol = kDefaultClusterTol, bool with_vectors = true);

/// max_i ||M v_i - lambda_i v_i||_2 over the returned pairs.
double max_residual(const Eigen::MatrixXd& M, const Spectrum& spectrum);

/// Multiplicity of each lattice point k*unit, if every eigenvalue sits
/// within `tol` of one.
std::optional<std::map<int, int>> classify_lattice(const Spectrum& spectrum, double unit, double tol);

struct SpectralStats {
  double radius = 0.0;
  std::optional<double> eigengap;      // smallest gap between distinct values
  std::optional<double> spectral_gap;  // largest minus second-largest distinct value
  double trace = 0.0;
};

SpectralStats spectral_stats(const Spectrum& spectrum);

template <typename Scalar = double>
DenseMatrix<Scalar> exchange_matrix(Eigen::Index size) {
  return DenseMatrix<Scalar>::Identity(size, size).rowwise().reverse();
}

/// ||M J - J M||_max without forming J.
template <typename Derived>
typename Derived::Scalar centrosymmetry_defect(const Eigen::MatrixBase<Derived>& M) {
  return (M - M.reverse()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_bisymmetric(const Eigen::MatrixBase<Derived>& M, double tol = kSymmetryTol) {
  if (M.rows() != M.cols()) return false;
  return static_cast<double>((M - M.transpose()).cwiseAbs().maxCoeff()) <= tol &&
         static_cast<double>(centrosymmetry_defect(M)) <= tol;
}

/// Orthogonal split of a bisymmetric matrix into the blocks acting on
/// antisymmetric (Jx = -x) and symmetric (Jx = x) vectors.
struct CentroBlocks {
  Eigen::MatrixXd minus_block;  // floor(N/2) square
  Eigen::MatrixXd plus_block;   // ceil(N/2) square; center row first when N is odd
  Eigen::MatrixXd transform;    // K, with K M K^T block diagonal
  double off_diagonal_norm = 0.0;
};

Eigen::MatrixXd centro_transform(Eigen::Index size);
CentroBlocks centro_block_diagonalize(const Eigen::MatrixXd& M);

struct RamanujanReport {
  bool is_ramanujan = false;
  double max_nontrivial = 0.0;
  double bound = 0.0;
};

/// Nontrivial eigenvalues exclude every eigenvalue with |lambda| = degree.
RamanujanReport ramanujan_check(const Eigen::MatrixXd& adjacency, int degree);

/// det(B^T L B) against the kernel-vector form of the same determinant.
struct IdentityCheck {
  double lhs = 0.0;                  // det(B^T L B)
  double rhs = 0.0;                  // product_nonzero * det([B | x])^2
  double product_nonzero = 0.0;      // product of the nonzero eigenvalues
  double char_poly_derivative = 0.0; // p'(0) for p(t) = prod (t - lambda_i)
  double det_augmented = 0.0;        // det([B | x])
  bool agree = false;
};

IdentityCheck eig_identity_check(const Eigen::MatrixXd& L, const Eigen::MatrixXd& B);

}  // namespace cubelab
