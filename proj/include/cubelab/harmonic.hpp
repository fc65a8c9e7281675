#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace cubelab {

/// Unit kernel vector of a connected-graph Laplacian (sign chosen so the
/// entries are positive). Throws StructuralError when the kernel is not
/// one-dimensional or not constant.
std::vector<Eigen::VectorXd> kernel_basis(const Eigen::MatrixXd& L, double tol = 1e-9);

/// Moore-Penrose pseudoinverse of a symmetric matrix, eigenvalues with
/// magnitude below `tol` treated as zero.
Eigen::MatrixXd symmetric_pinv(const Eigen::MatrixXd& L, double tol = 1e-9);

struct PoissonSolution {
  Eigen::VectorXd u;
  double residual = 0.0;  // ||L u - f||_2
  double energy = 0.0;    // u^T L u / 2
  double norm_l2 = 0.0;
  std::optional<Eigen::VectorXd> pattern;  // the +-1 right-hand side, when searched
};

/// Minimum-norm (pseudoinverse) solution of L u = f. When f has a component
/// along the kernel the least-squares solution is returned and the residual
/// reports the obstruction.
PoissonSolution solve_min_norm(const Eigen::MatrixXd& L, const Eigen::VectorXd& f);

struct EnergySearch {
  double best_energy = 0.0;
  /// Zero-based positions (binary order) carrying +1 in each minimising
  /// pattern, sorted lexicographically.
  std::vector<std::vector<int>> best_patterns;
  std::vector<double> energies;  // one per balanced pattern, enumeration order
  double best_norm_l2 = 0.0;
};

/// Exhaustive search over balanced +-1 right-hand sides on the binary
/// ordered [n]-cube, n <= 4.
EnergySearch min_energy_search(int n);

}  // namespace cubelab
