#include "cubelab/spectra.hpp"

#include <cmath>
#include <string>

#include "cubelab/error.hpp"

namespace cubelab {

std::vector<Cluster> cluster_values(const Eigen::VectorXd& ascending, double tol) {
  std::vector<Cluster> out;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= ascending.size(); ++i) {
    if (i < ascending.size() && ascending(i) - ascending(start) <= tol) continue;
    const Eigen::Index count = i - start;
    out.push_back({ascending.segment(start, count).mean(), static_cast<int>(count), ascending(start),
                   ascending(i - 1)});
    start = i;
  }
  return out;
}

Spectrum eig_sym(const Eigen::MatrixXd& M, double cluster_tol, bool with_vectors) {
  if (M.rows() != M.cols()) throw PreconditionError("eig_sym: matrix is not square");
  if (M.size() == 0) throw PreconditionError("eig_sym: empty matrix");
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) throw PreconditionError("eig_sym: matrix is not symmetric (defect " + std::to_string(asym) + ")");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      M, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw StructuralError("eig_sym: eigensolver did not converge");

  Spectrum s;
  s.values = solver.eigenvalues();
  if (with_vectors) s.vectors = solver.eigenvectors();
  s.tolerance = cluster_tol;
  s.clusters = cluster_values(s.values, cluster_tol);
  return s;
}

Spectrum eig_sym(const GraphMatrix& M, double cluster_tol, bool with_vectors) {
  Spectrum s = eig_sym(M.entries, cluster_tol, with_vectors);
  s.source = MatrixInfo{M.family, M.kind, M.n, M.ordering};
  return s;
}

double max_residual(const Eigen::MatrixXd& M, const Spectrum& spectrum) {
  if (!spectrum.has_vectors()) throw PreconditionError("max_residual: spectrum carries no eigenvectors");
  const Eigen::MatrixXd R = M * spectrum.vectors - spectrum.vectors * spectrum.values.asDiagonal();
  return R.colwise().norm().maxCoeff();
}

std::optional<std::map<int, int>> classify_lattice(const Spectrum& spectrum, double unit, double tol) {
  if (!(unit > 0.0)) throw PreconditionError("classify_lattice: unit must be positive");
  std::map<int, int> counts;
  for (double v : spectrum.values) {
    const double k = std::round(v / unit);
    if (std::abs(v - k * unit) > tol) return std::nullopt;
    ++counts[static_cast<int>(k)];
  }
  return counts;
}

SpectralStats spectral_stats(const Spectrum& spectrum) {
  if (spectrum.size() == 0) throw PreconditionError("spectral_stats: empty spectrum");
  SpectralStats st;
  st.radius = spectrum.values.cwiseAbs().maxCoeff();
  st.trace = spectrum.values.sum();
  const auto& c = spectrum.clusters;
  for (std::size_t i = 1; i < c.size(); ++i) {
    const double gap = c[i].value - c[i - 1].value;
    if (!st.eigengap || gap < *st.eigengap) st.eigengap = gap;
  }
  if (c.size() >= 2) st.spectral_gap = c.back().value - c[c.size() - 2].value;
  return st;
}

Eigen::MatrixXd centro_transform(Eigen::Index size) {
  const Eigen::Index half = size / 2;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 0; i < half; ++i) {
    K(i, i) = r;
    K(i, size - 1 - i) = -r;
    K(size - half + i, i) = r;
    K(size - half + i, size - 1 - i) = r;
  }
  if (size % 2 == 1) K(half, half) = 1.0;
  return K;
}

CentroBlocks centro_block_diagonalize(const Eigen::MatrixXd& M) {
  if (!is_bisymmetric(M)) throw PreconditionError("centro_block_diagonalize: matrix is not bisymmetric");
  const Eigen::Index size = M.rows();
  const Eigen::Index half = size / 2;
  CentroBlocks blocks;
  blocks.transform = centro_transform(size);
  const Eigen::MatrixXd T = blocks.transform * M * blocks.transform.transpose();
  blocks.minus_block = T.topLeftCorner(half, half);
  blocks.plus_block = T.bottomRightCorner(size - half, size - half);
  blocks.off_diagonal_norm = T.topRightCorner(half, size - half).norm();
  return blocks;
}

RamanujanReport ramanujan_check(const Eigen::MatrixXd& adjacency, int degree) {
  const Eigen::VectorXd rows = adjacency.rowwise().sum();
  if ((rows.array() - degree).abs().maxCoeff() > 1e-9)
    throw PreconditionError("ramanujan_check: graph is not " + std::to_string(degree) + "-regular");
  const Spectrum s = eig_sym(adjacency, kDefaultClusterTol, false);
  RamanujanReport r;
  r.bound = 2.0 * std::sqrt(static_cast<double>(degree - 1));
  for (double v : s.values)
    if (std::abs(std::abs(v) - degree) > 1e-8) r.max_nontrivial = std::max(r.max_nontrivial, std::abs(v));
  r.is_ramanujan = r.max_nontrivial <= r.bound + 1e-9;
  return r;
}

IdentityCheck eig_identity_check(const Eigen::MatrixXd& L, const Eigen::MatrixXd& B) {
  const Eigen::Index size = L.rows();
  if (L.cols() != size || B.rows() != size || B.cols() != size - 1)
    throw PreconditionError("eig_identity_check: expected N x N L and N x (N-1) B");
  const Spectrum s = eig_sym(L, kDefaultClusterTol, true);
  const double zero_tol = 1e-9 * std::max(1.0, s.values.cwiseAbs().maxCoeff());
  Eigen::Index kernel = -1;
  int zeros = 0;
  for (Eigen::Index i = 0; i < size; ++i)
    if (std::abs(s.values(i)) <= zero_tol) {
      kernel = i;
      ++zeros;
    }
  if (zeros != 1)
    throw PreconditionError("eig_identity_check: zero eigenvalue must be simple, found multiplicity " +
                            std::to_string(zeros));

  IdentityCheck c;
  c.product_nonzero = 1.0;
  for (Eigen::Index i = 0; i < size; ++i)
    if (i != kernel) c.product_nonzero *= s.values(i);
  c.char_poly_derivative = ((size - 1) % 2 == 0 ? 1.0 : -1.0) * c.product_nonzero;

  Eigen::MatrixXd augmented(size, size);
  augmented << B, s.vectors.col(kernel);
  c.det_augmented = augmented.determinant();
  c.lhs = (B.transpose() * L * B).determinant();
  c.rhs = c.product_nonzero * c.det_augmented * c.det_augmented;
  c.agree = std::abs(c.lhs - c.rhs) <= 1e-6 * std::max({std::abs(c.lhs), std::abs(c.rhs), 1.0});
  return c;
}

}  // namespace cubelab
