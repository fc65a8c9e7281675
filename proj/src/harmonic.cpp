#include "cubelab/harmonic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "cubelab/cubegraphs.hpp"
#include "cubelab/error.hpp"

namespace cubelab {

std::vector<Eigen::VectorXd> kernel_basis(const Eigen::MatrixXd& L, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  const double scale = std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Eigen::VectorXd> basis;
  for (Eigen::Index i = 0; i < L.rows(); ++i)
    if (std::abs(solver.eigenvalues()(i)) <= tol * scale) basis.push_back(solver.eigenvectors().col(i));
  if (basis.size() != 1)
    throw StructuralError("kernel has dimension " + std::to_string(basis.size()) + ", expected 1");

  Eigen::VectorXd& v = basis.front();
  if (v.sum() < 0) v = -v;
  const Eigen::VectorXd constant = Eigen::VectorXd::Constant(v.size(), 1.0 / std::sqrt(double(v.size())));
  if ((v - constant).norm() > 1e-8) throw StructuralError("kernel vector is not constant");
  v = constant;
  if ((L * v).norm() > tol * scale) throw StructuralError("constant vector is not in the kernel");
  return basis;
}

Eigen::MatrixXd symmetric_pinv(const Eigen::MatrixXd& L, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(L);
  Eigen::VectorXd inv = solver.eigenvalues().unaryExpr([tol](double v) { return std::abs(v) < tol ? 0.0 : 1.0 / v; });
  return solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().transpose();
}

PoissonSolution solve_min_norm(const Eigen::MatrixXd& L, const Eigen::VectorXd& f) {
  if (L.rows() != L.cols() || L.rows() != f.size()) throw PreconditionError("solve_min_norm: dimension mismatch");
  PoissonSolution s;
  s.u = symmetric_pinv(L) * f;
  s.residual = (L * s.u - f).norm();
  s.energy = 0.5 * s.u.dot(L * s.u);
  s.norm_l2 = s.u.norm();
  return s;
}

EnergySearch min_energy_search(int n) {
  if (n < 1 || n > 4) throw PreconditionError("min_energy_search: exhaustive search supports 1 <= n <= 4");
  const Eigen::MatrixXd L = tricube_laplacian(n).entries;
  const Eigen::MatrixXd pinv = symmetric_pinv(L);
  const int size = 1 << n;
  const int half = size / 2;

  EnergySearch result;
  result.best_energy = INFINITY;
  constexpr double kTie = 1e-12;
  for (std::uint32_t mask = 0; mask < (1U << size); ++mask) {
    if (std::popcount(mask) != half) continue;
    Eigen::VectorXd f(size);
    for (int i = 0; i < size; ++i) f(i) = (mask >> i) & 1U ? 1.0 : -1.0;
    const Eigen::VectorXd u = pinv * f;
    const double energy = 0.5 * u.dot(L * u);
    result.energies.push_back(energy);

    std::vector<int> plus;
    for (int i = 0; i < size; ++i)
      if ((mask >> i) & 1U) plus.push_back(i);
    if (energy < result.best_energy - kTie) {
      result.best_energy = energy;
      result.best_norm_l2 = u.norm();
      result.best_patterns.assign(1, std::move(plus));
    } else if (std::abs(energy - result.best_energy) <= kTie) {
      result.best_patterns.push_back(std::move(plus));
    }
  }
  std::sort(result.best_patterns.begin(), result.best_patterns.end());
  return result;
}

}  // namespace cubelab
