#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cubelab/cubegraphs.hpp"
#include "cubelab/error.hpp"
#include "cubelab/spectra.hpp"
#include "oracles.hpp"

using namespace cubelab;

TEST_CASE("eigenpairs have small residuals and the eigenvalues sum to the trace") {
  const std::vector<GraphMatrix> mats{tricube_laplacian(5), hamming_distance_matrix(5, Ordering::gray()),
                                      regular_tricube_adjacency(5), pow_cube_adjacency(4), pow_tricube_laplacian(4),
                                      pow_hamming_matrix(4)};
  for (const auto& m : mats) {
    const Spectrum s = eig_sym(m);
    const double norm2 = s.values.cwiseAbs().maxCoeff();
    CHECK(max_residual(m.entries, s) <= 1e-8 * std::max(norm2, 1.0));
    CHECK(std::abs(s.values.sum() - m.entries.trace()) <= 1e-8 * m.size());
    CHECK((s.vectors.transpose() * s.vectors - Eigen::MatrixXd::Identity(m.size(), m.size())).cwiseAbs().maxCoeff() < 1e-10);
    REQUIRE(s.source);
    CHECK(s.source->family == m.family);
  }
}

TEST_CASE("values-only solves skip eigenvectors") {
  const Spectrum s = eig_sym(tricube_laplacian(3), 1e-6, false);
  CHECK_FALSE(s.has_vectors());
  CHECK_THROWS_AS(max_residual(tricube_laplacian(3).entries, s), PreconditionError);
}

TEST_CASE("eig_sym rejects non-symmetric and empty input") {
  Eigen::MatrixXd M(2, 2);
  M << 1, 2, 0, 1;
  CHECK_THROWS_AS(eig_sym(M), PreconditionError);
  CHECK_THROWS_AS(eig_sym(Eigen::MatrixXd(0, 0)), PreconditionError);
  CHECK_THROWS_AS(eig_sym(Eigen::MatrixXd(2, 3)), PreconditionError);
}

TEST_CASE("clustering groups values within tolerance") {
  Eigen::VectorXd v(6);
  v << 0.0, 1e-9, 1.0, 1.0 + 5e-7, 2.0, 3.0;
  const auto c = cluster_values(v, 1e-6);
  REQUIRE(c.size() == 4);
  CHECK(c[0].multiplicity == 2);
  CHECK(c[1].multiplicity == 2);
  CHECK(c[1].value == doctest::Approx(1.00000025));
  CHECK(c[3].value == 3.0);
}

TEST_CASE("lattice classification") {
  const Spectrum s = eig_sym(tricube_laplacian(4), 1e-6, false);
  const auto lattice = classify_lattice(s, 2.0, 1e-6);
  REQUIRE(lattice);
  for (int k = 0; k <= 4; ++k) CHECK(lattice->at(k) == static_cast<int>(oracle::choose(4, k)));
  CHECK_FALSE(classify_lattice(s, 3.0, 1e-6));
  CHECK_THROWS_AS(classify_lattice(s, 0.0, 1e-6), PreconditionError);
}

TEST_CASE("spectral statistics") {
  const auto st = spectral_stats(eig_sym(pow_tricube_laplacian(3), 1e-6, false));
  CHECK(st.radius == doctest::Approx(9.0));
  CHECK(st.spectral_gap.value() == doctest::Approx(2.0));
  CHECK(st.eigengap.value() == doctest::Approx(1.0));
  CHECK(st.trace == doctest::Approx(pow_tricube_laplacian(3).entries.trace()));
  Eigen::MatrixXd single = Eigen::MatrixXd::Identity(3, 3);
  const auto flat = spectral_stats(eig_sym(single));
  CHECK_FALSE(flat.eigengap);
  CHECK_FALSE(flat.spectral_gap);
}

TEST_CASE("exchange matrix and centrosymmetry") {
  const auto J = exchange_matrix<int>(3);
  CHECK(J(0, 2) == 1);
  CHECK(J(1, 1) == 1);
  CHECK(J(0, 0) == 0);
  const auto D = hamming_distance_matrix<int>(4).entries;
  CHECK(centrosymmetry_defect(D) == 0);
  CHECK((J * J).isIdentity());
  Eigen::MatrixXd A(2, 2);
  A << 1, 2, 2, 3;
  CHECK_FALSE(is_bisymmetric(A));
}

TEST_CASE("block split of the [2]-cube under both orderings") {
  // Binary order: the reversal maps vertex i to 3 - i.
  const auto bin = centro_block_diagonalize(tricube_laplacian(2).entries);
  CHECK(bin.off_diagonal_norm < 1e-12);
  const auto minus_bin = eig_sym(bin.minus_block).values;
  CHECK(minus_bin(0) == doctest::Approx(2.0));
  CHECK(minus_bin(1) == doctest::Approx(2.0));
  const auto plus_bin = eig_sym(bin.plus_block).values;
  CHECK(plus_bin(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(plus_bin(1) == doctest::Approx(4.0));

  const auto gray = centro_block_diagonalize(tricube_laplacian(2, Ordering::gray()).entries);
  CHECK(gray.off_diagonal_norm < 1e-12);
  const auto minus_gray = eig_sym(gray.minus_block).values;
  const auto plus_gray = eig_sym(gray.plus_block).values;
  CHECK(minus_gray(0) == doctest::Approx(2.0));
  CHECK(minus_gray(1) == doctest::Approx(4.0));
  CHECK(plus_gray(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(plus_gray(1) == doctest::Approx(2.0));
}

TEST_CASE("block split of odd-size matrices keeps the centre in the plus block") {
  const auto P = pow_tricube_laplacian(2).entries;
  const auto b = centro_block_diagonalize(P);
  CHECK(b.minus_block.rows() == 4);
  CHECK(b.plus_block.rows() == 5);
  CHECK(b.plus_block(0, 0) == doctest::Approx(P(4, 4)));
  CHECK(b.off_diagonal_norm < 1e-12);
  CHECK((b.transform * b.transform.transpose()).isIdentity(1e-12));
  Eigen::MatrixXd asym(3, 3);
  asym << 1, 0, 0, 0, 2, 0, 0, 0, 3;
  CHECK_THROWS_AS(centro_block_diagonalize(asym), PreconditionError);
}

TEST_CASE("Ramanujan check") {
  const auto small = ramanujan_check(regular_tricube_adjacency(4).entries, 10);
  CHECK(small.is_ramanujan);
  CHECK(small.max_nontrivial == doctest::Approx(2.0));
  CHECK(small.bound == doctest::Approx(6.0));
  const auto big = ramanujan_check(regular_tricube_adjacency(7).entries, 28);
  CHECK_FALSE(big.is_ramanujan);
  CHECK(big.max_nontrivial == doctest::Approx(14.0));
  // The n-cube is bipartite: both -n and n are trivial.
  CHECK(ramanujan_check(ncube_adjacency(5).entries, 5).max_nontrivial == doctest::Approx(3.0));
  CHECK_THROWS_AS(ramanujan_check(regular_tricube_adjacency(4).entries, 9), PreconditionError);
}

TEST_CASE("eigenvector identity holds for random bases") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> d;
  for (int n = 1; n <= 4; ++n) {
    const auto L = tricube_laplacian(n).entries;
    for (int t = 0; t < 5; ++t) {
      const Eigen::MatrixXd B = Eigen::MatrixXd::NullaryExpr(L.rows(), L.rows() - 1, [&] { return d(rng); });
      const auto r = eig_identity_check(L, B);
      CHECK(r.agree);
      CHECK(r.lhs == doctest::Approx((B.transpose() * L * B).determinant()).epsilon(1e-9));
      // p'(0) = (-1)^(N-1) times the product of the nonzero eigenvalues.
      CHECK(r.char_poly_derivative == doctest::Approx((L.rows() % 2 ? 1.0 : -1.0) * r.product_nonzero));
    }
  }
}

TEST_CASE("eigenvector identity needs a simple zero eigenvalue") {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(3, 3);
  L(0, 0) = 1;
  CHECK_THROWS_AS(eig_identity_check(L, Eigen::MatrixXd::Ones(3, 2)), PreconditionError);
  CHECK_THROWS_AS(eig_identity_check(tricube_laplacian(2).entries, Eigen::MatrixXd::Ones(4, 4)), PreconditionError);
}
