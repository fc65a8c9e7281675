#pragma once

#include <iosfwd>
#include <span>

#include <Eigen/Dense>

#include "cubelab/graph_matrix.hpp"

namespace cubelab {

/// Triangle mesh embedded in R^d: one vertex per row of V, one triangle
/// (zero-based vertex indices) per row of F.
struct TriMesh {
  Eigen::MatrixXd V;
  Eigen::MatrixXi F;

  /// Throws PreconditionError on out-of-range indices or zero-area triangles.
  void validate() const;
};

/// Which diagonal of each 2-face is drawn: the one joining the two corners of
/// even address weight, the one joining the odd corners, or both.
enum class Arrangement { Even, Odd, Both };

/// Weight of an edge from the angles opposite to it.
///
/// One or two angles give half the sum of their cotangents. Cube boundary
/// edges with n > 3 have more than two incident triangles; those angles must
/// all coincide and the weight is that of any representative pair.
double cotan_weight(std::span<const double> opposite_angles, SignConvention sign = SignConvention::OLP);

/// Weakly defined discrete Laplace matrix of a mesh with at most two
/// triangles per edge.
Eigen::MatrixXd build_wdm(const TriMesh& mesh, SignConvention sign = SignConvention::OLP);

/// Unit n-cube corners (vertex i sits at the binary digits of i) with the
/// requested diagonals on each of the C(n,2) 2^(n-2) 2-faces.
TriMesh cube_face_triangulation(int n, Arrangement arrangement);

/// Cotan Laplacian of the triangulated n-cube assembled from the embedded
/// angles. With `snap`, entries within 1e-12 of a multiple of 1/2 are snapped
/// after assembly.
GraphMatrix build_cube_cotan_geometric(int n, Arrangement arrangement,
                                       SignConvention sign = SignConvention::OLP, bool snap = true);

/// E_D[u] = u^T L u / 2.
template <typename DerivedL, typename DerivedU>
double dirichlet_energy(const Eigen::MatrixBase<DerivedL>& L, const Eigen::MatrixBase<DerivedU>& u) {
  if (L.rows() != L.cols() || L.cols() != u.rows() || u.cols() != 1)
    throw std::invalid_argument("dirichlet_energy: dimension mismatch");
  return 0.5 * u.dot(L * u);
}

bool is_delaunay_edge(double alpha, double beta);

/// Plain text mesh format: one vertex per line, a blank line, then one
/// triangle per line.
TriMesh read_trimesh(std::istream& in);
void write_trimesh(std::ostream& out, const TriMesh& mesh);

}  // namespace cubelab
