#include "cubelab/meshcotan.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cubelab/bitspace.hpp"
#include "cubelab/error.hpp"

namespace cubelab {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double kSnapTol = 1e-12;

double corner_angle(const Eigen::VectorXd& apex, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const Eigen::VectorXd u = (a - apex).normalized();
  const Eigen::VectorXd v = (b - apex).normalized();
  return std::acos(std::clamp(u.dot(v), -1.0, 1.0));
}

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

/// Opposite angles of every edge, keyed by (min, max) vertex index.
std::map<EdgeKey, std::vector<double>> opposite_angles(const TriMesh& mesh) {
  std::map<EdgeKey, std::vector<double>> angles;
  for (Eigen::Index t = 0; t < mesh.F.rows(); ++t) {
    for (int c = 0; c < 3; ++c) {
      const int apex = mesh.F(t, c);
      const int a = mesh.F(t, (c + 1) % 3);
      const int b = mesh.F(t, (c + 2) % 3);
      angles[edge_key(a, b)].push_back(corner_angle(mesh.V.row(apex).transpose(), mesh.V.row(a).transpose(),
                                                    mesh.V.row(b).transpose()));
    }
  }
  return angles;
}

Eigen::MatrixXd assemble(Eigen::Index size, const std::map<EdgeKey, std::vector<double>>& angles,
                         SignConvention sign) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(size, size);
  for (const auto& [edge, alphas] : angles) {
    const double w = cotan_weight(alphas, sign);
    L(edge.first, edge.second) -= w;
    L(edge.second, edge.first) -= w;
    L(edge.first, edge.first) += w;
    L(edge.second, edge.second) += w;
  }
  return L;
}

}  // namespace

void TriMesh::validate() const {
  for (Eigen::Index t = 0; t < F.rows(); ++t) {
    for (int c = 0; c < 3; ++c)
      if (F(t, c) < 0 || F(t, c) >= V.rows())
        throw PreconditionError("triangle " + std::to_string(t) + " references vertex " +
                                std::to_string(F(t, c)) + " out of range");
    const Eigen::VectorXd e1 = V.row(F(t, 1)) - V.row(F(t, 0));
    const Eigen::VectorXd e2 = V.row(F(t, 2)) - V.row(F(t, 0));
    // Squared area via the Gram determinant works in any ambient dimension.
    const double gram = e1.squaredNorm() * e2.squaredNorm() - std::pow(e1.dot(e2), 2);
    if (gram <= 1e-24) throw PreconditionError("triangle " + std::to_string(t) + " is degenerate");
  }
}

double cotan_weight(std::span<const double> opposite_angles, SignConvention sign) {
  if (opposite_angles.empty()) throw PreconditionError("cotan_weight: no opposite angle supplied");
  for (double a : opposite_angles)
    if (!(a > 0.0 && a < std::numbers::pi))
      throw PreconditionError("cotan_weight: angle " + std::to_string(a) + " outside (0, pi)");

  double w = 0.0;
  if (opposite_angles.size() <= 2) {
    for (double a : opposite_angles) w += 0.5 / std::tan(a);
  } else {
    const auto [lo, hi] = std::minmax_element(opposite_angles.begin(), opposite_angles.end());
    if (*hi - *lo > kAngleTol)
      throw PreconditionError("cotan_weight: " + std::to_string(opposite_angles.size()) +
                              " incident triangles with differing opposite angles; the weight is ambiguous");
    w = 1.0 / std::tan(opposite_angles.front());
  }
  return sign == SignConvention::OLP ? w : -w;
}

Eigen::MatrixXd build_wdm(const TriMesh& mesh, SignConvention sign) {
  mesh.validate();
  const auto angles = opposite_angles(mesh);
  for (const auto& [edge, alphas] : angles)
    if (alphas.size() > 2)
      throw PreconditionError("edge (" + std::to_string(edge.first) + ", " + std::to_string(edge.second) +
                              ") has " + std::to_string(alphas.size()) + " incident triangles");
  return assemble(mesh.V.rows(), angles, sign);
}

TriMesh cube_face_triangulation(int n, Arrangement arrangement) {
  if (n < 2) throw PreconditionError("the [1]-cube has no triangulation; n must be >= 2");
  if (n > 12) throw PreconditionError("cube_face_triangulation is limited to n <= 12");
  const int count = 1 << n;
  TriMesh mesh;
  mesh.V.resize(count, n);
  for (int v = 0; v < count; ++v)
    for (int k = 0; k < n; ++k) mesh.V(v, k) = (v >> k) & 1;

  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int base = 0; base < count; ++base) {
        if (base & ((1 << i) | (1 << j))) continue;
        // Corners of the face with free axes i, j; c00 and c11 share parity.
        const int c00 = base, c01 = base | (1 << i), c10 = base | (1 << j), c11 = c01 | (1 << j);
        const bool c00_even = std::popcount(static_cast<unsigned>(c00)) % 2 == 0;
        const bool emit_00_11 = arrangement == Arrangement::Both || (arrangement == Arrangement::Even) == c00_even;
        const bool emit_01_10 = arrangement == Arrangement::Both || (arrangement == Arrangement::Even) != c00_even;
        if (emit_00_11) {
          tris.push_back({c00, c01, c11});
          tris.push_back({c00, c11, c10});
        }
        if (emit_01_10) {
          tris.push_back({c01, c11, c10});
          tris.push_back({c01, c10, c00});
        }
      }
  mesh.F.resize(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int c = 0; c < 3; ++c) mesh.F(static_cast<Eigen::Index>(t), c) = tris[t][static_cast<std::size_t>(c)];
  return mesh;
}

GraphMatrix build_cube_cotan_geometric(int n, Arrangement arrangement, SignConvention sign, bool snap) {
  const TriMesh mesh = cube_face_triangulation(n, arrangement);
  Eigen::MatrixXd L = assemble(mesh.V.rows(), opposite_angles(mesh), sign);
  if (snap)
    L = L.unaryExpr([](double x) {
      const double half = std::round(2.0 * x) / 2.0;
      return std::abs(x - half) <= kSnapTol ? half : x;
    });
  return {Family::TriCube, MatrixKind::Laplacian, n, Ordering::binary(), std::move(L)};
}

bool is_delaunay_edge(double alpha, double beta) {
  for (double a : {alpha, beta})
    if (!(a > 0.0 && a < std::numbers::pi)) throw PreconditionError("is_delaunay_edge: angle outside (0, pi)");
  return alpha + beta <= std::numbers::pi + kAngleTol;
}

TriMesh read_trimesh(std::istream& in) {
  std::vector<std::vector<double>> verts;
  std::vector<std::array<int, 3>> tris;
  std::string line;
  bool in_triangles = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      if (!verts.empty()) in_triangles = true;
      continue;
    }
    std::istringstream fields(line);
    if (!in_triangles) {
      std::vector<double> row;
      double x;
      while (fields >> x) row.push_back(x);
      if (!fields.eof() || row.empty() || (!verts.empty() && row.size() != verts.front().size()))
        throw PreconditionError("trimesh line " + std::to_string(lineno) + ": malformed vertex");
      verts.push_back(std::move(row));
    } else {
      std::array<int, 3> t{};
      std::string extra;
      if (!(fields >> t[0] >> t[1] >> t[2]) || (fields >> extra))
        throw PreconditionError("trimesh line " + std::to_string(lineno) + ": malformed triangle");
      tris.push_back(t);
    }
  }
  TriMesh mesh;
  const Eigen::Index dim = verts.empty() ? 0 : static_cast<Eigen::Index>(verts.front().size());
  mesh.V.resize(static_cast<Eigen::Index>(verts.size()), dim);
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (Eigen::Index k = 0; k < dim; ++k) mesh.V(static_cast<Eigen::Index>(v), k) = verts[v][static_cast<std::size_t>(k)];
  mesh.F.resize(static_cast<Eigen::Index>(tris.size()), 3);
  for (std::size_t t = 0; t < tris.size(); ++t)
    for (int c = 0; c < 3; ++c) mesh.F(static_cast<Eigen::Index>(t), c) = tris[t][static_cast<std::size_t>(c)];
  mesh.validate();
  return mesh;
}

void write_trimesh(std::ostream& out, const TriMesh& mesh) {
  out << std::setprecision(17);
  for (Eigen::Index v = 0; v < mesh.V.rows(); ++v) {
    for (Eigen::Index k = 0; k < mesh.V.cols(); ++k) out << (k ? " " : "") << mesh.V(v, k);
    out << '\n';
  }
  out << '\n';
  for (Eigen::Index t = 0; t < mesh.F.rows(); ++t) out << mesh.F(t, 0) << ' ' << mesh.F(t, 1) << ' ' << mesh.F(t, 2) << '\n';
}

}  // namespace cubelab
