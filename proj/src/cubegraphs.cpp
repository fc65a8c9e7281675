#include "cubelab/cubegraphs.hpp"

#include <algorithm>
#include <cstdlib>

namespace cubelab {

std::string to_string(Family family) {
  switch (family) {
    case Family::NCube: return "ncube";
    case Family::HammingCube: return "hamming";
    case Family::TriCube: return "tricube";
    case Family::RegularTriCube: return "regtricube";
    case Family::PowCube: return "pow";
    case Family::PowTriCube: return "powtri";
    case Family::PowHammingCube: return "powhamming";
  }
  return "unknown";
}

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Distance: return "distance";
    case MatrixKind::Laplacian: return "laplacian";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::NCube, Family::HammingCube, Family::TriCube, Family::RegularTriCube,
                   Family::PowCube, Family::PowTriCube, Family::PowHammingCube})
    if (to_string(f) == name) return f;
  throw PreconditionError("unknown family '" + std::string(name) + "'");
}

MatrixKind kind_of(Family family) {
  switch (family) {
    case Family::NCube:
    case Family::RegularTriCube:
    case Family::PowCube: return MatrixKind::Adjacency;
    case Family::HammingCube:
    case Family::PowHammingCube: return MatrixKind::Distance;
    case Family::TriCube:
    case Family::PowTriCube: return MatrixKind::Laplacian;
  }
  return MatrixKind::Adjacency;
}

bool is_ternary_family(Family family) {
  return family == Family::PowCube || family == Family::PowTriCube || family == Family::PowHammingCube;
}

namespace detail {

BinaryLayout binary_layout(int n, const Ordering& ordering) {
  if (n < 1) throw PreconditionError("dimension must be >= 1, got " + std::to_string(n));
  if (n > 14) throw PreconditionError("dense 2^n matrices are limited to n <= 14");
  return {binary_positions(n, ordering)};
}

TernaryLayout ternary_layout(int n, const Ordering& ordering) {
  if (n < 1) throw PreconditionError("dimension must be >= 1, got " + std::to_string(n));
  if (n > 9) throw PreconditionError("dense 3^n matrices are limited to n <= 9");
  TernaryLayout layout;
  layout.n = n;
  layout.index = ternary_ordering(n, ordering);
  layout.address.reserve(layout.index.size());
  for (std::size_t m : layout.index) layout.address.push_back(ternary_vertex(n, m).address.word());
  return layout;
}

bool TernaryLayout::adjacent(Eigen::Index i, Eigen::Index j) const {
  std::size_t a = index[static_cast<std::size_t>(i)];
  std::size_t b = index[static_cast<std::size_t>(j)];
  int steps = 0;
  for (int k = 0; k < n; ++k) {
    const int da = static_cast<int>(a % 3);
    const int db = static_cast<int>(b % 3);
    a /= 3;
    b /= 3;
    if (da == db) continue;
    // -1 <-> +1 is not an edge: only steps touching the origin coordinate.
    if (std::abs(da - db) != 1 || ++steps > 1) return false;
  }
  return steps == 1;
}

}  // namespace detail

GraphMatrix build_family(Family family, int n, const Ordering& ordering) {
  switch (family) {
    case Family::NCube: return ncube_adjacency(n, ordering);
    case Family::HammingCube: return hamming_distance_matrix(n, ordering);
    case Family::TriCube: return tricube_laplacian(n, ordering);
    case Family::RegularTriCube: return regular_tricube_adjacency(n, ordering);
    case Family::PowCube: return pow_cube_adjacency(n, ordering);
    case Family::PowTriCube: return pow_tricube_laplacian(n, ordering);
    case Family::PowHammingCube: return pow_hamming_matrix(n, ordering);
  }
  throw PreconditionError("unknown family");
}

BigInt face_count(int n, int k) {
  if (n < 0) throw PreconditionError("face_count: n must be >= 0");
  if (k < 0 || k > n)
    throw PreconditionError("face_count: k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  return binomial(n, k) * big_pow(3, static_cast<unsigned>(n - k)) * big_pow(2, static_cast<unsigned>(k));
}

BigInt face_total(int n) {
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += face_count(n, k);
  return total;
}

std::optional<std::vector<std::size_t>> eulerian_circuit(int n, const Ordering& ordering) {
  if (n < 2) throw PreconditionError("eulerian_circuit needs n >= 2");
  if (regular_tricube_degree(n) % 2 != 0) return std::nullopt;

  const auto adj = regular_tricube_adjacency<int>(n, ordering).entries;
  const std::size_t size = static_cast<std::size_t>(adj.rows());

  // Edge list with per-vertex incidence in ascending neighbour order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> incident(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      if (adj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) != 0) {
        incident[i].push_back(edges.size());
        incident[j].push_back(edges.size());
        edges.emplace_back(i, j);
      }
  for (auto& list : incident)
    std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return edges[a] < edges[b];
    });

  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(size, 0);
  std::vector<std::size_t> stack{0};
  std::vector<std::size_t> circuit;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    auto& c = cursor[v];
    while (c < incident[v].size() && used[incident[v][c]]) ++c;
    if (c == incident[v].size()) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    const std::size_t e = incident[v][c];
    used[e] = true;
    stack.push_back(edges[e].first == v ? edges[e].second : edges[e].first);
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != edges.size() + 1)
    throw StructuralError("regular [n]-cube graph is not connected");
  return circuit;
}

bool is_eulerian_circuit(const DenseMatrix<double>& adjacency, const std::vector<std::size_t>& circuit) {
  if (circuit.size() < 2 || circuit.front() != circuit.back()) return false;
  const Eigen::Index size = adjacency.rows();
  DenseMatrix<int> remaining = DenseMatrix<int>::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      if (i != j && adjacency(i, j) != 0) remaining(i, j) = 1;
  for (std::size_t s = 0; s + 1 < circuit.size(); ++s) {
    const auto a = static_cast<Eigen::Index>(circuit[s]);
    const auto b = static_cast<Eigen::Index>(circuit[s + 1]);
    if (a >= size || b >= size || remaining(a, b) == 0) return false;
    remaining(a, b) = 0;
    remaining(b, a) = 0;
  }
  return remaining.sum() == 0;
}

}  // namespace cubelab
