#include "cubelab/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace cubelab {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  if (std::abs(value) < 1e15 && value == std::round(value))
    return std::to_string(static_cast<long long>(value));
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void write_matrix_csv(std::ostream& out, const GraphMatrix& m) {
  out << "family,kind,n,ordering,N\n"
      << to_string(m.family) << ',' << to_string(m.kind) << ',' << m.n << ',' << to_string(m.ordering) << ','
      << m.size() << '\n';
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    for (Eigen::Index j = 0; j < m.size(); ++j) out << (j ? "," : "") << format_number(m.entries(i, j));
    out << '\n';
  }
}

nlohmann::ordered_json matrix_to_json(const GraphMatrix& m) {
  nlohmann::ordered_json j;
  j["family"] = to_string(m.family);
  j["kind"] = to_string(m.kind);
  j["n"] = m.n;
  j["ordering"] = to_string(m.ordering);
  j["N"] = m.size();
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index k = 0; k < m.size(); ++k) {
      const double v = m.entries(i, k);
      if (v == std::round(v)) row.push_back(static_cast<long long>(v));
      else row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "value,multiplicity,cluster_representative\n";
  Eigen::Index i = 0;
  for (const Cluster& c : s.clusters)
    for (int k = 0; k < c.multiplicity; ++k, ++i)
      out << format_number(s.values(i)) << ',' << c.multiplicity << ',' << format_number(c.value) << '\n';
}

}  // namespace cubelab
