#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cubelab/graph_matrix.hpp"
#include "cubelab/spectra.hpp"

namespace cubelab {

/// Shortest round-tripping decimal; integral values print without a point.
std::string format_number(double value);

/// Header "family,kind,n,ordering,N", one metadata row, then N matrix rows.
void write_matrix_csv(std::ostream& out, const GraphMatrix& matrix);

nlohmann::ordered_json matrix_to_json(const GraphMatrix& matrix);

/// Columns value,multiplicity,cluster_representative; one row per eigenvalue.
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

}  // namespace cubelab
