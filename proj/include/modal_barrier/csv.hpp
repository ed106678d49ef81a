#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "modal_barrier/graph.hpp"

namespace modal_barrier {

/// 17 significant digits: round-trip exact for doubles.
std::string format_double(double v);

/// "edge_tail,edge_head,<value_column>" rows in canonical edge order,
/// endpoint columns carrying external vertex ids.
void write_edge_values_csv(std::ostream& out, const Graph& g, const EdgeVector& values,
                           const std::string& value_column);

/// Parse a per-edge CSV (as written by write_edge_values_csv, any row
/// order); every edge of the graph must appear exactly once.
EdgeVector read_edge_values_csv(std::istream& in, const Graph& g, EdgeVectorKind kind);

/// Header row followed by aligned columns; all columns must share a length.
void write_series_csv(std::ostream& out, const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& series);

}  // namespace modal_barrier
