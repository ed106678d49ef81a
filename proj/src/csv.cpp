#include "modal_barrier/csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "modal_barrier/errors.hpp"

namespace modal_barrier {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_edge_values_csv(std::ostream& out, const Graph& g, const EdgeVector& values,
                           const std::string& value_column) {
  if (values.size() != g.edge_count()) throw ValidationError("edge vector length must equal edge count");
  out << "edge_tail,edge_head," << value_column << '\n';
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    out << g.label_of(e.tail) << ',' << g.label_of(e.head) << ',' << format_double(values[k]) << '\n';
  }
}

EdgeVector read_edge_values_csv(std::istream& in, const Graph& g, EdgeVectorKind kind) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("edge CSV is empty");
  std::vector<double> values(g.edge_count());
  std::vector<char> seen(g.edge_count(), 0);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string ta, tb, tv;
    if (!std::getline(ls, ta, ',') || !std::getline(ls, tb, ',') || !std::getline(ls, tv))
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'tail,head,value'");
    std::int64_t la, lb;
    double v;
    try {
      la = std::stoll(ta);
      lb = std::stoll(tb);
      v = std::stod(tv);
    } catch (const std::exception&) {
      throw ValidationError("line " + std::to_string(line_no) + ": unparseable edge CSV row");
    }
    const int k = g.edge_index(g.vertex_of_label(la), g.vertex_of_label(lb));
    if (k < 0)
      throw ValidationError("line " + std::to_string(line_no) + ": edge (" + ta + ", " + tb + ") not in the graph");
    if (seen[k]) throw ValidationError("line " + std::to_string(line_no) + ": edge (" + ta + ", " + tb + ") repeated");
    seen[k] = 1;
    values[k] = v;
  }
  for (int k = 0; k < g.edge_count(); ++k)
    if (!seen[k])
      throw ValidationError("edge (" + std::to_string(g.label_of(g.edge(k).tail)) + ", " +
                            std::to_string(g.label_of(g.edge(k).head)) + ") missing from edge CSV");
  switch (kind) {
    case EdgeVectorKind::gradient: return EdgeVector::gradient(std::move(values));
    case EdgeVectorKind::resistance: return EdgeVector::resistance(std::move(values));
    case EdgeVectorKind::weight: return EdgeVector::weight(std::move(values));
  }
  throw ValidationError("unknown edge vector kind");
}

void write_series_csv(std::ostream& out, const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& series) {
  if (columns.size() != series.size() + 1)
    throw ValidationError("series CSV needs one label column plus one name per series");
  for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
  out << '\n';
  const std::size_t rows = series.empty() ? 0 : series.front().size();
  for (const auto& s : series)
    if (s.size() != rows) throw ValidationError("series CSV columns must share a length");
  for (std::size_t r = 0; r < rows; ++r) {
    out << r;
    for (const auto& s : series) out << ',' << format_double(s[r]);
    out << '\n';
  }
}

}  // namespace modal_barrier
