#include "gcmforge/io.hpp"

#include "gcmforge/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gcmforge {

namespace {

std::string at(int line, int col) {
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Gcm parse_matrix(std::string_view text) {
  Rows rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string_view::npos || line[pos] == '#') {
      if (end == text.size()) break;
      continue;
    }
    std::vector<Entry> row;
    while (pos < line.size()) {
      const std::size_t stop = std::min(line.find_first_of(" \t", pos), line.size());
      Entry value = 0;
      const char* first = line.data() + pos;
      const char* last = line.data() + stop;
      if (*first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec == std::errc::result_out_of_range)
        throw Error(Errc::ParseError, at(line_no, int(pos) + 1) + ": integer out of range");
      if (ec != std::errc() || ptr != last || first == last)
        throw Error(Errc::ParseError, at(line_no, int(ptr - line.data()) + 1) +
                                          ": expected an integer");
      row.push_back(value);
      pos = line.find_first_not_of(" \t", stop);
      if (pos == std::string_view::npos) break;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(Errc::ParseError, at(line_no, 1) + ": row has " + std::to_string(row.size()) +
                                        " entries, expected " +
                                        std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  if (rows.empty()) throw Error(Errc::ParseError, at(line_no, 1) + ": no matrix rows");
  if (rows.size() != rows.front().size())
    throw Error(Errc::ParseError, at(line_no, 1) + ": " + std::to_string(rows.size()) +
                                      " rows of length " + std::to_string(rows.front().size()));
  try {
    return validate_gcm(rows);
  } catch (const Error& e) {
    throw Error(Errc::ValidationError, e.what());
  }
}

Gcm load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

void save_matrix(const Gcm& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << format_matrix(a.matrix());
}

DiagramEdge diagram_edge(const Gcm& a, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= a.dim() || j >= a.dim())
    throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")");
  if (i > j) std::swap(i, j);
  DiagramEdge e{i, j, EdgeCategory::None, a(i, j), a(j, i), std::nullopt};
  if (e.a_ij == 0) return e;
  e.mult = make_rational(e.a_ij, e.a_ji);
  const Entry lo = std::max(e.a_ij, e.a_ji);  // the entry closer to zero
  const Entry hi = std::min(e.a_ij, e.a_ji);
  if (lo == -1 && hi == -1)
    e.category = EdgeCategory::Single;
  else if (lo == -1 && hi >= -4)
    e.category = EdgeCategory::ArrowMulti;
  else if (lo == -2 && hi == -2)
    e.category = EdgeCategory::DoubleHeadedDouble;
  else
    e.category = EdgeCategory::Labeled;
  return e;
}

std::vector<DiagramEdge> diagram_edges(const Gcm& a) {
  std::vector<DiagramEdge> edges;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) {
      DiagramEdge e = diagram_edge(a, i, j);
      if (e.category != EdgeCategory::None) edges.push_back(e);
    }
  return edges;
}

std::string to_dot(const Gcm& a) {
  std::ostringstream out;
  out << "digraph dynkin {\n";
  for (int v = 1; v <= a.dim(); ++v) out << "  v" << v << ";\n";
  for (const DiagramEdge& e : diagram_edges(a)) {
    const std::string vi = "v" + std::to_string(e.i + 1);
    const std::string vj = "v" + std::to_string(e.j + 1);
    switch (e.category) {
      case EdgeCategory::Single:
        out << "  " << vi << " -> " << vj << " [dir=none];\n";
        break;
      case EdgeCategory::ArrowMulti: {
        // Points from the vertex whose row holds the -1.
        const bool forward = e.a_ij == -1;
        const Entry m = forward ? -e.a_ji : -e.a_ij;
        out << "  " << (forward ? vi : vj) << " -> " << (forward ? vj : vi) << " [label=\"" << m
            << "\"];\n";
        break;
      }
      case EdgeCategory::DoubleHeadedDouble:
        out << "  " << vi << " -> " << vj << " [dir=none, label=\"2<->2\"];\n";
        break;
      case EdgeCategory::Labeled:
        out << "  " << vi << " -> " << vj << " [dir=none, label=\"" << e.a_ij << "|" << e.a_ji
            << "\"];\n";
        break;
      case EdgeCategory::None:
        break;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gcmforge
