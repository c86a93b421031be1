#pragma once

#include "gcmforge/exact.hpp"
#include "gcmforge/gcm.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcmforge {

/// Matrix text format: '#' lines and blank lines are ignored, every other
/// line is one row of whitespace-separated integers.
/// Throws ParseError (with line and column) or ValidationError.
Gcm parse_matrix(std::string_view text);
Gcm load_matrix(const std::filesystem::path& path);
void save_matrix(const Gcm& a, const std::filesystem::path& path);

enum class EdgeCategory { None, Single, ArrowMulti, DoubleHeadedDouble, Labeled };

struct DiagramEdge {
  int i = 0;  // 0-based, i < j
  int j = 0;
  EdgeCategory category = EdgeCategory::None;
  Entry a_ij = 0;
  Entry a_ji = 0;
  std::optional<Rational> mult;  // a_ij / a_ji when both are nonzero
};

DiagramEdge diagram_edge(const Gcm& a, int i, int j);
std::vector<DiagramEdge> diagram_edges(const Gcm& a);

/// Graphviz description of the Dynkin diagram; vertices v1..vn.
std::string to_dot(const Gcm& a);

}  // namespace gcmforge
