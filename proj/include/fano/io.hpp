#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// Coordinates larger than this in absolute value are rejected on input so
/// that determinants and canonical forms cannot overflow.
inline constexpr Int kMaxInputCoordinate = Int{1} << 30;

/// A polygon as read from JSON, before validation.
struct PolygonDocument {
  std::vector<LatticeVector> vertices;
  std::optional<std::string> name;
};

/// Parses {"vertices": [[x, y], ...], "name"?: "..."}.
/// Throws SyntaxError (with line and column), MissingField,
/// MalformedVertex(index), NonIntegerCoordinate(index) or InputTooLarge.
PolygonDocument parse_polygon(std::string_view text);

/// Parses a sequence file: the same shape with the list under "vectors".
std::vector<LatticeVector> parse_sequence(std::string_view text);

/// Serialises a document so that parse_polygon reads it back unchanged.
std::string polygon_to_json(const PolygonDocument& doc, int indent = 2);

/// Rewrites every integer pair spread over several lines by an indented JSON
/// dump as a single-line "[x, y]".
std::string compact_pairs(const std::string& dumped);

/// Reads a whole file; throws InvalidParameters when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace fano
