#include "fano/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "fano/error.hpp"

namespace fano {

namespace {

using nlohmann::json;

// nlohmann reports the byte offset (1-based) of the last character read.
Error syntax_error(std::string_view text, std::size_t byte, const char* what) {
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return Error::at_position(ErrorCode::SyntaxError, what, line, end - line_start + 1);
}

Int read_coordinate(const json& value, std::size_t index) {
  if (value.is_number_integer()) {
    const bool fits = value.is_number_unsigned()
                          ? value.get<std::uint64_t>() <=
                                static_cast<std::uint64_t>(kMaxInputCoordinate)
                          : std::abs(value.get<Int>()) <= kMaxInputCoordinate;
    if (!fits) {
      throw Error(ErrorCode::InputTooLarge,
                  "coordinate " + value.dump() + " exceeds 2^30 in absolute value",
                  index);
    }
    return value.get<Int>();
  }
  throw Error(ErrorCode::NonIntegerCoordinate,
              "entry " + std::to_string(index) + " has non-integer coordinate " +
                  value.dump(),
              index);
}

std::vector<LatticeVector> read_points(const json& root, const char* key) {
  if (!root.is_object() || !root.contains(key)) {
    throw Error(ErrorCode::MissingField,
                std::string("expected an object with field \"") + key + "\"");
  }
  const json& list = root.at(key);
  if (!list.is_array()) {
    throw Error(ErrorCode::MalformedVertex,
                std::string("field \"") + key + "\" must be an array of [x, y] pairs");
  }
  std::vector<LatticeVector> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& entry = list[i];
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorCode::MalformedVertex,
                  "entry " + std::to_string(i) + " is not an [x, y] pair: " +
                      entry.dump(),
                  i);
    }
    out.push_back({read_coordinate(entry[0], i), read_coordinate(entry[1], i)});
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Keep only the description; the position is attached separately.
    std::string what = e.what();
    if (auto at = what.find("syntax error"); at != std::string::npos) {
      what = what.substr(at);
    }
    throw syntax_error(text, e.byte, what.c_str());
  }
}

}  // namespace

PolygonDocument parse_polygon(std::string_view text) {
  const json root = parse_json(text);
  PolygonDocument doc;
  doc.vertices = read_points(root, "vertices");
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) {
      throw Error(ErrorCode::MissingField, "field \"name\" must be a string");
    }
    doc.name = it->get<std::string>();
  }
  return doc;
}

std::vector<LatticeVector> parse_sequence(std::string_view text) {
  return read_points(parse_json(text), "vectors");
}

std::string polygon_to_json(const PolygonDocument& doc, int indent) {
  json out = json::object();
  if (doc.name) out["name"] = *doc.name;
  json vertices = json::array();
  for (const auto& v : doc.vertices) vertices.push_back({v.x, v.y});
  out["vertices"] = std::move(vertices);
  return compact_pairs(out.dump(indent));
}

std::string compact_pairs(const std::string& dumped) {
  static const std::regex pair(R"(\[\s*(-?\d+),\s*(-?\d+)\s*\])");
  return std::regex_replace(dumped, pair, "[$1, $2]");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidParameters, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace fano
