#include "fano/polygon.hpp"

#include <algorithm>

#include "fano/error.hpp"

namespace fano {

FanoPolygon validate_polygon(std::span<const LatticeVector> vertices) {
  const std::size_t k = vertices.size();
  if (k < 3) {
    throw Error(ErrorCode::TooFewVertices,
                "a polygon needs at least 3 vertices, got " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_primitive(vertices[i])) {
      throw Error(ErrorCode::NotPrimitiveVertex,
                  "vertex " + to_string(vertices[i]) + " is not primitive", i);
    }
  }

  // Turn at each vertex: det(v_i - v_{i-1}, v_{i+1} - v_i).
  std::vector<LatticeVector> edges(k);
  for (std::size_t i = 0; i < k; ++i) {
    edges[i] = vertices[(i + 1) % k] - vertices[i];
    if (edges[i] == LatticeVector{}) {
      throw Error(ErrorCode::NotConvex,
                  "repeated vertex " + to_string(vertices[i]), i);
    }
  }
  std::size_t left = 0, right = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Int turn = det2(edges[(i + k - 1) % k], edges[i]);
    if (turn > 0) ++left;
    if (turn < 0) ++right;
  }
  if (right == k) {
    throw Error(ErrorCode::WrongOrientation,
                "vertices are ordered clockwise");
  }
  if (left != k) {
    throw Error(ErrorCode::NotConvex,
                "polygon is not strictly convex (reflex or collinear vertex)");
  }
  // All turns are left; the edge directions must wind exactly once, which
  // rules out star polygons.
  if (geometric_winding(edges) != 1) {
    throw Error(ErrorCode::NotConvex, "vertex loop is self-intersecting");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (det2(vertices[i], vertices[(i + 1) % k]) <= 0) {
      throw Error(ErrorCode::OriginNotInterior,
                  "origin is not strictly inside edge " +
                      to_string(vertices[i]) + " -> " +
                      to_string(vertices[(i + 1) % k]),
                  i);
    }
  }

  std::vector<LatticeVector> out(vertices.begin(), vertices.end());
  auto first = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), first, out.end());
  return FanoPolygon(std::move(out));
}

FanoPolygon transform(const FanoPolygon& p, const UnimodularMap& map) {
  std::vector<LatticeVector> image;
  image.reserve(p.size());
  for (const auto& v : p.vertices()) image.push_back(map(v));
  if (map.det() < 0) std::reverse(image.begin(), image.end());
  return validate_polygon(image);
}

namespace {

// The unique det +1 map with v -> (0, 1) and u -> (r, -s), 0 <= s < r, where
// r = det(u, v) > 0 and v is primitive.
UnimodularMap edge_normalizer(LatticeVector u, LatticeVector v) {
  const auto [g, p, q] = bezout(v.x, v.y);
  (void)g;
  // Rows (v.y, -v.x) and (p, q); the second row has (p, q).v = 1.
  const Int r = det2(u, v);
  const Int t = p * u.x + q * u.y;
  const Int s = mod(-t, r);
  const Int shear = (-s - t) / r;
  // Shear (x, y) -> (x, y + shear*x) applied after the base map.
  return UnimodularMap(v.y, -v.x, p + shear * v.y, q - shear * v.x);
}

}  // namespace

std::vector<LatticeVector> canonical_form(std::span<const LatticeVector> loop) {
  const std::size_t k = loop.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (det2(loop[i], loop[(i + 1) % k]) <= 0 || !is_primitive(loop[i])) {
      throw Error(ErrorCode::WrongOrientation,
                  "canonical_form needs primitive vertices with positive "
                  "consecutive determinants",
                  i);
    }
  }

  // Reversed order composed with (x, y) -> (x, -y) is anticlockwise again.
  std::vector<LatticeVector> mirrored(k);
  for (std::size_t i = 0; i < k; ++i) {
    const LatticeVector v = loop[k - 1 - i];
    mirrored[i] = {v.x, -v.y};
  }

  std::vector<LatticeVector> best, candidate(k);
  auto consider = [&](std::span<const LatticeVector> seq) {
    for (std::size_t i = 0; i < k; ++i) {
      const UnimodularMap h = edge_normalizer(seq[i], seq[(i + 1) % k]);
      for (std::size_t j = 0; j < k; ++j) candidate[j] = h(seq[(i + j) % k]);
      if (best.empty() || candidate < best) best = candidate;
    }
  };
  consider(loop);
  consider(mirrored);
  return best;
}

std::vector<LatticeVector> canonical_form(const FanoPolygon& p) {
  return canonical_form(std::span<const LatticeVector>(p.vertices()));
}

bool are_isomorphic(const FanoPolygon& p, const FanoPolygon& q) {
  return p.size() == q.size() && canonical_form(p) == canonical_form(q);
}

}  // namespace fano
