#pragma once

#include <span>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// A Fano polygon: strictly convex, anticlockwise, primitive vertices, origin
/// strictly interior. Only constructible through validate_polygon, so every
/// instance satisfies these invariants.
class FanoPolygon {
 public:
  const std::vector<LatticeVector>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const LatticeVector& operator[](std::size_t i) const { return vertices_[i]; }

  /// Vertex i+1 (cyclic).
  const LatticeVector& next(std::size_t i) const {
    return vertices_[(i + 1) % vertices_.size()];
  }

  friend bool operator==(const FanoPolygon&, const FanoPolygon&) = default;

 private:
  explicit FanoPolygon(std::vector<LatticeVector> v) : vertices_(std::move(v)) {}
  friend FanoPolygon validate_polygon(std::span<const LatticeVector>);

  std::vector<LatticeVector> vertices_;
};

/// Checks the Fano polygon invariants and re-indexes the cycle to start at
/// the lexicographically smallest vertex. Clockwise input is rejected with
/// WrongOrientation rather than reversed.
FanoPolygon validate_polygon(std::span<const LatticeVector> vertices);

/// Applies `map` to every vertex, reversing the order when det(map) = -1 so
/// the image is anticlockwise again. The result is re-validated.
FanoPolygon transform(const FanoPolygon& p, const UnimodularMap& map);

/// Canonical representative of the GL_2(Z) orbit of a vertex loop whose
/// consecutive determinants are all positive. Over every starting edge and
/// both orientations the loop is mapped so that v_i -> (r, -s), 0 <= s < r,
/// and v_{i+1} -> (0, 1); the lexicographically least image sequence wins.
std::vector<LatticeVector> canonical_form(std::span<const LatticeVector> loop);
std::vector<LatticeVector> canonical_form(const FanoPolygon& p);

bool are_isomorphic(const FanoPolygon& p, const FanoPolygon& q);

}  // namespace fano
