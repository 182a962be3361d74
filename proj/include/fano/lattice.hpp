#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace fano {

using Int = std::int64_t;

/// A point of the lattice N = Z^2.
struct LatticeVector {
  Int x = 0;
  Int y = 0;

  friend constexpr auto operator<=>(const LatticeVector&,
                                    const LatticeVector&) = default;
};

constexpr LatticeVector operator+(LatticeVector u, LatticeVector v) {
  return {u.x + v.x, u.y + v.y};
}
constexpr LatticeVector operator-(LatticeVector u, LatticeVector v) {
  return {u.x - v.x, u.y - v.y};
}
constexpr LatticeVector operator-(LatticeVector u) { return {-u.x, -u.y}; }
constexpr LatticeVector operator*(Int k, LatticeVector u) {
  return {k * u.x, k * u.y};
}

std::ostream& operator<<(std::ostream& os, LatticeVector v);
std::string to_string(LatticeVector v);

/// det [u v] = u.x*v.y - u.y*v.x.
constexpr Int det2(LatticeVector u, LatticeVector v) {
  return u.x * v.y - u.y * v.x;
}

constexpr Int dot(LatticeVector u, LatticeVector v) {
  return u.x * v.x + u.y * v.y;
}

/// Non-zero with coprime coordinates.
bool is_primitive(LatticeVector v);

/// The primitive vector on the ray through v. Throws DegenerateSegment on 0.
LatticeVector primitive_part(LatticeVector v);

/// Lattice length of the closed segment [p, q]: lattice points minus one.
Int segment_lattice_length(LatticeVector p, LatticeVector q);

/// Winding number of the closed polyline loop[0] -> ... -> loop[k-1] ->
/// loop[0] around the origin, counted by signed crossings of the positive
/// x-axis. Integer-only. Throws OriginOnBoundary when an edge passes
/// through the origin (including a zero vertex).
Int geometric_winding(std::span<const LatticeVector> loop);

/// Element of GL_2(Z) acting on column vectors:
///   (x, y) -> (a*x + b*y, c*x + d*y).
class UnimodularMap {
 public:
  /// Identity.
  constexpr UnimodularMap() = default;

  /// Throws NotUnimodular unless |ad - bc| = 1.
  UnimodularMap(Int a, Int b, Int c, Int d);

  constexpr Int a() const { return a_; }
  constexpr Int b() const { return b_; }
  constexpr Int c() const { return c_; }
  constexpr Int d() const { return d_; }
  constexpr Int det() const { return a_ * d_ - b_ * c_; }

  constexpr LatticeVector operator()(LatticeVector v) const {
    return {a_ * v.x + b_ * v.y, c_ * v.x + d_ * v.y};
  }

  /// (*this) o other.
  UnimodularMap compose(const UnimodularMap& other) const;
  UnimodularMap inverse() const;

  friend constexpr bool operator==(const UnimodularMap&,
                                   const UnimodularMap&) = default;

 private:
  Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(Int a, Int b);

/// Mathematical modulus in [0, m) for m > 0.
constexpr Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Solves u*a + v*b = g = gcd(a, b) >= 0.
struct BezoutResult {
  Int g;
  Int u;
  Int v;
};
BezoutResult bezout(Int a, Int b);

/// Inverse of a modulo m (m >= 1); requires gcd(a, m) = 1.
Int mod_inverse(Int a, Int m);

}  // namespace fano
