#include "fano/lattice.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "fano/error.hpp"

namespace fano {

std::ostream& operator<<(std::ostream& os, LatticeVector v) {
  return os << '(' << v.x << ',' << v.y << ')';
}

std::string to_string(LatticeVector v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BezoutResult bezout(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * u;
    old_u = u;
    u = t;
    t = old_v - q * v;
    old_v = v;
    v = t;
  }
  if (old_r < 0) return {-old_r, -old_u, -old_v};
  return {old_r, old_u, old_v};
}

Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  auto [g, u, v] = bezout(mod(a, m), m);
  if (g != 1) {
    throw Error(ErrorCode::InvalidParameters,
                std::to_string(a) + " is not invertible modulo " +
                    std::to_string(m));
  }
  return mod(u, m);
}

bool is_primitive(LatticeVector v) {
  return !(v.x == 0 && v.y == 0) && gcd(v.x, v.y) == 1;
}

LatticeVector primitive_part(LatticeVector v) {
  Int g = gcd(v.x, v.y);
  if (g == 0) throw Error(ErrorCode::DegenerateSegment, "zero vector");
  return {v.x / g, v.y / g};
}

Int segment_lattice_length(LatticeVector p, LatticeVector q) {
  if (p == q) {
    throw Error(ErrorCode::DegenerateSegment,
                "segment endpoints coincide at " + to_string(p));
  }
  return gcd(q.x - p.x, q.y - p.y);
}

Int geometric_winding(std::span<const LatticeVector> loop) {
  const std::size_t k = loop.size();
  Int winding = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const LatticeVector p = loop[i];
    const LatticeVector q = loop[(i + 1) % k];
    const Int side = det2(p, q);
    // The origin lies on [p, q] iff p, q are collinear with it and not on
    // the same open ray.
    if (side == 0 && dot(p, q) <= 0) {
      throw Error(ErrorCode::OriginOnBoundary,
                  "edge " + to_string(p) + " -> " + to_string(q) +
                      " passes through the origin",
                  i);
    }
    if (p.y <= 0 && q.y > 0 && side > 0) {
      ++winding;
    } else if (p.y > 0 && q.y <= 0 && side < 0) {
      --winding;
    }
  }
  return winding;
}

UnimodularMap::UnimodularMap(Int a, Int b, Int c, Int d)
    : a_(a), b_(b), c_(c), d_(d) {
  Int dt = det();
  if (dt != 1 && dt != -1) {
    throw Error(ErrorCode::NotUnimodular,
                "determinant " + std::to_string(dt) + " is not +-1");
  }
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& o) const {
  return UnimodularMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                       c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

UnimodularMap UnimodularMap::inverse() const {
  const Int dt = det();
  return UnimodularMap(d_ * dt, -b_ * dt, -c_ * dt, a_ * dt);
}

}  // namespace fano
