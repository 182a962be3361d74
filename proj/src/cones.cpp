#include "fano/cones.hpp"

#include <ostream>
#include <sstream>

#include "fano/error.hpp"

namespace fano {

std::ostream& operator<<(std::ostream& os, const CyclicQuotientSingularity& q) {
  return os << "1/" << q.r << "(1," << q.s << ')';
}

std::string to_string(const CyclicQuotientSingularity& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string_view to_string(ConeTag t) {
  switch (t) {
    case ConeTag::PrimitiveT: return "primitive-T";
    case ConeTag::T: return "T";
    case ConeTag::R: return "R";
    case ConeTag::Composite: return "composite";
  }
  return "?";
}

Cone::Cone(LatticeVector ray1, LatticeVector ray2) : ray1_(ray1), ray2_(ray2) {
  if (ray1 == LatticeVector{} || ray2 == LatticeVector{}) {
    throw Error(ErrorCode::DegenerateCone, "cone ray is the zero vector");
  }
  const Int d = det2(ray1, ray2);
  if (d == 0) {
    throw Error(ErrorCode::DegenerateCone,
                "rays " + to_string(ray1) + " and " + to_string(ray2) +
                    " are collinear");
  }
  if (d < 0) std::swap(ray1_, ray2_);
}

Int Cone::determinant() const { return det2(primitive1(), primitive2()); }

CyclicQuotientSingularity cone_normal_form(const Cone& c) {
  const LatticeVector u = c.primitive1();
  const LatticeVector v = c.primitive2();
  const Int r = det2(u, v);
  if (r == 1) return {1, 0};
  // Any (p, q) with p*v.x + q*v.y = 1 completes (v.y, -v.x) to an SL_2 map
  // sending v -> (0,1) and u -> (r, t); s is then -t mod r.
  const auto [g, p, q] = bezout(v.x, v.y);
  (void)g;
  const Int t = p * u.x + q * u.y;
  return {r, mod(-t, r)};
}

ConeMetrics cone_metrics(const Cone& c) {
  const LatticeVector u = c.primitive1();
  const LatticeVector v = c.primitive2();
  const Int length = segment_lattice_length(u, v);
  const LatticeVector edge = v - u;
  const LatticeVector normal{edge.y / length, -edge.x / length};
  const Int h = dot(u, normal);
  return {length, h < 0 ? -h : h};
}

ConeContent cone_singularity_content(const Cone& c, ResidualPlacement placement) {
  const auto [length, height] = cone_metrics(c);
  ConeContent out;
  out.n = length / height;
  const Int rest = length % height;
  if (rest == 0) return out;

  const LatticeVector u = c.primitive1();
  const LatticeVector v = c.primitive2();
  const LatticeVector step{(v.x - u.x) / length, (v.y - u.y) / length};
  if (placement == ResidualPlacement::Anticlockwise) {
    out.residual = cone_normal_form(Cone(v - rest * step, v));
  } else {
    out.residual = cone_normal_form(Cone(u, u + rest * step));
  }
  return out;
}

ConeClass classify_cone(const Cone& c) {
  const auto [length, height] = cone_metrics(c);
  if (length == height) return {ConeTag::PrimitiveT, 1, std::nullopt};
  if (length % height == 0) return {ConeTag::T, length / height, std::nullopt};
  const ConeContent content = cone_singularity_content(c);
  if (length < height) return {ConeTag::R, 0, content.residual};
  return {ConeTag::Composite, content.n, content.residual};
}

bool cqs_isomorphic(const CyclicQuotientSingularity& a,
                    const CyclicQuotientSingularity& b) {
  if (a.r != b.r) return false;
  if (a.s == b.s) return true;
  return mod(a.s * b.s, a.r) == mod(1, a.r);
}

std::string to_string(const SingularityContent& sc) {
  std::ostringstream os;
  os << '(' << sc.n << ", {";
  const auto& b = sc.basket;
  for (std::size_t i = 0; i < b.size();) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    if (i > 0) os << ", ";
    if (j - i > 1) os << (j - i) << " x ";
    os << b[i];
    i = j;
  }
  os << "})";
  return os.str();
}

Cone edge_cone(const FanoPolygon& p, std::size_t i) {
  return Cone(p[i], p.next(i));
}

SingularityContent polygon_singularity_content(const FanoPolygon& p) {
  SingularityContent sc;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ConeContent c = cone_singularity_content(edge_cone(p, i));
    sc.n += c.n;
    if (c.residual) sc.basket.push_back(*c.residual);
  }
  return sc;
}

std::vector<Int> edge_heights(const FanoPolygon& p) {
  std::vector<Int> heights;
  heights.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    heights.push_back(cone_metrics(edge_cone(p, i)).height);
  }
  return heights;
}

std::optional<Int> l_reflexive_index(const FanoPolygon& p) {
  const auto heights = edge_heights(p);
  for (Int h : heights) {
    if (h != heights.front()) return std::nullopt;
  }
  return heights.front();
}

namespace {

ConeDescriptor known(Int r, Int s) {
  const Int reduced = mod(s, r);
  if (gcd(reduced, r) != 1) return {ConeDescriptor::Kind::Undefined, {}};
  return {ConeDescriptor::Kind::Known, {r, reduced}};
}

// 1/r(a, b) ~ 1/r(1, a^-1 b).
ConeDescriptor weighted(Int r, Int a, Int b) {
  const Int am = mod(a, r);
  if (gcd(am, r) != 1) return {ConeDescriptor::Kind::Undefined, {}};
  return known(r, mod_inverse(am, r) * mod(b, r));
}

const ConeDescriptor kUnknown{ConeDescriptor::Kind::Unknown, {}};

}  // namespace

std::vector<ConeDescriptor> figure_cone_types(FamilyId f, Int r, Int s) {
  // Validates parameters with the same errors as the models themselves.
  (void)family_vertices(f, r, s);

  const Int fs = r / s;        // floor(r / s)
  const Int fs1 = r / (s + 1);  // floor(r / (s + 1))
  const auto floor_s = weighted(r, r - (s - 1) * fs, r - s * fs);
  const auto floor_s1 = weighted(r, r - s * fs1, r - (s + 1) * fs1);

  switch (f) {
    case FamilyId::k3f1:
      return {known(r, s), known(r, r + 1 - s), floor_s};
    case FamilyId::k4f1:
      return {known(r, s), known(r, r - s), known(r, s), known(r, r - s)};
    case FamilyId::k4f2:
      return {known(r, s), known(r, r - 1 - s), known(r, s + 1),
              known(r, r - s)};
    case FamilyId::k4f3:
      return {known(r, s), known(r, r - s), floor_s1, kUnknown};
    case FamilyId::k4f4:
      return {known(r, s), known(r, r - s), kUnknown, floor_s};
    case FamilyId::k5f1:
      return {known(r, s), known(r, r - 1 - s), kUnknown, known(r, s),
              known(r, r - s)};
    case FamilyId::k5f2:
      return {known(r, s), known(r, r - s), kUnknown, known(r, s - 1),
              known(r, r - s)};
    case FamilyId::k5f3:
      return {known(r, s), known(r, r - 1 - s), kUnknown, floor_s1, kUnknown};
    case FamilyId::k6f1:
      return {known(r, s), known(r, r - 1 - s), kUnknown,
              known(r, s), known(r, r - 1 - s), kUnknown};
  }
  return {};
}

}  // namespace fano
