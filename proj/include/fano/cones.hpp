#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fano/families.hpp"
#include "fano/lattice.hpp"
#include "fano/polygon.hpp"

namespace fano {

/// The germ 1/r(1, s), encoded by the cone span((0,1), (r,-s)).
/// 0 <= s < r and gcd(r, s) = 1; the smooth germ is (1, 0).
struct CyclicQuotientSingularity {
  Int r = 1;
  Int s = 0;

  friend constexpr auto operator<=>(const CyclicQuotientSingularity&,
                                    const CyclicQuotientSingularity&) = default;
};

std::ostream& operator<<(std::ostream& os, const CyclicQuotientSingularity& q);
/// "1/r(1,s)".
std::string to_string(const CyclicQuotientSingularity& q);

/// Two-dimensional cone over a pair of non-zero rays. Stored anticlockwise:
/// if det(ray1, ray2) < 0 the rays are swapped on construction. Rays need
/// not be primitive.
class Cone {
 public:
  /// Throws DegenerateCone if a ray is zero or the rays are collinear.
  Cone(LatticeVector ray1, LatticeVector ray2);

  LatticeVector ray1() const { return ray1_; }
  LatticeVector ray2() const { return ray2_; }

  /// Primitive generators of the two rays.
  LatticeVector primitive1() const { return primitive_part(ray1_); }
  LatticeVector primitive2() const { return primitive_part(ray2_); }

  /// det of the primitive generators (> 0).
  Int determinant() const;

 private:
  LatticeVector ray1_;
  LatticeVector ray2_;
};

struct ConeMetrics {
  Int length;  // lattice length of the edge between primitive generators
  Int height;  // lattice height of that edge above the origin
};

enum class ConeTag { PrimitiveT, T, R, Composite };
std::string_view to_string(ConeTag t);

struct ConeClass {
  ConeTag tag;
  /// Number of primitive T-cones in the subdivision (0 for R).
  Int n = 0;
  /// Residual R-singularity (R and Composite only).
  std::optional<CyclicQuotientSingularity> residual;
};

/// Which end of the edge the residual sub-cone is cut from.
enum class ResidualPlacement { Anticlockwise, Clockwise };

struct ConeContent {
  Int n = 0;
  std::optional<CyclicQuotientSingularity> residual;
};

CyclicQuotientSingularity cone_normal_form(const Cone& c);
ConeMetrics cone_metrics(const Cone& c);
ConeClass classify_cone(const Cone& c);

/// Singularity content (n, res) of a single cone. n = floor(length/height);
/// the residual sub-cone has lattice length (length mod height) and is cut
/// at the anticlockwise end (next to ray2) unless told otherwise.
ConeContent cone_singularity_content(
    const Cone& c, ResidualPlacement placement = ResidualPlacement::Anticlockwise);

/// 1/r(1,a) = 1/r(1,b) iff a = b or ab = 1 (mod r).
bool cqs_isomorphic(const CyclicQuotientSingularity& a,
                    const CyclicQuotientSingularity& b);

/// Total T-cone count plus the cyclically ordered basket of residuals, taken
/// over the edge cones (v_i, v_{i+1}) in anticlockwise order.
struct SingularityContent {
  Int n = 0;
  std::vector<CyclicQuotientSingularity> basket;

  friend bool operator==(const SingularityContent&,
                         const SingularityContent&) = default;
};

/// "(n, {m x 1/r(1,s), ...})"; consecutive equal entries are grouped.
std::string to_string(const SingularityContent& sc);

SingularityContent polygon_singularity_content(const FanoPolygon& p);

/// Cone over edge i of P, spanned by (v_i, v_{i+1}).
Cone edge_cone(const FanoPolygon& p, std::size_t i);

/// Height of every edge.
std::vector<Int> edge_heights(const FanoPolygon& p);

/// Common edge height l when P is l-reflexive.
std::optional<Int> l_reflexive_index(const FanoPolygon& p);

/// Closed-form cone type of a family cone as tabulated for the models.
struct ConeDescriptor {
  enum class Kind {
    Known,
    /// No closed form is tabulated for this cone.
    Unknown,
    /// The tabulated two-weight form 1/r(a,b) has gcd(a, r) > 1 at these
    /// parameters and does not name a cyclic quotient singularity.
    Undefined,
  };
  Kind kind = Kind::Unknown;
  CyclicQuotientSingularity value{};
};

/// Tabulated types of sigma_1..sigma_k for family f at (r, s), in the order
/// of family_vertices. Two-weight forms 1/r(a,b) are normalised to
/// 1/r(1, a^-1 b mod r). Throws GcdConditionViolated.
std::vector<ConeDescriptor> figure_cone_types(FamilyId f, Int r, Int s);

}  // namespace fano
