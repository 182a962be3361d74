#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fano/cones.hpp"
#include "fano/families.hpp"
#include "fano/numthy.hpp"
#include "fano/polygon.hpp"

namespace fano {

/// Largest r accepted by the enumeration entry points.
inline constexpr Int kMaxEnumerationR = 1000;

/// Validated polygon of family f at (r, s). Throws InvalidParameters,
/// GcdConditionViolated, or NotConvexAtParameters.
FanoPolygon family_polygon(FamilyId f, Int r, Int s);

/// Coefficient tuples (a_1, ..., a_k) with every a_i >= -1 and
/// sum a_i = 12 - 3k, in lexicographic order. Empty for k >= 7.
std::vector<std::vector<Int>> coefficient_tuples(int k);

/// Unrolls v_{i+1} = -v_{i-1} - a_i v_i from v_1 = (r, -s), v_2 = (0, 1)
/// with a = (a_1, ..., a_k). Returns v_1..v_k when the loop closes
/// (v_{k+1} = v_1 and v_{k+2} = v_2), otherwise nothing.
std::optional<std::vector<LatticeVector>> unroll_sequence(Int r, Int s,
                                                          std::span<const Int> a);

struct EnumerationOptions {
  /// Worker threads; results are merged in canonical order, so the output
  /// does not depend on this.
  unsigned jobs = 1;
};

/// All Fano polygons, up to GL_2(Z), all of whose edge cones are
/// determinant-r R-cones, one per isomorphism class, sorted by canonical
/// form. Throws InvalidParameters unless
/// 3 <= r <= kMaxEnumerationR.
std::vector<FanoPolygon> enumerate_det_r_fanos(Int r, EnumerationOptions options = {});

struct FamilyMatch {
  FamilyId family;
  Int s;
  friend bool operator==(const FamilyMatch&, const FamilyMatch&) = default;
};

struct ClassifiedPolygon {
  FanoPolygon polygon;
  std::vector<FamilyMatch> matches;
};

struct Theorem16Report {
  Int r = 0;
  std::vector<ClassifiedPolygon> polygons;
  /// Enumerated polygons matching no family model.
  std::vector<FanoPolygon> orphans;
  bool ok() const { return orphans.empty(); }
};

/// Matches every enumerated polygon against all family instances at r.
/// Throws InvalidParameters for r < 3 or r = 4.
Theorem16Report verify_theorem_1_6(Int r, EnumerationOptions options = {});

struct CensusEntry {
  Int r = 0;
  Int k = 0;
  Int s = 0;
  Int polygon_count = 0;
  std::vector<std::vector<LatticeVector>> canonical_models;
  bool basket_homogeneous = true;
};

/// Disagreement between enumeration and the existence predicate.
struct PredicateMismatch {
  Int k = 0;
  Int r = 0;
  Int s = 0;
  Int enumerated = 0;
  bool predicted = false;
};

struct CensusReport {
  Int r_max = 0;
  std::vector<CensusEntry> rows;
  std::vector<PredicateMismatch> mismatches;
  /// Rows whose count breaks uniqueness (count != 1 outside 1/5(1,2)).
  std::vector<CensusEntry> uniqueness_violations;
  bool ok() const { return mismatches.empty() && uniqueness_violations.empty(); }
};

/// Homogeneous-basket census for 3 <= r <= r_max. Rows are emitted for every
/// (r, k, s) admitting a polygon with basket {k x 1/r(1,s)} (one row per s,
/// so isomorphic s and s^-1 both appear). Every (k, r, s) with k in 3..6 and
/// s coprime to r is compared against existence_predicate.
CensusReport verify_theorem_1_7(Int r_max, EnumerationOptions options = {});

/// Census rows for a single r (no predicate comparison).
std::vector<CensusEntry> homogeneous_census(Int r, EnumerationOptions options = {});

struct K2rRuleReport {
  Int k = 0;
  Int r = 0;
  Int l = 0;        // k / (2r)
  Int bound = 0;    // 4 r l, must not exceed 12
};

/// For a basket {k x 1/r(1,1)} of R-cones: 2r | k and 4 r (k / 2r) <= 12.
/// Throws RuleViolation.
K2rRuleReport check_k2r_rule(Int k, Int r);

/// Same, reading (k, r) off a polygon whose content is (0, {k x 1/r(1,1)}).
/// Throws PreconditionViolated for any other content.
K2rRuleReport check_k2r_rule(const FanoPolygon& p);

}  // namespace fano
