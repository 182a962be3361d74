#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// The nine models of Fano polygons all of whose cones have determinant r.
/// Names encode vertex count and family number within that count.
enum class FamilyId { k3f1, k4f1, k4f2, k4f3, k4f4, k5f1, k5f2, k5f3, k6f1 };

inline constexpr std::array<FamilyId, 9> kAllFamilies = {
    FamilyId::k3f1, FamilyId::k4f1, FamilyId::k4f2,
    FamilyId::k4f3, FamilyId::k4f4, FamilyId::k5f1,
    FamilyId::k5f2, FamilyId::k5f3, FamilyId::k6f1};

std::string_view to_string(FamilyId f);
std::optional<FamilyId> parse_family(std::string_view name);

/// Static description of a family model.
struct FamilyModel {
  FamilyId id;
  int k;
  /// Besides gcd(r, s) = 1 the model needs gcd(r, s + offset) = 1 when
  /// offset is set.
  std::optional<int> gcd_offset;
};

const FamilyModel& family_model(FamilyId f);

/// True iff 1 <= s < r and the family's coprimality conditions hold.
bool family_parameters_valid(FamilyId f, Int r, Int s);

/// Vertex template instantiated at (r, s), anticlockwise and starting at
/// v_1 = (r, -s), v_2 = (0, 1); cone sigma_i spans (v_i, v_{i+1}).
/// Throws InvalidParameters / GcdConditionViolated.
std::vector<LatticeVector> family_vertices(FamilyId f, Int r, Int s);

}  // namespace fano
