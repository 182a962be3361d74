#include "fano/families.hpp"

#include <string>

#include "fano/error.hpp"

namespace fano {

namespace {

constexpr std::array<FamilyModel, 9> kModels = {{
    {FamilyId::k3f1, 3, -1},
    {FamilyId::k4f1, 4, std::nullopt},
    {FamilyId::k4f2, 4, 1},
    {FamilyId::k4f3, 4, 1},
    {FamilyId::k4f4, 4, -1},
    {FamilyId::k5f1, 5, 1},
    {FamilyId::k5f2, 5, -1},
    {FamilyId::k5f3, 5, 1},
    {FamilyId::k6f1, 6, 1},
}};

constexpr std::array<std::string_view, 9> kNames = {
    "k3f1", "k4f1", "k4f2", "k4f3", "k4f4", "k5f1", "k5f2", "k5f3", "k6f1"};

}  // namespace

std::string_view to_string(FamilyId f) {
  return kNames[static_cast<std::size_t>(f)];
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllFamilies[i];
  }
  return std::nullopt;
}

const FamilyModel& family_model(FamilyId f) {
  return kModels[static_cast<std::size_t>(f)];
}

bool family_parameters_valid(FamilyId f, Int r, Int s) {
  if (r < 2 || s < 1 || s >= r) return false;
  if (gcd(r, s) != 1) return false;
  const auto& m = family_model(f);
  return !m.gcd_offset || gcd(r, s + *m.gcd_offset) == 1;
}

std::vector<LatticeVector> family_vertices(FamilyId f, Int r, Int s) {
  if (r < 2 || s < 1 || s >= r) {
    throw Error(ErrorCode::InvalidParameters,
                "family parameters need 1 <= s < r, got r=" +
                    std::to_string(r) + " s=" + std::to_string(s));
  }
  if (!family_parameters_valid(f, r, s)) {
    throw Error(ErrorCode::GcdConditionViolated,
                std::string(to_string(f)) + " needs coprime parameters, got r=" +
                    std::to_string(r) + " s=" + std::to_string(s));
  }
  const LatticeVector start{r, -s}, up{0, 1}, down{0, -1};
  switch (f) {
    case FamilyId::k3f1:
      return {start, up, {-r, s - 1}};
    case FamilyId::k4f1:
      return {start, up, {-r, s}, down};
    case FamilyId::k4f2:
      return {start, up, {-r, s + 1}, down};
    case FamilyId::k4f3:
      return {start, up, {-r, s}, {r, -s - 1}};
    case FamilyId::k4f4:
      return {start, up, {-r, s}, {-r, s - 1}};
    case FamilyId::k5f1:
      return {start, up, {-r, s + 1}, {-r, s}, down};
    case FamilyId::k5f2:
      return {start, up, {-r, s}, {-r, s - 1}, down};
    case FamilyId::k5f3:
      return {start, up, {-r, s + 1}, {-r, s}, {r, -s - 1}};
    case FamilyId::k6f1:
      return {start, up, {-r, s + 1}, {-r, s}, down, {r, -s - 1}};
  }
  return {};
}

}  // namespace fano
