#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fano/classify.hpp"
#include "fano/modseq.hpp"
#include "support.hpp"

using namespace fano;

namespace {

using VertexList = std::vector<LatticeVector>;

bool all_r_cones(const VertexList& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (classify_cone(Cone(v[i], v[(i + 1) % v.size()])).tag != ConeTag::R) return false;
  }
  return true;
}

// Independent search: walk convex vertex chains inside [-bound, bound]^2
// starting from (r, -s), (0, 1) with every consecutive determinant r, and
// keep closed loops of up to eight vertices whose cones are all R-cones.
std::set<VertexList> box_search(Int r, Int bound) {
  std::set<VertexList> found;
  VertexList chain;
  std::function<void()> extend = [&] {
    const LatticeVector last = chain.back();
    const LatticeVector prev = chain[chain.size() - 2];
    // Try closing the loop.
    if (chain.size() >= 3 && det2(last, chain[0]) == r &&
        det2(last - prev, chain[0] - last) > 0 &&
        det2(chain[0] - last, chain[1] - chain[0]) > 0) {
      if (all_r_cones(chain)) {
        try {
          const auto p = validate_polygon(chain);
          found.insert(canonical_form(p));
        } catch (const Error&) {
        }
      }
    }
    if (chain.size() == 8) return;
    for (Int x = -bound; x <= bound; ++x)
      for (Int y = -bound; y <= bound; ++y) {
        const LatticeVector v{x, y};
        if (det2(last, v) != r || !is_primitive(v)) continue;
        if (det2(last - prev, v - last) <= 0) continue;
        if (classify_cone(Cone(last, v)).tag != ConeTag::R) continue;
        chain.push_back(v);
        extend();
        chain.pop_back();
      }
  };
  for (Int s = 1; s < r; ++s) {
    if (gcd(r, s) != 1) continue;
    const LatticeVector first{r, -s}, second{0, 1};
    if (classify_cone(Cone(first, second)).tag != ConeTag::R) continue;
    chain = {first, second};
    extend();
  }
  return found;
}

std::set<VertexList> canonical_set(const std::vector<FanoPolygon>& ps) {
  std::set<VertexList> out;
  for (const auto& p : ps) out.insert(canonical_form(p));
  return out;
}

}  // namespace

TEST_CASE("family models at documented parameters") {
  auto p = family_polygon(FamilyId::k3f1, 7, 3);
  CHECK(p == validate_polygon(VertexList{{0, 1}, {-7, 2}, {7, -3}}));

  p = family_polygon(FamilyId::k6f1, 3, 1);
  CHECK(p == validate_polygon(testing::kHexagon));

  p = family_polygon(FamilyId::k4f1, 5, 2);
  CHECK(p == validate_polygon(VertexList{{0, 1}, {-5, 2}, {0, -1}, {5, -2}}));

  CHECK_THROWS_CODE(family_polygon(FamilyId::k3f1, 8, 5), ErrorCode::GcdConditionViolated);
  CHECK_THROWS_CODE(family_polygon(FamilyId::k4f1, 5, 5), ErrorCode::InvalidParameters);
  CHECK(parse_family("k5f2") == FamilyId::k5f2);
  CHECK_FALSE(parse_family("k7f1").has_value());
  CHECK(to_string(FamilyId::k4f3) == "k4f3");
}

TEST_CASE("every gcd-valid family instance is a Fano polygon with determinant-r cones") {
  for (FamilyId f : kAllFamilies)
    for (Int r = 3; r <= 40; ++r)
      for (Int s = 1; s < r; ++s) {
        if (!family_parameters_valid(f, r, s)) continue;
        const auto p = family_polygon(f, r, s);
        CHECK(static_cast<int>(p.size()) == family_model(f).k);
        for (std::size_t i = 0; i < p.size(); ++i) CHECK(det2(p[i], p.next(i)) == r);
      }
}

TEST_CASE("coefficient tuples") {
  const std::vector<std::size_t> expected_sizes{0, 0, 0, 28, 35, 15, 1, 0, 0, 0};
  for (int k = 3; k <= 9; ++k) {
    const auto tuples = coefficient_tuples(k);
    CHECK(tuples.size() == expected_sizes[static_cast<std::size_t>(k)]);
    CHECK(std::is_sorted(tuples.begin(), tuples.end()));
    for (const auto& a : tuples) {
      CHECK(a.size() == static_cast<std::size_t>(k));
      CHECK(std::accumulate(a.begin(), a.end(), Int{0}) == 12 - 3 * k);
      CHECK(*std::min_element(a.begin(), a.end()) >= -1);
    }
  }
  CHECK(coefficient_tuples(6) == std::vector<std::vector<Int>>{{-1, -1, -1, -1, -1, -1}});
}

TEST_CASE("the search space is empty from seven vertices on") {
  // Seven entries of at least -1 sum to at least -7 > -9 = 12 - 3*7.
  for (int k = 7; k <= 20; ++k) CHECK(coefficient_tuples(k).empty());
}

TEST_CASE("unrolling the recurrence") {
  const std::vector<Int> hexagon(6, -1);
  const auto loop = unroll_sequence(3, 1, hexagon);
  REQUIRE(loop.has_value());
  CHECK(canonical_form(*loop) == canonical_form(validate_polygon(testing::kHexagon)));
  const std::vector<Int> open{-1, -1, -1, -1, -1, 2};
  CHECK_FALSE(unroll_sequence(3, 1, open).has_value());
}

TEST_CASE("enumeration at small r") {
  const auto r3 = enumerate_det_r_fanos(3);
  REQUIRE(r3.size() == 1);
  CHECK(are_isomorphic(r3[0], validate_polygon(testing::kHexagon)));

  const auto r5 = enumerate_det_r_fanos(5);
  const auto a = family_polygon(FamilyId::k4f1, 5, 2);
  const auto b = family_polygon(FamilyId::k4f2, 5, 2);
  CHECK_FALSE(are_isomorphic(a, b));
  const auto found = canonical_set(r5);
  CHECK(found.count(canonical_form(a)) == 1);
  CHECK(found.count(canonical_form(b)) == 1);

  // Every determinant-4 cone with primitive rays is 1/4(1,1) or 1/4(1,3);
  // both have a T-cone in them, so nothing survives at r = 4.
  CHECK(enumerate_det_r_fanos(4).empty());

  CHECK_THROWS_CODE(enumerate_det_r_fanos(2), ErrorCode::InvalidParameters);
  CHECK_THROWS_CODE(enumerate_det_r_fanos(kMaxEnumerationR + 1), ErrorCode::InvalidParameters);
}

TEST_CASE("enumeration agrees with a bounded box search for r <= 13") {
  for (Int r = 3; r <= 13; ++r) {
    const auto enumerated = canonical_set(enumerate_det_r_fanos(r));
    const Int bound = r + 1;
    for (const auto& poly : enumerated) {
      for (const auto& v : poly) {
        CHECK(std::abs(v.x) <= bound);
        CHECK(std::abs(v.y) <= bound);
      }
    }
    CHECK(box_search(r, bound) == enumerated);
  }
}

TEST_CASE("enumeration is seed-independent") {
  for (Int r = 3; r <= 30; ++r) {
    for (const auto& p : enumerate_det_r_fanos(r)) {
      const auto target = canonical_form(p);
      for (std::size_t i = 0; i < p.size(); ++i) {
        VertexList rotated(p.vertices());
        std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(i),
                    rotated.end());
        const auto seq = build_sequence(rotated);
        const auto seed = cone_normal_form(Cone(rotated[0], rotated[1]));
        const auto loop = unroll_sequence(r, seed.s, seq.coeffs());
        REQUIRE(loop.has_value());
        CHECK(canonical_form(*loop) == target);
      }
    }
  }
}

TEST_CASE("enumeration output does not depend on the number of workers") {
  for (Int r : {29, 31, 59, 60}) {
    const auto one = enumerate_det_r_fanos(r, {1});
    const auto four = enumerate_det_r_fanos(r, {4});
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
  }
}

TEST_CASE("family coverage") {
  auto report = verify_theorem_1_6(7);
  CHECK(report.ok());
  CHECK_FALSE(report.polygons.empty());

  report = verify_theorem_1_6(3);
  REQUIRE(report.polygons.size() == 1);
  const auto& matches = report.polygons[0].matches;
  CHECK(std::find(matches.begin(), matches.end(), FamilyMatch{FamilyId::k6f1, 1}) !=
        matches.end());

  report = verify_theorem_1_6(5);
  CHECK(report.ok());
  bool saw_k4f1 = false, saw_k4f2 = false;
  for (const auto& c : report.polygons) {
    for (const auto& m : c.matches) {
      if (m == FamilyMatch{FamilyId::k4f1, 2}) saw_k4f1 = true;
      if (m == FamilyMatch{FamilyId::k4f2, 2}) saw_k4f2 = true;
    }
  }
  CHECK(saw_k4f1);
  CHECK(saw_k4f2);

  CHECK_THROWS_CODE(verify_theorem_1_6(4), ErrorCode::InvalidParameters);
  CHECK_THROWS_CODE(verify_theorem_1_6(2), ErrorCode::InvalidParameters);
}

TEST_CASE("homogeneous census up to r = 7") {
  const auto report = verify_theorem_1_7(7);
  CHECK(report.ok());
  auto has = [&](Int r, Int k, Int s, Int count) {
    return std::any_of(report.rows.begin(), report.rows.end(), [&](const CensusEntry& e) {
      return e.r == r && e.k == k && e.s == s && e.polygon_count == count;
    });
  };
  CHECK(has(3, 6, 1, 1));
  CHECK(has(5, 4, 2, 2));
  CHECK(has(5, 4, 3, 2));
  CHECK(has(7, 3, 3, 1));
  CHECK(has(7, 3, 5, 1));
  CHECK(has(7, 6, 2, 1));
  CHECK(has(7, 6, 4, 1));
  CHECK(report.rows.size() == 7);
}

TEST_CASE("homogeneous census: no rows at r = 11 and never five vertices") {
  CHECK(homogeneous_census(11).empty());
  for (Int r = 3; r <= 60; ++r) {
    for (const auto& row : homogeneous_census(r)) CHECK(row.k != 5);
  }
}

TEST_CASE("a homogeneous square exists at r = 10 although 2 is not 1 mod 4") {
  // (10,-3), (0,1), (-10,3), (0,-1): cones 1/10(1,3) and 1/10(1,7), which are
  // isomorphic since 3 * 7 = 21 = 1 mod 10, each of length 2 and height 5.
  const auto p = family_polygon(FamilyId::k4f1, 10, 3);
  const auto sc = polygon_singularity_content(p);
  CHECK(sc.n == 0);
  REQUIRE(sc.basket.size() == 4);
  for (const auto& q : sc.basket) CHECK(cqs_isomorphic(q, {10, 3}));
  CHECK_FALSE(existence_predicate(4, 10, 3).exists);

  const auto rows = homogeneous_census(10);
  CHECK(std::any_of(rows.begin(), rows.end(), [](const CensusEntry& e) {
    return e.k == 4 && e.s == 3 && e.polygon_count == 1;
  }));
}

TEST_CASE("a homogeneous triangle exists at r = 21 although 3 is not 1 mod 6") {
  const auto rows = homogeneous_census(21);
  CHECK(std::any_of(rows.begin(), rows.end(),
                    [](const CensusEntry& e) { return e.k == 3 && e.s == 5; }));
  CHECK(mod(5 * 5 - 5 + 1, 21) == 0);
  CHECK_FALSE(existence_predicate(3, 21, 5).exists);
}

TEST_CASE("the k = 2r rule") {
  const auto report = check_k2r_rule(validate_polygon(testing::kHexagon));
  CHECK(report.k == 6);
  CHECK(report.r == 3);
  CHECK(report.l == 1);
  CHECK(report.bound == 12);
  CHECK_THROWS_CODE(check_k2r_rule(4, 3), ErrorCode::RuleViolation);
  CHECK_THROWS_CODE(check_k2r_rule(12, 3), ErrorCode::RuleViolation);
  const auto square = validate_polygon(VertexList{{0, 1}, {-1, 0}, {0, -1}, {1, 0}});
  CHECK_THROWS_CODE(check_k2r_rule(square), ErrorCode::PreconditionViolated);
}

TEST_CASE("the hexagon map rotates the k6f1 model by one step") {
  int checked = 0;
  for (Int r = 3; r <= 200; ++r)
    for (Int s = 1; s < r; ++s) {
      if (!family_parameters_valid(FamilyId::k6f1, r, s) || mod(s * s + s + 1, r) != 0) {
        continue;
      }
      const Int n = (s * s + s + 1) / r;
      const UnimodularMap m(1 + s, r, -n, -s);
      const auto v = family_vertices(FamilyId::k6f1, r, s);
      // sigma_i spans (v_i, v_{i+1}); 0-based here.
      auto maps_cone = [&](const UnimodularMap& h, std::size_t from, std::size_t to) {
        return h(v[from]) == v[to] && h(v[(from + 1) % 6]) == v[(to + 1) % 6];
      };
      CHECK(maps_cone(m.inverse(), 2, 3));  // sigma_3 -> sigma_4
      CHECK(maps_cone(m.inverse(), 5, 0));  // sigma_6 -> sigma_1
      CHECK(maps_cone(m, 3, 2));
      CHECK(maps_cone(m, 0, 5));
      ++checked;
    }
  CHECK(checked == 71);
}
