#include <doctest.h>

#include <numeric>

#include "fano/modseq.hpp"
#include "support.hpp"

using namespace fano;

namespace {

const std::vector<LatticeVector> kTriangle{{1, 0}, {0, 1}, {-1, -1}};
const std::vector<LatticeVector> kPair{{1, 0}, {0, 1}};
const std::vector<LatticeVector> kHexagonSeq{{3, -1}, {0, 1},  {-3, 2},
                                             {-3, 1}, {0, -1}, {3, -2}};

Int brute_interior_points(LatticeVector u, LatticeVector v) {
  // Points t u + w v with 0 < t, w < 1, i.e. lattice points strictly inside.
  const Int d = det2(u, v);
  Int count = 0;
  const Int lo_x = std::min({Int{0}, u.x, v.x, u.x + v.x});
  const Int hi_x = std::max({Int{0}, u.x, v.x, u.x + v.x});
  const Int lo_y = std::min({Int{0}, u.y, v.y, u.y + v.y});
  const Int hi_y = std::max({Int{0}, u.y, v.y, u.y + v.y});
  for (Int x = lo_x; x <= hi_x; ++x)
    for (Int y = lo_y; y <= hi_y; ++y) {
      // Cramer: t = det(p, v) / d, w = det(u, p) / d.
      const LatticeVector p{x, y};
      const Int t = det2(p, v), w = det2(u, p);
      const bool inside = d > 0 ? (t > 0 && t < d && w > 0 && w < d)
                                : (t < 0 && t > d && w < 0 && w > d);
      if (inside) ++count;
    }
  return count;
}

struct Corpus {
  std::vector<RModularSequence> sequences;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    std::uint64_t seed = 1;
    for (Int r = 1; r <= 12; ++r)
      for (int k = 2; k <= 10; ++k) {
        if (r % 2 == 0 && k % 2 == 1) continue;
        for (int i = 0; i < 12; ++i) out.sequences.push_back(random_sequence(r, k, seed++));
      }
    return out;
  }();
  return c;
}

}  // namespace

TEST_CASE("building sequences") {
  auto seq = build_sequence(kTriangle);
  CHECK(seq.r() == 1);
  CHECK(seq.eps() == std::vector<int>{1, 1, 1});
  CHECK(seq.coeffs() == std::vector<Int>{1, 1, 1});

  seq = build_sequence(kPair);
  CHECK(seq.r() == 1);
  CHECK(seq.eps() == std::vector<int>{1, -1});
  CHECK(seq.coeffs() == std::vector<Int>{0, 0});

  seq = build_sequence(kHexagonSeq);
  CHECK(seq.r() == 3);
  CHECK(seq.eps() == std::vector<int>(6, 1));
  CHECK(seq.coeffs() == std::vector<Int>(6, -1));
}

TEST_CASE("building sequences rejects bad input") {
  const std::vector<LatticeVector> one{{1, 0}};
  CHECK_THROWS_CODE(build_sequence(one), ErrorCode::InvalidParameters);

  const std::vector<LatticeVector> imprimitive{{1, 0}, {0, 2}, {-1, -1}};
  try {
    (void)build_sequence(imprimitive);
    FAIL("expected NotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrimitive);
    CHECK(e.index() == std::optional<std::size_t>(1));
  }

  const std::vector<LatticeVector> collinear{{1, 0}, {0, 1}, {0, -1}};
  CHECK_THROWS_CODE(build_sequence(collinear), ErrorCode::ZeroDeterminant);

  const std::vector<LatticeVector> mixed{{1, 0}, {0, 1}, {-2, -1}};
  CHECK_THROWS_CODE(build_sequence(mixed), ErrorCode::NonUniformDeterminant);
}

TEST_CASE("parallelogram interior points match a brute-force count") {
  testing::Rng rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const LatticeVector u{rng.between(-12, 12), rng.between(-12, 12)};
    const LatticeVector v{rng.between(-12, 12), rng.between(-12, 12)};
    if (det2(u, v) == 0) continue;
    CHECK(parallelogram_interior_points(u, v) == brute_interior_points(u, v));
  }
  CHECK(parallelogram_interior_points({0, 1}, {3, -1}) == 2);
}

TEST_CASE("winding from the formula") {
  CHECK(winding_from_formula(build_sequence(kTriangle)) == 1);
  CHECK(winding_from_formula(build_sequence(kPair)) == 0);
  CHECK(winding_from_formula(build_sequence(kHexagonSeq)) == 1);
}

TEST_CASE("dual sequence") {
  auto w = dual_sequence(build_sequence(kTriangle));
  CHECK(w[0] == RationalVector{2, 1});

  w = dual_sequence(build_sequence(kHexagonSeq));
  CHECK(w[1] == RationalVector{-1, Rational(2, 3)});

  w = dual_sequence(build_sequence(kPair));
  CHECK(w[0] == RationalVector{-1, 1});
}

TEST_CASE("boundary sums and the twelve-point residual") {
  const auto hexagon = build_sequence(kHexagonSeq);
  CHECK(boundary_sum(hexagon) == 18);
  CHECK(boundary_sum_dual(hexagon) == Rational(2));
  CHECK(twelve_point_residual(hexagon) == Rational(0));

  const auto triangle = build_sequence(kTriangle);
  CHECK(boundary_sum(triangle) == 3);
  CHECK(boundary_sum_dual(triangle) == Rational(9));
  CHECK(twelve_point_residual(triangle) == Rational(0));

  const auto pair = build_sequence(kPair);
  CHECK(boundary_sum(pair) == 0);
  CHECK(boundary_sum_dual(pair) == Rational(0));
  CHECK(twelve_point_residual(pair) == Rational(0));
}

TEST_CASE("random sequences: documented examples") {
  const auto a = random_sequence(1, 3, 7);
  CHECK(a.r() == 1);
  CHECK(a.size() == 3);

  const auto b = random_sequence(3, 6, 1);
  CHECK(b.r() == 3);
  const auto rebuilt = build_sequence(b.vectors());
  CHECK(rebuilt.coeffs() == b.coeffs());
  CHECK(rebuilt.eps() == b.eps());

  const auto c = random_sequence(5, 4, 2);
  CHECK(winding_from_formula(c) == geometric_winding(c.vectors()));
}

TEST_CASE("random sequences are deterministic per seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(random_sequence(7, 6, seed).vectors() == random_sequence(7, 6, seed).vectors());
  }
  bool differs = false;
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    if (random_sequence(7, 6, seed).vectors() != random_sequence(7, 6, 0).vectors()) {
      differs = true;
    }
  }
  CHECK(differs);
}

TEST_CASE("random sequences reject impossible requests") {
  CHECK_THROWS_CODE(random_sequence(0, 3, 1), ErrorCode::InvalidParameters);
  CHECK_THROWS_CODE(random_sequence(3, 1, 1), ErrorCode::InvalidParameters);
  // For even r every a_i is even, so the winding formula forces even k.
  CHECK_THROWS_CODE(random_sequence(4, 5, 1), ErrorCode::GenerationExhausted);
}

TEST_CASE("corpus: twelve-point identity and winding formula") {
  const auto& seqs = corpus().sequences;
  REQUIRE(seqs.size() >= 1000);
  for (const auto& seq : seqs) {
    CHECK(twelve_point_residual(seq) == Rational(0));
    CHECK(winding_from_formula(seq) == geometric_winding(seq.vectors()));
  }
}

TEST_CASE("corpus: the coefficient at a longest vector is 0 or +-1") {
  for (const auto& seq : corpus().sequences) {
    const auto& v = seq.vectors();
    std::size_t j = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (dot(v[i], v[i]) > dot(v[j], v[j])) j = i;
    }
    CHECK(std::abs(seq.coeffs()[j]) <= 1);
  }
}

TEST_CASE("corpus: dual determinants are (a_i + eps_i + eps_{i-1}) / r") {
  for (const auto& seq : corpus().sequences) {
    const auto w = dual_sequence(seq);
    const std::size_t k = seq.size();
    Rational total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational expected(
          seq.coeffs()[i] + seq.eps()[i] + seq.eps()[(i + k - 1) % k], seq.r());
      CHECK(det2(w[i], w[(i + 1) % k]) == expected);
      total += expected;
    }
    CHECK(boundary_sum_dual(seq) == total);
    CHECK(boundary_sum(seq) ==
          seq.r() * std::accumulate(seq.eps().begin(), seq.eps().end(), Int{0}));
  }
}
