#include "fano/modseq.hpp"

#include <cstdlib>
#include <random>
#include <string>

#include "fano/error.hpp"

namespace fano {

Int parallelogram_interior_points(LatticeVector u, LatticeVector v) {
  // Pick: area = I + B/2 - 1 with B = 2 (gcd(u) + gcd(v)).
  const Int area = std::abs(det2(u, v));
  return area - gcd(u.x, u.y) - gcd(v.x, v.y) + 1;
}

RModularSequence build_sequence(std::span<const LatticeVector> vectors) {
  const std::size_t k = vectors.size();
  if (k < 2) {
    throw Error(ErrorCode::InvalidParameters,
                "an r-modular sequence needs at least 2 vectors");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_primitive(vectors[i])) {
      throw Error(ErrorCode::NotPrimitive,
                  "vector " + to_string(vectors[i]) + " is not primitive", i);
    }
  }

  RModularSequence seq;
  seq.vectors_.assign(vectors.begin(), vectors.end());
  seq.r_ = std::abs(det2(vectors[0], vectors[1]));
  if (seq.r_ == 0) {
    throw Error(ErrorCode::ZeroDeterminant, "det(v_1, v_2) = 0", 0);
  }
  seq.eps_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Int d = det2(vectors[i], vectors[(i + 1) % k]);
    if (d == 0) {
      throw Error(ErrorCode::ZeroDeterminant,
                  "det(v_" + std::to_string(i + 1) + ", v_" +
                      std::to_string((i + 1) % k + 1) + ") = 0",
                  i);
    }
    if (std::abs(d) != seq.r_) {
      throw Error(ErrorCode::NonUniformDeterminant,
                  "|det(v_" + std::to_string(i + 1) + ", v_" +
                      std::to_string((i + 1) % k + 1) + ")| = " +
                      std::to_string(std::abs(d)) + " but r = " +
                      std::to_string(seq.r_),
                  i);
    }
    seq.eps_[i] = d > 0 ? 1 : -1;
    if (seq.r_ <= 1000 &&
        parallelogram_interior_points(vectors[i], vectors[(i + 1) % k]) !=
            seq.r_ - 1) {
      throw Error(ErrorCode::NonUniformDeterminant,
                  "parallelogram interior count differs from r - 1", i);
    }
  }

  // a_i v_i = -(eps_{i-1} v_{i-1} + eps_i v_{i+1}); the right side is always
  // parallel to v_i, and primitivity of v_i makes a_i integral.
  seq.coeffs_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t prev = (i + k - 1) % k;
    const std::size_t next = (i + 1) % k;
    const LatticeVector rhs =
        -(seq.eps_[prev] * vectors[prev] + seq.eps_[i] * vectors[next]);
    const LatticeVector v = vectors[i];
    const Int a = v.x != 0 ? rhs.x / v.x : rhs.y / v.y;
    if (a * v != rhs) {
      throw Error(ErrorCode::NonUniformDeterminant,
                  "recurrence coefficient a_" + std::to_string(i + 1) +
                      " is not integral",
                  i);
    }
    seq.coeffs_[i] = a;
  }
  return seq;
}

Int winding_from_formula(const RModularSequence& seq) {
  Int total = 0;
  for (Int a : seq.coeffs()) total += a;
  for (int e : seq.eps()) total += 3 * e;
  if (total % 12 != 0) {
    throw Error(ErrorCode::NonIntegralWinding,
                "sum a_i + 3 sum eps_i = " + std::to_string(total) +
                    " is not divisible by 12");
  }
  return total / 12;
}

std::vector<RationalVector> dual_sequence(const RModularSequence& seq) {
  const auto& v = seq.vectors();
  const std::size_t k = v.size();
  std::vector<RationalVector> w(k);
  for (std::size_t i = 0; i < k; ++i) {
    const LatticeVector prev = v[(i + k - 1) % k];
    const Int d = det2(prev, v[i]);
    const LatticeVector diff = v[i] - prev;
    w[i] = {Rational(diff.x, d), Rational(diff.y, d)};
  }
  return w;
}

Int boundary_sum(const RModularSequence& seq) {
  const auto& v = seq.vectors();
  Int total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += det2(v[i], v[(i + 1) % v.size()]);
  }
  return total;
}

Rational boundary_sum_dual(const RModularSequence& seq) {
  const auto w = dual_sequence(seq);
  Rational total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += det2(w[i], w[(i + 1) % w.size()]);
  }
  return total;
}

Rational twelve_point_residual(const RModularSequence& seq) {
  const Int winding = geometric_winding(seq.vectors());
  return Rational(boundary_sum(seq), seq.r()) +
         Rational(seq.r()) * boundary_sum_dual(seq) - Rational(12 * winding);
}

namespace {

// Coordinates beyond this are rejected so determinants stay far from
// overflow.
constexpr Int kCoordinateLimit = Int{1} << 20;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi]; modulo reduction keeps the stream
  // identical across standard libraries.
  Int between(Int lo, Int hi) {
    return lo + static_cast<Int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  int sign() { return between(0, 1) == 0 ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

bool within_limit(LatticeVector v) {
  return std::abs(v.x) <= kCoordinateLimit && std::abs(v.y) <= kCoordinateLimit;
}

}  // namespace

RModularSequence random_sequence(Int r, int k, std::uint64_t seed) {
  if (r < 1 || k < 2) {
    throw Error(ErrorCode::InvalidParameters,
                "random_sequence needs r >= 1 and k >= 2");
  }
  // Mod 2 every vector of an even-r sequence is the same class, so every a_i
  // is even and sum a_i + 3 sum eps_i = 12 w forces k to be even.
  if (r % 2 == 0 && k % 2 == 1) {
    throw Error(ErrorCode::GenerationExhausted,
                "no r-modular sequence of odd length exists for even r = " +
                    std::to_string(r));
  }

  Draw draw(seed);
  std::vector<LatticeVector> v;
  std::vector<int> eps(static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < kMaxGenerationRetries; ++attempt) {
    Int s = 0;
    if (r > 1) {
      do {
        s = draw.between(1, r - 1);
      } while (gcd(r, s) != 1);
    }
    v = {{r, -s}, {0, 1}};

    // Scatter the seed pair with a few shears and an optional reflection.
    const Int shears = draw.between(0, 3);
    for (Int j = 0; j < shears; ++j) {
      const Int t = draw.between(-2, 2);
      const bool horizontal = draw.between(0, 1) == 0;
      for (auto& w : v) {
        if (horizontal) {
          w.x += t * w.y;
        } else {
          w.y += t * w.x;
        }
      }
    }
    if (draw.between(0, 1) == 1) {
      for (auto& w : v) w.y = -w.y;
    }
    if (k == 2) return build_sequence(v);

    eps[0] = det2(v[0], v[1]) > 0 ? 1 : -1;
    for (int i = 1; i < k; ++i) eps[static_cast<std::size_t>(i)] = draw.sign();

    // 0-based: v[i+1] = -eps[i-1] eps[i] v[i-1] - eps[i] a v[i].
    auto successor = [&](std::size_t i, Int a) {
      return -(eps[i - 1] * eps[i]) * v[i - 1] - (eps[i] * a) * v[i];
    };

    bool ok = true;
    std::vector<Int> candidates;
    for (std::size_t i = 1; i + 2 < static_cast<std::size_t>(k); ++i) {
      candidates.clear();
      for (Int a = -3; a <= 3; ++a) {
        const LatticeVector w = successor(i, a);
        if (is_primitive(w) && within_limit(w)) candidates.push_back(a);
      }
      if (candidates.empty()) {
        ok = false;
        break;
      }
      const auto pick = static_cast<std::size_t>(
          draw.between(0, static_cast<Int>(candidates.size()) - 1));
      v.push_back(successor(i, candidates[pick]));
    }
    if (!ok) continue;

    // Seam: choose a_{k-1} so that det(v_k, v_1) = eps_k r, which is
    // linear in the coefficient.
    const std::size_t i = static_cast<std::size_t>(k) - 2;
    const Int offset = -(eps[i - 1] * eps[i]) * det2(v[i - 1], v[0]);
    const Int slope = -eps[i] * det2(v[i], v[0]);
    const Int target = eps[static_cast<std::size_t>(k) - 1] * r;
    if (slope == 0 || (target - offset) % slope != 0) continue;
    const LatticeVector last = successor(i, (target - offset) / slope);
    if (!is_primitive(last) || !within_limit(last)) continue;
    v.push_back(last);
    return build_sequence(v);
  }
  throw Error(ErrorCode::GenerationExhausted,
              "no closed " + std::to_string(r) + "-modular loop of length " +
                  std::to_string(k) + " after " +
                  std::to_string(kMaxGenerationRetries) + " attempts");
}

}  // namespace fano
