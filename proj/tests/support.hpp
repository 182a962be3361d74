#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fano/error.hpp"
#include "fano/lattice.hpp"

namespace testing {

using fano::Int;
using fano::LatticeVector;

/// Runs f and returns the code of the fano::Error it throws, if any.
template <typename F>
std::optional<fano::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const fano::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define CHECK_THROWS_CODE(expr, expected)                                  \
  CHECK(::testing::error_of([&] { (void)(expr); }) ==                     \
        std::optional<fano::ErrorCode>(expected))

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Int between(Int lo, Int hi) {
    return std::uniform_int_distribution<Int>(lo, hi)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

inline fano::UnimodularMap random_unimodular(Rng& rng, Int bound) {
  for (;;) {
    const Int a = rng.between(-bound, bound), b = rng.between(-bound, bound);
    const Int c = rng.between(-bound, bound), d = rng.between(-bound, bound);
    if (a * d - b * c == 1 || a * d - b * c == -1) return {a, b, c, d};
  }
}

inline const std::vector<LatticeVector> kHexagon = {{0, 1},  {-3, 2}, {-3, 1},
                                                    {0, -1}, {3, -2}, {3, -1}};

/// Winding number by summing floating-point turning angles; an oracle that
/// shares no code with the integer crossing count.
inline Int angle_sum_winding(const std::vector<LatticeVector>& loop) {
  double total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto u = loop[i];
    const auto v = loop[(i + 1) % loop.size()];
    total += std::atan2(static_cast<double>(u.x * v.y - u.y * v.x),
                        static_cast<double>(u.x * v.x + u.y * v.y));
  }
  return static_cast<Int>(std::llround(total / (2 * std::acos(-1.0))));
}

}  // namespace testing
