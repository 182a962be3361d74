#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "fano/lattice.hpp"

namespace fano {

using Rational = boost::rational<Int>;

struct RationalVector {
  Rational x;
  Rational y;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
};

inline Rational det2(const RationalVector& u, const RationalVector& v) {
  return u.x * v.y - u.y * v.x;
}

/// An r-modular sequence v_1, ..., v_k of primitive vectors with
/// |det(v_i, v_{i+1})| = r for all i (indices cyclic: v_0 = v_k,
/// v_{k+1} = v_1).
///
/// Storage is 0-based: vectors()[i] is v_{i+1}, eps()[i] is
/// eps_{i+1} = det(v_{i+1}, v_{i+2}) / r and coeffs()[i] is a_{i+1}, the
/// integer with eps_i v_i + eps_{i+1} v_{i+2} + a_{i+1} v_{i+1} = 0.
class RModularSequence {
 public:
  const std::vector<LatticeVector>& vectors() const { return vectors_; }
  Int r() const { return r_; }
  const std::vector<int>& eps() const { return eps_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  std::size_t size() const { return vectors_.size(); }

 private:
  RModularSequence() = default;
  friend RModularSequence build_sequence(std::span<const LatticeVector>);

  std::vector<LatticeVector> vectors_;
  Int r_ = 0;
  std::vector<int> eps_;
  std::vector<Int> coeffs_;
};

/// Lattice points strictly inside the parallelogram conv{0, u, v, u+v},
/// by Pick's theorem.
Int parallelogram_interior_points(LatticeVector u, LatticeVector v);

/// Infers r = |det(v_1, v_2)|, checks uniformity and computes eps and a.
/// Throws NotPrimitive, ZeroDeterminant, NonUniformDeterminant, or
/// InvalidParameters for fewer than two vectors.
RModularSequence build_sequence(std::span<const LatticeVector> vectors);

/// (sum a_i + 3 sum eps_i) / 12. Throws NonIntegralWinding.
Int winding_from_formula(const RModularSequence& seq);

/// w_i = (v_i - v_{i-1}) / det(v_{i-1}, v_i).
std::vector<RationalVector> dual_sequence(const RModularSequence& seq);

/// B(P) = sum det(v_i, v_{i+1}).
Int boundary_sum(const RModularSequence& seq);

/// B(P^dual) = sum det(w_i, w_{i+1}).
Rational boundary_sum_dual(const RModularSequence& seq);

/// B(P)/r + r B(P^dual) - 12 w(P), with w(P) the geometric winding number.
/// Identically zero for genuine r-modular sequences.
Rational twelve_point_residual(const RModularSequence& seq);

/// Maximum number of closure attempts made by random_sequence.
inline constexpr int kMaxGenerationRetries = 10'000;

/// Deterministic pseudo-random r-modular sequence of length k. Vectors are
/// produced by v_{i+1} = -eps_{i-1} eps_i v_{i-1} - eps_i a_i v_i with drawn
/// signs and coefficients; the last coefficient is solved so the loop
/// closes with |det(v_k, v_1)| = r. Throws GenerationExhausted.
RModularSequence random_sequence(Int r, int k, std::uint64_t seed);

}  // namespace fano
