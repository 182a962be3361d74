#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

/// Inputs to the factorisation routines are capped here (trial division).
inline constexpr Int kFactorLimit = Int{1} << 32;

struct PrimePower {
  Int p;
  int e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Prime factorisation by trial division, ascending. factorize(1) is empty.
/// Throws InvalidParameters for n < 1, InputTooLarge for n >= 2^32.
Factorization factorize(Int n);

bool is_prime(Int n);

/// base^exp mod m for 0 < m < 2^32.
Int pow_mod(Int base, Int exp, Int m);

/// Legendre symbol (a/p) by Euler's criterion. Throws NotOddPrime.
int legendre(Int a, Int p);

/// All s in [0, r) with s^2 + b s + c = 0 (mod r), ascending, by scanning
/// every residue.
std::vector<Int> solve_quadratic_congruence(Int b, Int c, Int r);

/// Same roots via roots modulo each p (Tonelli-Shanks on the discriminant
/// for odd p), lifting to p^e, and CRT recombination.
std::vector<Int> solve_quadratic_congruence_fast(Int b, Int c, Int r);

/// Every prime p | r satisfies p = target (mod m); vacuous for r = 1.
bool all_primes_congruent(Int r, Int m, Int target);

/// Which clause of the homogeneous-basket existence criterion holds.
enum class ExistenceBranch { None, K3, K4, K6Special, K6 };

struct ExistenceAnswer {
  bool exists = false;
  ExistenceBranch branch = ExistenceBranch::None;
};

/// Existence of a Fano polygon with singularity content
/// (0, {k x 1/r(1,s)}), as the criterion:
///   k=3: all p | r are 1 mod 6 and s^2 - s + 1 = 0 (mod r);
///   k=4: all p | r are 1 mod 4 and s^2 + 1 = 0 (mod r);
///   k=6: (r, s) = (3, 1), or all p | r are 1 mod 6 and s^2 + s + 1 = 0.
/// Throws InvalidParameters unless k >= 3, r >= 3, 1 <= s < r, gcd(r,s)=1.
ExistenceAnswer existence_predicate(Int k, Int r, Int s);

/// "exists: true; branch: k=4, s^2+1 ≡ 0 (mod 5)" or "exists: false".
std::string describe(const ExistenceAnswer& answer, Int r);

}  // namespace fano
