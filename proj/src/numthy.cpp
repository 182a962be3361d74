#include "fano/numthy.hpp"

#include <algorithm>

#include "fano/error.hpp"

namespace fano {

namespace {

__extension__ typedef __int128 Wide;

void check_modulus(Int r) {
  if (r < 1) {
    throw Error(ErrorCode::InvalidParameters,
                "modulus must be positive, got " + std::to_string(r));
  }
  if (r >= kFactorLimit) {
    throw Error(ErrorCode::InputTooLarge,
                std::to_string(r) + " exceeds the trial-division cap 2^32");
  }
}

// s^2 + b s + c mod m, without overflow for m < 2^32.
Int quadratic_mod(Int s, Int b, Int c, Int m) {
  const Wide v = Wide(s) * s + Wide(mod(b, m)) * s + mod(c, m);
  return static_cast<Int>(v % m);
}

// Square root of a (a quadratic residue) modulo an odd prime p.
Int tonelli_shanks(Int a, Int p) {
  a = mod(a, p);
  if (a == 0) return 0;
  Int q = p - 1;
  int e = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++e;
  }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int c = pow_mod(z, q, p);
  Int x = pow_mod(a, (q + 1) / 2, p);
  Int t = pow_mod(a, q, p);
  int m = e;
  while (t != 1) {
    int i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = static_cast<Int>(Wide(t2) * t2 % p);
      ++i;
    }
    Int b = c;
    for (int j = 0; j < m - i - 1; ++j) b = static_cast<Int>(Wide(b) * b % p);
    x = static_cast<Int>(Wide(x) * b % p);
    c = static_cast<Int>(Wide(b) * b % p);
    t = static_cast<Int>(Wide(t) * c % p);
    m = i;
  }
  return x;
}

std::vector<Int> roots_mod_prime(Int b, Int c, Int p) {
  std::vector<Int> roots;
  if (p == 2) {
    for (Int s = 0; s < 2; ++s) {
      if (quadratic_mod(s, b, c, 2) == 0) roots.push_back(s);
    }
    return roots;
  }
  // (2s + b)^2 = b^2 - 4c.
  const Int bm = mod(b, p);
  const Int disc = mod(static_cast<Int>((Wide(bm) * bm - 4 * Wide(mod(c, p))) % p), p);
  if (disc != 0 && legendre(disc, p) != 1) return roots;
  const Int y = tonelli_shanks(disc, p);
  const Int half = (p + 1) / 2;
  for (Int root : {y, mod(-y, p)}) {
    roots.push_back(static_cast<Int>(Wide(mod(root - bm, p)) * half % p));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

Factorization factorize(Int n) {
  check_modulus(n);
  Factorization out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().e == 1;
}

Int pow_mod(Int base, Int exp, Int m) {
  Wide result = 1 % m;
  Wide b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<Int>(result);
}

int legendre(Int a, Int p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw Error(ErrorCode::NotOddPrime,
                std::to_string(p) + " is not an odd prime");
  }
  const Int v = pow_mod(a, (p - 1) / 2, p);
  if (v == 0) return 0;
  return v == 1 ? 1 : -1;
}

std::vector<Int> solve_quadratic_congruence(Int b, Int c, Int r) {
  check_modulus(r);
  std::vector<Int> out;
  for (Int s = 0; s < r; ++s) {
    if (quadratic_mod(s, b, c, r) == 0) out.push_back(s);
  }
  return out;
}

std::vector<Int> solve_quadratic_congruence_fast(Int b, Int c, Int r) {
  check_modulus(r);
  std::vector<Int> combined{0};
  Int modulus = 1;
  for (const auto& [p, e] : factorize(r)) {
    std::vector<Int> roots = roots_mod_prime(b, c, p);
    Int pj = p;
    // Every root mod p^{j+1} reduces to a root mod p^j, so trying all p
    // lifts of each root is complete, singular roots included.
    for (int j = 1; j < e && !roots.empty(); ++j) {
      std::vector<Int> lifted;
      for (Int x : roots) {
        for (Int t = 0; t < p; ++t) {
          const Int candidate = x + t * pj;
          if (quadratic_mod(candidate, b, c, pj * p) == 0) {
            lifted.push_back(candidate);
          }
        }
      }
      roots = std::move(lifted);
      pj *= p;
    }
    if (roots.empty()) return {};

    const Int inv = mod_inverse(modulus % pj, pj);
    std::vector<Int> next;
    next.reserve(combined.size() * roots.size());
    for (Int a : combined) {
      for (Int x : roots) {
        const Wide k = Wide(mod(x - a, pj)) * inv % pj;
        next.push_back(static_cast<Int>(a + k * modulus));
      }
    }
    combined = std::move(next);
    modulus *= pj;
  }
  std::sort(combined.begin(), combined.end());
  return combined;
}

bool all_primes_congruent(Int r, Int m, Int target) {
  for (const auto& [p, e] : factorize(r)) {
    (void)e;
    if (mod(p, m) != mod(target, m)) return false;
  }
  return true;
}

ExistenceAnswer existence_predicate(Int k, Int r, Int s) {
  if (k < 3 || r < 3 || s < 1 || s >= r || gcd(r, s) != 1) {
    throw Error(ErrorCode::InvalidParameters,
                "existence predicate needs k >= 3, r >= 3, 1 <= s < r and "
                "gcd(r, s) = 1; got k=" +
                    std::to_string(k) + " r=" + std::to_string(r) +
                    " s=" + std::to_string(s));
  }
  auto divides = [&](Int value) { return mod(value, r) == 0; };
  switch (k) {
    case 3:
      if (all_primes_congruent(r, 6, 1) && divides(s * s - s + 1)) {
        return {true, ExistenceBranch::K3};
      }
      break;
    case 4:
      if (all_primes_congruent(r, 4, 1) && divides(s * s + 1)) {
        return {true, ExistenceBranch::K4};
      }
      break;
    case 6:
      if (r == 3 && s == 1) return {true, ExistenceBranch::K6Special};
      if (all_primes_congruent(r, 6, 1) && divides(s * s + s + 1)) {
        return {true, ExistenceBranch::K6};
      }
      break;
    default:
      break;
  }
  return {};
}

std::string describe(const ExistenceAnswer& answer, Int r) {
  if (!answer.exists) return "exists: false";
  const std::string mod_r = " ≡ 0 (mod " + std::to_string(r) + ")";
  switch (answer.branch) {
    case ExistenceBranch::K3: return "exists: true; branch: k=3, s^2-s+1" + mod_r;
    case ExistenceBranch::K4: return "exists: true; branch: k=4, s^2+1" + mod_r;
    case ExistenceBranch::K6Special: return "exists: true; branch: k=6, r=3, s=1";
    case ExistenceBranch::K6: return "exists: true; branch: k=6, s^2+s+1" + mod_r;
    case ExistenceBranch::None: break;
  }
  return "exists: true";
}

}  // namespace fano
