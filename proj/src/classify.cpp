#include "fano/classify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "fano/error.hpp"

namespace fano {

FanoPolygon family_polygon(FamilyId f, Int r, Int s) {
  const auto vertices = family_vertices(f, r, s);
  try {
    return validate_polygon(vertices);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotConvexAtParameters,
                std::string(to_string(f)) + " at r=" + std::to_string(r) +
                    " s=" + std::to_string(s) + ": " + e.what());
  }
}

namespace {

void extend_tuples(int remaining, Int total, std::vector<Int>& prefix,
                   std::vector<std::vector<Int>>& out) {
  if (remaining == 1) {
    if (total >= -1) {
      prefix.push_back(total);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // The other entries are at least -1 each.
  for (Int a = -1; a <= total + (remaining - 1); ++a) {
    prefix.push_back(a);
    extend_tuples(remaining - 1, total - a, prefix, out);
    prefix.pop_back();
  }
}

using VertexList = std::vector<LatticeVector>;

// Runs `work(cell)` for cell in [0, cells) on up to `jobs` threads.
template <typename Work>
void run_cells(std::size_t cells, unsigned jobs, Work&& work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < cells; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = cursor++; i < cells; i = cursor++) work(i);
    });
  }
}

bool all_cones_r(const VertexList& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (classify_cone(Cone(v[i], v[(i + 1) % v.size()])).tag != ConeTag::R) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<Int>> coefficient_tuples(int k) {
  std::vector<std::vector<Int>> out;
  if (k < 1) return out;
  std::vector<Int> prefix;
  extend_tuples(k, 12 - 3 * Int{k}, prefix, out);
  return out;
}

std::optional<std::vector<LatticeVector>> unroll_sequence(Int r, Int s,
                                                          std::span<const Int> a) {
  const std::size_t k = a.size();
  if (k < 2) return std::nullopt;
  // 0-based: v[i+1] = -v[i-1] - a[i] v[i]; v[k] must equal v[0].
  VertexList v{{r, -s}, {0, 1}};
  v.reserve(k + 1);
  for (std::size_t i = 1; i < k; ++i) v.push_back(-v[i - 1] - a[i] * v[i]);
  if (v[k] != v[0]) return std::nullopt;
  if (-v[k - 1] - a[0] * v[0] != v[1]) return std::nullopt;
  v.pop_back();
  return v;
}

std::vector<FanoPolygon> enumerate_det_r_fanos(Int r, EnumerationOptions options) {
  if (r < 3 || r > kMaxEnumerationR) {
    throw Error(ErrorCode::InvalidParameters,
                "enumeration needs 3 <= r <= " + std::to_string(kMaxEnumerationR) +
                    ", got " + std::to_string(r));
  }
  struct Cell {
    int k;
    Int s;
  };
  std::vector<Cell> cells;
  std::vector<std::vector<std::vector<Int>>> tuples(7);
  for (int k = 3; k <= 6; ++k) {
    tuples[static_cast<std::size_t>(k)] = coefficient_tuples(k);
    for (Int s = 1; s < r; ++s) {
      if (gcd(r, s) == 1) cells.push_back({k, s});
    }
  }

  std::vector<std::set<VertexList>> found(cells.size());
  run_cells(cells.size(), options.jobs, [&](std::size_t c) {
    const auto [k, s] = cells[c];
    for (const auto& a : tuples[static_cast<std::size_t>(k)]) {
      auto loop = unroll_sequence(r, s, a);
      if (!loop) continue;
      if (!std::all_of(loop->begin(), loop->end(),
                       [](LatticeVector v) { return is_primitive(v); })) {
        continue;
      }
      if (!all_cones_r(*loop)) continue;
      try {
        const FanoPolygon p = validate_polygon(*loop);
        found[c].insert(canonical_form(p));
      } catch (const Error&) {
        // Closed loop but not a convex polygon around the origin.
      }
    }
  });

  std::set<VertexList> merged;
  for (auto& f : found) merged.insert(f.begin(), f.end());
  std::vector<FanoPolygon> out;
  out.reserve(merged.size());
  for (const auto& canonical : merged) out.push_back(validate_polygon(canonical));
  return out;
}

Theorem16Report verify_theorem_1_6(Int r, EnumerationOptions options) {
  if (r < 3 || r == 4) {
    throw Error(ErrorCode::InvalidParameters,
                "the family classification applies to r >= 3, r != 4; got " +
                    std::to_string(r));
  }
  std::map<VertexList, std::vector<FamilyMatch>> models;
  for (FamilyId f : kAllFamilies) {
    for (Int s = 1; s < r; ++s) {
      if (!family_parameters_valid(f, r, s)) continue;
      try {
        models[canonical_form(family_polygon(f, r, s))].push_back({f, s});
      } catch (const Error&) {
        // Not a polygon at these parameters; it cannot match anything.
      }
    }
  }

  Theorem16Report report;
  report.r = r;
  for (auto& p : enumerate_det_r_fanos(r, options)) {
    auto it = models.find(canonical_form(p));
    if (it == models.end()) {
      report.orphans.push_back(p);
    } else {
      report.polygons.push_back({p, it->second});
    }
  }
  return report;
}

std::vector<CensusEntry> homogeneous_census(Int r, EnumerationOptions options) {
  std::map<std::pair<Int, Int>, CensusEntry> rows;
  for (const auto& p : enumerate_det_r_fanos(r, options)) {
    const auto sc = polygon_singularity_content(p);
    if (sc.n != 0 || sc.basket.size() != p.size()) continue;
    const auto& first = sc.basket.front();
    const bool homogeneous =
        std::all_of(sc.basket.begin(), sc.basket.end(),
                    [&](const auto& q) { return cqs_isomorphic(q, first); });
    if (!homogeneous) continue;
    const Int k = static_cast<Int>(p.size());
    for (Int s = 1; s < r; ++s) {
      if (gcd(r, s) != 1 || !cqs_isomorphic({r, s}, first)) continue;
      auto& row = rows[{k, s}];
      row.r = r;
      row.k = k;
      row.s = s;
      ++row.polygon_count;
      row.canonical_models.push_back(canonical_form(p));
    }
  }
  std::vector<CensusEntry> out;
  out.reserve(rows.size());
  for (auto& [key, row] : rows) out.push_back(std::move(row));
  return out;
}

CensusReport verify_theorem_1_7(Int r_max, EnumerationOptions options) {
  if (r_max < 3 || r_max > kMaxEnumerationR) {
    throw Error(ErrorCode::InvalidParameters,
                "census needs 3 <= r_max <= " + std::to_string(kMaxEnumerationR));
  }
  CensusReport report;
  report.r_max = r_max;
  for (Int r = 3; r <= r_max; ++r) {
    const auto rows = homogeneous_census(r, options);
    std::map<std::pair<Int, Int>, Int> counts;
    for (const auto& row : rows) counts[{row.k, row.s}] = row.polygon_count;

    for (Int k = 3; k <= 6; ++k) {
      for (Int s = 1; s < r; ++s) {
        if (gcd(r, s) != 1) continue;
        const bool predicted = existence_predicate(k, r, s).exists;
        const auto it = counts.find({k, s});
        const Int enumerated = it == counts.end() ? 0 : it->second;
        if ((enumerated > 0) != predicted) {
          report.mismatches.push_back({k, r, s, enumerated, predicted});
        }
      }
    }
    for (const auto& row : rows) {
      const bool five_two = row.k == 4 && cqs_isomorphic({row.r, row.s}, {5, 2});
      if (row.polygon_count != (five_two ? 2 : 1)) {
        report.uniqueness_violations.push_back(row);
      }
    }
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

K2rRuleReport check_k2r_rule(Int k, Int r) {
  if (k < 1 || r < 2) {
    throw Error(ErrorCode::PreconditionViolated,
                "rule needs k >= 1 and r >= 2");
  }
  if (k % (2 * r) != 0) {
    throw Error(ErrorCode::RuleViolation,
                "k = " + std::to_string(k) + " is not a multiple of 2r = " +
                    std::to_string(2 * r));
  }
  K2rRuleReport report{k, r, k / (2 * r), 0};
  report.bound = 4 * r * report.l;
  if (report.bound > 12) {
    throw Error(ErrorCode::RuleViolation,
                "4 r l = " + std::to_string(report.bound) + " exceeds 12");
  }
  return report;
}

K2rRuleReport check_k2r_rule(const FanoPolygon& p) {
  const auto sc = polygon_singularity_content(p);
  const bool shape =
      sc.n == 0 && !sc.basket.empty() && sc.basket.size() == p.size() &&
      sc.basket.front().r >= 2 &&
      std::all_of(sc.basket.begin(), sc.basket.end(), [&](const auto& q) {
        return q == CyclicQuotientSingularity{sc.basket.front().r, 1};
      });
  if (!shape) {
    throw Error(ErrorCode::PreconditionViolated,
                "content " + to_string(sc) + " is not (0, {k x 1/r(1,1)})");
  }
  return check_k2r_rule(static_cast<Int>(sc.basket.size()), sc.basket.front().r);
}

}  // namespace fano
