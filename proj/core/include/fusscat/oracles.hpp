#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "fusscat/bijections.hpp"
#include "fusscat/dissections.hpp"
#include "fusscat/partitions.hpp"
#include "fusscat/shi_tableau.hpp"

// Brute-force cross-checks for the enumerators and bijections.

namespace fusscat::oracles {

inline constexpr std::uint64_t kDefaultCandidateLimit = 100'000'000;

/// (m+1)^{n(n+1)/2}, saturating at UINT64_MAX.
std::uint64_t filling_count(int n, int m);

/// Every filling of [0, m]^{n(n+1)/2} that passes check_shi_conditions.
/// Throws InstanceTooLarge when filling_count exceeds `limit`.
std::set<ShiTableau> exhaustive_tableaux(int n, int m,
                                         std::uint64_t limit = kDefaultCandidateLimit);

/// Samples the dominant chamber on the grid y_i = c_i / resolution,
/// 1 <= c_i <= (m+1) * resolution, in simple-root coordinates. Points lying on a
/// hyperplane (some y_i + ... + y_j integral) are skipped; otherwise
/// k_{i,j} = min(m, floor(y_i + ... + y_j)). Arithmetic is exact (integer numerators).
/// Samples are returned unvalidated so callers can check them against the Shi conditions.
/// Throws InstanceTooLarge when the grid exceeds `limit` points.
std::set<TableauFilling> grid_region_oracle(int n, int m, int resolution,
                                        std::uint64_t limit = kDefaultCandidateLimit);

struct GridResult {
  std::set<TableauFilling> regions;
  int resolution = 0;
};

/// Starts at resolution 2(n+1) and doubles until the number of distinct
/// tableaux has stayed the same for two consecutive doublings.
GridResult stabilized_grid_region_oracle(int n, int m,
                                         std::uint64_t limit = kDefaultCandidateLimit);

/// Linear scan of all alternating dissections for the one with psi(d) = p.
/// Throws NotFound.
Dissection exhaustive_psi_inverse(const StaircasePartition& p);

/// Tallies #{d : negative_roots_contained(d) = J} (first) and
/// #{t : simple_walls(t) = J} (second) for every J ⊆ [n].
std::pair<RefinedCountTable, RefinedCountTable> exhaustive_refined_counts(int n, int m);

/// One line of an oracle report.
struct Verdict {
  std::string check;
  int n = 0;
  int m = 0;
  bool ok = true;
  std::string details;
};

}  // namespace fusscat::oracles
