#include "fusscat/oracles.hpp"

#include <limits>

namespace fusscat::oracles {

namespace {

std::uint64_t saturating_power(std::uint64_t base, int exponent) {
  std::uint64_t result = 1;
  for (int e = 0; e < exponent; ++e) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace

std::uint64_t filling_count(int n, int m) {
  require_parameters(n, m);
  return saturating_power(static_cast<std::uint64_t>(m) + 1, n * (n + 1) / 2);
}

std::set<ShiTableau> exhaustive_tableaux(int n, int m, std::uint64_t limit) {
  const std::uint64_t total = filling_count(n, m);
  if (total > limit) {
    throw InstanceTooLarge(std::to_string(total) + " candidate fillings exceed the limit " +
                           std::to_string(limit));
  }
  std::set<ShiTableau> out;
  std::vector<int> digits(static_cast<std::size_t>(n * (n + 1) / 2), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    TableauFilling filling(n, m, digits);
    if (check_shi_conditions(filling).ok()) out.insert(ShiTableau::validate(std::move(filling)));
    for (auto& digit : digits) {  // odometer increment in base m+1
      if (++digit <= m) break;
      digit = 0;
    }
  }
  return out;
}

std::set<TableauFilling> grid_region_oracle(int n, int m, int resolution, std::uint64_t limit) {
  require_parameters(n, m);
  if (resolution < 1) throw InvalidParameters("resolution must be >= 1");
  const int per_axis = (m + 1) * resolution;
  const std::uint64_t points = saturating_power(static_cast<std::uint64_t>(per_axis), n);
  if (points > limit) {
    throw InstanceTooLarge(std::to_string(points) + " grid points exceed the limit " +
                           std::to_string(limit));
  }

  std::set<TableauFilling> out;
  std::vector<int> numerators(static_cast<std::size_t>(n), 1);
  std::vector<int> prefix(static_cast<std::size_t>(n + 1), 0);
  for (std::uint64_t code = 0; code < points; ++code) {
    for (int i = 0; i < n; ++i) {
      prefix[static_cast<std::size_t>(i + 1)] = prefix[static_cast<std::size_t>(i)] + numerators[static_cast<std::size_t>(i)];
    }
    TableauFilling filling(n, m);
    bool on_hyperplane = false;
    for (int i = 1; i <= n && !on_hyperplane; ++i) {
      for (int j = i; j <= n; ++j) {
        const int sum = prefix[static_cast<std::size_t>(j)] - prefix[static_cast<std::size_t>(i - 1)];
        if (sum % resolution == 0) {
          on_hyperplane = true;
          break;
        }
        filling.set(i, j, std::min(m, sum / resolution));
      }
    }
    if (!on_hyperplane) out.insert(std::move(filling));

    for (auto& c : numerators) {
      if (++c <= per_axis) break;
      c = 1;
    }
  }
  return out;
}

GridResult stabilized_grid_region_oracle(int n, int m, std::uint64_t limit) {
  int resolution = 2 * (n + 1);
  auto regions = grid_region_oracle(n, m, resolution, limit);
  int stable_doublings = 0;
  while (stable_doublings < 2) {
    const int next_resolution = resolution * 2;
    auto refined = grid_region_oracle(n, m, next_resolution, limit);
    stable_doublings = refined.size() == regions.size() ? stable_doublings + 1 : 0;
    regions = std::move(refined);
    resolution = next_resolution;
  }
  return {std::move(regions), resolution};
}

Dissection exhaustive_psi_inverse(const StaircasePartition& p) {
  std::optional<Dissection> found;
  for_each_dissection(alternating_labeling(p.rank(), p.fuss()), [&](const Dissection& d) {
    if (!found && initial_points(d) == p) found = d;
  });
  if (!found) throw NotFound("no alternating dissection has initial points " + p.to_string());
  return *found;
}

std::pair<RefinedCountTable, RefinedCountTable> exhaustive_refined_counts(int n, int m) {
  RefinedCountTable by_dissection{n, m, {}}, by_region{n, m, {}};
  for (auto& J : all_subsets(n)) {
    by_dissection.entries[J] = 0;
    by_region.entries[J] = 0;
  }
  for_each_dissection(alternating_labeling(n, m), [&](const Dissection& d) {
    by_dissection.entries[negative_roots_contained(d)] += 1;
  });
  RegionEnumerator regions(n, m);
  while (auto t = regions.next()) by_region.entries[wall_profile(*t).simple_walls] += 1;
  return {std::move(by_dissection), std::move(by_region)};
}

}  // namespace fusscat::oracles
