#pragma once

#include <map>
#include <vector>

#include "fusscat/dissections.hpp"
#include "fusscat/partitions.hpp"
#include "fusscat/shi_tableau.hpp"

namespace fusscat {

/// psi: initial points of a dissection of the alternating polygon.
/// Throws WrongLabeling for a standard polygon.
StaircasePartition psi(const Dissection& d);

/// Inverse of psi. Parts are placed largest first: the vertex labeled lambda_t
/// is joined to a vertex m+1 steps away inside the remaining polygon, cutting off
/// an (m+2)-gon. A side qualifies only when the m vertices it cuts off all carry
/// labels above lambda_t; among qualifying sides the larger endpoint label wins.
/// Labels are never renumbered.
Dissection psi_inverse(const StaircasePartition& p);

/// psi': initial points on the standard polygon. A bijection, but it does not
/// send snake diagonals to maximal parts. Throws WrongLabeling.
StaircasePartition psi_prime(const Dissection& d);

/// omega = phi_inverse o psi.
ShiTableau omega(const Dissection& d);
/// omega_inverse = psi_inverse o phi.
Dissection omega_inverse(const ShiTableau& t);

/// Lengths of the maximal runs of consecutive integers in `subset`.
std::vector<int> parabolic_components(int n, const IndexSet& subset);

/// Product of count_positive(r, m) over the runs r of [n] \ J.
BigInt refined_count(int n, int m, const IndexSet& J);

struct RefinedCountTable {
  int n = 0;
  int m = 0;
  std::map<IndexSet, BigInt> entries;

  BigInt total() const;
  friend bool operator==(const RefinedCountTable&, const RefinedCountTable&) = default;
};

/// refined_count for all 2^n subsets J.
RefinedCountTable refined_count_table(int n, int m);

/// Every subset of [n], as sorted index sets.
std::vector<IndexSet> all_subsets(int n);

}  // namespace fusscat
