#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusscat/errors.hpp"
#include "fusscat/partitions.hpp"

namespace fusscat {

/// A staircase array of integers k_{i,j}, 1 <= i <= j <= n, one per positive
/// root alpha_{ij}. Entries are not checked; see ShiTableau for the validated type.
///
/// Storage is row-major in root indices: row i holds k_{i,i}, ..., k_{i,n}.
/// When drawn, k_{i,j} sits in box (i, n-j+1), so increasing j moves left.
class TableauFilling {
 public:
  TableauFilling() = default;
  TableauFilling(int n, int m);  // all-zero filling
  TableauFilling(int n, int m, std::vector<int> flat);

  /// Builds from rows [[k_{1,1},...,k_{1,n}], [k_{2,2},...], ...].
  static TableauFilling from_rows(int n, int m, const std::vector<std::vector<int>>& rows);
  static TableauFilling constant(int n, int m, int value);

  int rank() const noexcept { return n_; }
  int fuss() const noexcept { return m_; }
  std::size_t size() const noexcept { return entries_.size(); }

  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, int value) { entries_[index(i, j)] = value; }

  const std::vector<int>& flat() const noexcept { return entries_; }
  std::vector<std::vector<int>> rows() const;

  /// Flat offset of k_{i,j}.
  std::size_t index(int i, int j) const noexcept {
    const auto ii = static_cast<std::size_t>(i), nn = static_cast<std::size_t>(n_);
    return (ii - 1) * (2 * nn - ii + 2) / 2 + static_cast<std::size_t>(j - i);
  }

  friend bool operator==(const TableauFilling&, const TableauFilling&) = default;
  friend auto operator<=>(const TableauFilling&, const TableauFilling&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> entries_;
};

/// A failing triplet {k_{i,j}, k_{i,l}, k_{l+1,j}}.
struct ShiViolation {
  int i = 0;
  int l = 0;
  int j = 0;
  friend bool operator==(const ShiViolation&, const ShiViolation&) = default;
};

struct ShiReport {
  std::vector<ShiViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

class InvalidTableau : public Error {
 public:
  explicit InvalidTableau(std::vector<ShiViolation> violations);
  const std::vector<ShiViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<ShiViolation> violations_;
};

/// Checks every triplet against the Shi condition: with s = k_{i,l} + k_{l+1,j},
/// k_{i,j} must be s or s+1 when s < m, and m otherwise.
/// Throws OutOfRangeEntry if some entry is outside [0, m]. Reports all failures.
ShiReport check_shi_conditions(const TableauFilling& filling);

/// The hook form of the same characterization: for every box k_{i,j} with i < j
/// and every hook of length j-i+2 cornered there, the endpoint sum e decides
/// k_{i,j} (e or e+1 when e < m, else m). Works on the drawn box layout.
bool check_hook_conditions(const TableauFilling& filling);

/// The Shi tableau of a dominant region of the m-Catalan arrangement of type A_n.
class ShiTableau {
 public:
  /// Throws OutOfRangeEntry or InvalidTableau.
  static ShiTableau validate(TableauFilling filling);

  int rank() const noexcept { return filling_.rank(); }
  int fuss() const noexcept { return filling_.fuss(); }
  int at(int i, int j) const { return filling_.at(i, j); }
  const TableauFilling& filling() const noexcept { return filling_; }
  std::vector<std::vector<int>> rows() const { return filling_.rows(); }

  std::string to_string() const;

  friend bool operator==(const ShiTableau&, const ShiTableau&) = default;
  friend auto operator<=>(const ShiTableau&, const ShiTableau&) = default;

 private:
  friend class RegionEnumerator;
  explicit ShiTableau(TableauFilling f) : filling_(std::move(f)) {}
  TableauFilling filling_;
};

/// Backtracking enumeration of all Shi tableaux of rank n: entries are filled by
/// increasing j-i, and each entry only tries the values its triplets allow.
class RegionEnumerator {
 public:
  RegionEnumerator(int n, int m);

  std::optional<ShiTableau> next();
  void reset();

 private:
  struct Slot {
    int i;
    int j;
    std::vector<std::pair<std::size_t, std::size_t>> splits;  // (k_{i,l}, k_{l+1,j}) offsets
  };
  std::uint64_t candidates(std::size_t level) const;

  int n_;
  int m_;
  std::vector<Slot> slots_;
  TableauFilling current_;
  std::vector<std::uint64_t> remaining_;  // untried candidate values per level, as bitmasks
  std::size_t depth_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ShiTableau> enumerate_regions(int n, int m);

/// phi: row sums lambda_i = sum_j k_{i,j}.
StaircasePartition phi(const ShiTableau& t);

/// Inverse of phi, evaluated bottom row first and right to left in j:
/// k_{i,j} = min(m, ceil((lambda_i - sum_{l>j} k_{i,l} + sum_{i<l<=j} k_{l,j}) / (j-i+1))).
ShiTableau phi_inverse(const StaircasePartition& p);

/// Simple-root walls H_{alpha_i, m} separating the region from the origin.
struct WallProfile {
  IndexSet simple_walls;
  bool bounded = true;
};

WallProfile wall_profile(const ShiTableau& t);

/// The four tableaux obtained by deleting parts of T (drawn layout):
///   without_top_row        T(1): k_{i+1,j+1}
///   without_first_column   T(2): k_{i,j}, j <= n-1
///   without_two_columns    T(3): k_{i,j}, j <= n-2 (absent when n = 2)
///   without_second_column  T(4): T(3) plus column k_{i,n} moved into j = n-1
struct SubTableaux {
  ShiTableau without_top_row;
  ShiTableau without_first_column;
  std::optional<ShiTableau> without_two_columns;
  ShiTableau without_second_column;
};

/// Throws RankTooSmall when n < 2.
SubTableaux subtableaux(const ShiTableau& t);

/// Partitions whose phi-inverse images are the four sub-tableaux:
///   (1) drop lambda_1
///   (2) lambda_i - k_{i,n}
///   (3) lambda_i - k_{i,n} - k_{i,n-1}, i <= n-2 (absent when n = 2)
///   (4) lambda_i - k_{i,n-1}
/// with k = phi_inverse(p). Throws RankTooSmall when n < 2.
struct DerivedPartitions {
  StaircasePartition first;
  StaircasePartition second;
  std::optional<StaircasePartition> third;
  StaircasePartition fourth;
};

DerivedPartitions derived_partitions(const StaircasePartition& p);

}  // namespace fusscat
