#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fusscat/errors.hpp"

namespace fusscat {

using BigInt = boost::multiprecision::cpp_int;

/// Sorted set of 1-based indices, e.g. simple-root indices J ⊆ [n].
using IndexSet = std::vector<int>;

/// Rank data of the type-A root system A_n.
struct CountingParameters {
  int n = 0;
  int m = 0;
  int coxeter_number = 0;   // h = n + 1
  std::vector<int> exponents;  // 1, ..., n
};

CountingParameters counting_parameters(int n, int m);

/// Throws InvalidParameters unless n >= 1 and m >= 1.
void require_parameters(int n, int m);

/// A partition whose Young diagram fits in the m-staircase (mn, m(n-1), ..., m).
class StaircasePartition {
 public:
  /// Validates `parts` against rank n and Fuss parameter m.
  /// Throws InvalidPartition (length mismatch), NotWeaklyDecreasing or ExceedsStaircase.
  static StaircasePartition validate(std::vector<int> parts, int n, int m);

  int rank() const noexcept { return n_; }
  int fuss() const noexcept { return m_; }
  std::span<const int> parts() const noexcept { return parts_; }

  /// 1-based part lambda_i.
  int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  /// Staircase bound m(n - i + 1) of part i.
  int bound(int i) const noexcept { return m_ * (n_ - i + 1); }

  std::string to_string() const;

  friend bool operator==(const StaircasePartition&, const StaircasePartition&) = default;
  friend auto operator<=>(const StaircasePartition&, const StaircasePartition&) = default;

 private:
  friend class PartitionEnumerator;
  StaircasePartition(int n, int m, std::vector<int> parts)
      : n_(n), m_(m), parts_(std::move(parts)) {}

  int n_ = 0;
  int m_ = 0;
  std::vector<int> parts_;
};

/// Lazily walks every partition of the (n, m) staircase in lexicographically
/// decreasing order, starting at the full staircase and ending at zero.
class PartitionEnumerator {
 public:
  PartitionEnumerator(int n, int m);

  std::optional<StaircasePartition> next();
  void reset();

 private:
  int n_;
  int m_;
  std::vector<int> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<StaircasePartition> enumerate_partitions(int n, int m);

/// Exact binomial coefficient; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Number of staircase partitions, (1 / (m(n+1)+1)) * C((m+1)(n+1), n+1).
BigInt count_partitions(int n, int m);

/// Partitions with every part strictly below its bound,
/// (1 / (n+1)) * C(m(n+1)+n-1, n).
BigInt count_positive(int n, int m);

/// Indices i with lambda_i = m(n - i + 1).
IndexSet max_parts(const StaircasePartition& p);

/// Boundary path from (0,0) to (mn, n) as a string of 'N' and 'E' steps.
/// Row i of the diagram sits in the strip n-i <= y <= n-i+1; the path runs
/// east to lambda_i and then north, bottom row first, and finishes east to mn.
/// The zero partition maps to N^n E^{mn}. The path stays weakly above
/// y = x/m - 1 and touches it after row i exactly when i is a maximal part.
std::string to_lattice_path(const StaircasePartition& p);

}  // namespace fusscat
