#include "fusscat/partitions.hpp"

#include <algorithm>
#include <sstream>

namespace fusscat {

void require_parameters(int n, int m) {
  if (n < 1 || m < 1) {
    throw InvalidParameters("rank n and Fuss parameter m must both be >= 1 (got n=" +
                            std::to_string(n) + ", m=" + std::to_string(m) + ")");
  }
}

CountingParameters counting_parameters(int n, int m) {
  require_parameters(n, m);
  CountingParameters params{n, m, n + 1, {}};
  params.exponents.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) params.exponents.push_back(i);
  return params;
}

StaircasePartition StaircasePartition::validate(std::vector<int> parts, int n, int m) {
  require_parameters(n, m);
  if (parts.size() != static_cast<std::size_t>(n)) {
    throw InvalidPartition("expected " + std::to_string(n) + " parts, got " +
                           std::to_string(parts.size()));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw InvalidPartition("negative part at index " + std::to_string(i + 1));
    if (i > 0 && parts[i] > parts[i - 1]) throw NotWeaklyDecreasing(i + 1);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > m * (n - static_cast<int>(i))) throw ExceedsStaircase(i + 1);
  }
  return StaircasePartition(n, m, std::move(parts));
}

std::string StaircasePartition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

PartitionEnumerator::PartitionEnumerator(int n, int m) : n_(n), m_(m) {
  require_parameters(n, m);
  reset();
}

void PartitionEnumerator::reset() {
  current_.assign(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) current_[static_cast<std::size_t>(i)] = m_ * (n_ - i);
  started_ = false;
  done_ = false;
}

std::optional<StaircasePartition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return StaircasePartition(n_, m_, current_);
  }
  // Lexicographic predecessor: lower the rightmost positive part by one and
  // refill everything after it as high as the staircase allows.
  auto pos = static_cast<int>(current_.size()) - 1;
  while (pos >= 0 && current_[static_cast<std::size_t>(pos)] == 0) --pos;
  if (pos < 0) {
    done_ = true;
    return std::nullopt;
  }
  --current_[static_cast<std::size_t>(pos)];
  for (int i = pos + 1; i < n_; ++i) {
    current_[static_cast<std::size_t>(i)] =
        std::min(current_[static_cast<std::size_t>(i - 1)], m_ * (n_ - i));
  }
  return StaircasePartition(n_, m_, current_);
}

std::vector<StaircasePartition> enumerate_partitions(int n, int m) {
  std::vector<StaircasePartition> out;
  PartitionEnumerator e(n, m);
  while (auto p = e.next()) out.push_back(std::move(*p));
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // Each prefix product is itself a binomial coefficient, so the division is exact.
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

BigInt exact_quotient(const BigInt& numerator, long denominator, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, BigInt(denominator), q, r);
  if (r != 0) throw std::logic_error(std::string(what) + ": division left a remainder");
  return q;
}

}  // namespace

BigInt count_partitions(int n, int m) {
  require_parameters(n, m);
  const long N = n, M = m;
  return exact_quotient(binomial((M + 1) * (N + 1), N + 1), M * (N + 1) + 1, "count_partitions");
}

BigInt count_positive(int n, int m) {
  require_parameters(n, m);
  const long N = n, M = m;
  return exact_quotient(binomial(M * (N + 1) + N - 1, N), N + 1, "count_positive");
}

IndexSet max_parts(const StaircasePartition& p) {
  IndexSet out;
  for (int i = 1; i <= p.rank(); ++i) {
    if (p.part(i) == p.bound(i)) out.push_back(i);
  }
  return out;
}

std::string to_lattice_path(const StaircasePartition& p) {
  const int n = p.rank();
  std::string path;
  path.reserve(static_cast<std::size_t>(n + p.fuss() * n));
  int x = 0;
  for (int i = n; i >= 1; --i) {
    path.append(static_cast<std::size_t>(p.part(i) - x), 'E');
    x = p.part(i);
    path.push_back('N');
  }
  path.append(static_cast<std::size_t>(p.fuss() * n - x), 'E');
  return path;
}

}  // namespace fusscat
