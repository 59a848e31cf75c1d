#include "fusscat/shi_tableau.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace fusscat {

TableauFilling::TableauFilling(int n, int m)
    : n_(n), m_(m), entries_(static_cast<std::size_t>(n * (n + 1) / 2), 0) {
  require_parameters(n, m);
}

TableauFilling::TableauFilling(int n, int m, std::vector<int> flat)
    : n_(n), m_(m), entries_(std::move(flat)) {
  require_parameters(n, m);
  if (entries_.size() != static_cast<std::size_t>(n * (n + 1) / 2)) {
    throw OutOfRangeEntry("tableau of rank " + std::to_string(n) + " needs " +
                          std::to_string(n * (n + 1) / 2) + " entries");
  }
}

TableauFilling TableauFilling::from_rows(int n, int m, const std::vector<std::vector<int>>& rows) {
  require_parameters(n, m);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw OutOfRangeEntry("expected " + std::to_string(n) + " rows");
  }
  TableauFilling f(n, m);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (row.size() != static_cast<std::size_t>(n - i + 1)) {
      throw OutOfRangeEntry("row " + std::to_string(i) + " must have " +
                            std::to_string(n - i + 1) + " entries");
    }
    for (int j = i; j <= n; ++j) f.set(i, j, row[static_cast<std::size_t>(j - i)]);
  }
  return f;
}

TableauFilling TableauFilling::constant(int n, int m, int value) {
  TableauFilling f(n, m);
  std::fill(f.entries_.begin(), f.entries_.end(), value);
  return f;
}

std::vector<std::vector<int>> TableauFilling::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    auto& row = out[static_cast<std::size_t>(i - 1)];
    for (int j = i; j <= n_; ++j) row.push_back(at(i, j));
  }
  return out;
}

InvalidTableau::InvalidTableau(std::vector<ShiViolation> violations)
    : Error([&] {
        std::ostringstream os;
        os << "Shi condition fails for " << violations.size() << " triplet(s):";
        for (const auto& v : violations) os << " (" << v.i << ',' << v.l << ',' << v.j << ')';
        return os.str();
      }()),
      violations_(std::move(violations)) {}

namespace {

void check_range(const TableauFilling& f) {
  for (int i = 1; i <= f.rank(); ++i) {
    for (int j = i; j <= f.rank(); ++j) {
      const int k = f.at(i, j);
      if (k < 0 || k > f.fuss()) {
        throw OutOfRangeEntry("entry k(" + std::to_string(i) + "," + std::to_string(j) +
                              ") = " + std::to_string(k) + " is outside [0, " +
                              std::to_string(f.fuss()) + "]");
      }
    }
  }
}

bool triplet_holds(int whole, int sum, int m) {
  return sum < m ? (whole == sum || whole == sum + 1) : whole == m;
}

}  // namespace

ShiReport check_shi_conditions(const TableauFilling& f) {
  check_range(f);
  ShiReport report;
  const int n = f.rank(), m = f.fuss();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int l = i; l < j; ++l) {
        if (!triplet_holds(f.at(i, j), f.at(i, l) + f.at(l + 1, j), m)) {
          report.violations.push_back({i, l, j});
        }
      }
    }
  }
  return report;
}

bool check_hook_conditions(const TableauFilling& f) {
  check_range(f);
  const int n = f.rank(), m = f.fuss();
  // Drawn layout: row r has n-r+1 boxes; box (r, c) holds k_{r, n-c+1}.
  auto row_length = [n](int r) { return n - r + 1; };
  auto box = [&](int r, int c) { return f.at(r, n - c + 1); };

  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= row_length(r); ++c) {
      const int i = r, j = n - c + 1;
      if (i >= j) continue;
      const int length = j - i + 2;
      for (int arm = 0; arm < length; ++arm) {
        const int leg = length - 1 - arm;
        if (c + arm > row_length(r)) continue;
        if (r + leg > n || c > row_length(r + leg)) continue;
        const int e = box(r, c + arm) * (arm > 0) + box(r + leg, c) * (leg > 0) +
                      box(r, c) * ((arm == 0) + (leg == 0));
        if (!triplet_holds(box(r, c), e, m)) return false;
      }
    }
  }
  return true;
}

ShiTableau ShiTableau::validate(TableauFilling filling) {
  auto report = check_shi_conditions(filling);
  if (!report.ok()) throw InvalidTableau(std::move(report.violations));
  return ShiTableau(std::move(filling));
}

std::string ShiTableau::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto r = rows();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < r[i].size(); ++j) {
      if (j) os << ',';
      os << r[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RegionEnumerator::RegionEnumerator(int n, int m) : n_(n), m_(m), current_(n, m) {
  if (m > 62) throw InstanceTooLarge("region enumeration supports m <= 62");
  for (int d = 0; d < n; ++d) {
    for (int i = 1; i + d <= n; ++i) {
      Slot slot{i, i + d, {}};
      for (int l = i; l < i + d; ++l) {
        slot.splits.emplace_back(current_.index(i, l), current_.index(l + 1, i + d));
      }
      slots_.push_back(std::move(slot));
    }
  }
  remaining_.assign(slots_.size(), 0);
  reset();
}

void RegionEnumerator::reset() {
  started_ = false;
  done_ = false;
  depth_ = 0;
}

std::uint64_t RegionEnumerator::candidates(std::size_t level) const {
  const std::uint64_t all = (std::uint64_t{1} << (m_ + 1)) - 1;
  std::uint64_t mask = all;
  const auto& flat = current_.flat();
  for (const auto& [left, right] : slots_[level].splits) {
    const int s = flat[left] + flat[right];
    mask &= s < m_ ? (std::uint64_t{3} << s) : (std::uint64_t{1} << m_);
  }
  return mask & all;
}

std::optional<ShiTableau> RegionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    depth_ = 0;
    remaining_[0] = candidates(0);
  }
  // On resume depth_ still points at the last slot, so its next candidate is tried.
  for (;;) {
    if (remaining_[depth_] == 0) {
      if (depth_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --depth_;
      continue;
    }
    const int value = std::countr_zero(remaining_[depth_]);
    remaining_[depth_] &= remaining_[depth_] - 1;
    const auto& slot = slots_[depth_];
    current_.set(slot.i, slot.j, value);
    if (depth_ + 1 == slots_.size()) return ShiTableau(current_);
    ++depth_;
    remaining_[depth_] = candidates(depth_);
  }
}

std::vector<ShiTableau> enumerate_regions(int n, int m) {
  std::vector<ShiTableau> out;
  RegionEnumerator e(n, m);
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

StaircasePartition phi(const ShiTableau& t) {
  const int n = t.rank();
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) parts[static_cast<std::size_t>(i - 1)] += t.at(i, j);
  }
  return StaircasePartition::validate(std::move(parts), n, t.fuss());
}

namespace {

int ceil_div(int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

}  // namespace

ShiTableau phi_inverse(const StaircasePartition& p) {
  const int n = p.rank(), m = p.fuss();
  TableauFilling k(n, m);
  for (int i = n; i >= 1; --i) {
    for (int j = n; j >= i; --j) {
      int numerator = p.part(i);
      for (int l = j + 1; l <= n; ++l) numerator -= k.at(i, l);
      for (int l = i + 1; l <= j; ++l) numerator += k.at(l, j);
      const int value = std::min(m, ceil_div(numerator, j - i + 1));
      if (value < 0) throw std::logic_error("phi_inverse produced a negative entry");
      k.set(i, j, value);
    }
  }
  return ShiTableau::validate(std::move(k));
}

WallProfile wall_profile(const ShiTableau& t) {
  WallProfile w;
  for (int i = 1; i <= t.rank(); ++i) {
    if (t.at(i, i) == t.fuss()) w.simple_walls.push_back(i);
  }
  w.bounded = w.simple_walls.empty();
  return w;
}

SubTableaux subtableaux(const ShiTableau& t) {
  const int n = t.rank(), m = t.fuss();
  if (n < 2) throw RankTooSmall("sub-tableaux need rank >= 2");

  TableauFilling top(n - 1, m), first(n - 1, m), second(n - 1, m);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      top.set(i, j, t.at(i + 1, j + 1));
      first.set(i, j, t.at(i, j));
      second.set(i, j, j == n - 1 ? t.at(i, n) : t.at(i, j));
    }
  }
  std::optional<ShiTableau> two;
  if (n >= 3) {
    TableauFilling f(n - 2, m);
    for (int i = 1; i <= n - 2; ++i) {
      for (int j = i; j <= n - 2; ++j) f.set(i, j, t.at(i, j));
    }
    two = ShiTableau::validate(std::move(f));
  }
  return SubTableaux{ShiTableau::validate(std::move(top)), ShiTableau::validate(std::move(first)),
                     std::move(two), ShiTableau::validate(std::move(second))};
}

DerivedPartitions derived_partitions(const StaircasePartition& p) {
  const int n = p.rank(), m = p.fuss();
  if (n < 2) throw RankTooSmall("derived partitions need rank >= 2");
  const ShiTableau t = phi_inverse(p);

  std::vector<int> first, second, fourth;
  for (int i = 2; i <= n; ++i) first.push_back(p.part(i));
  for (int i = 1; i <= n - 1; ++i) {
    second.push_back(p.part(i) - t.at(i, n));
    fourth.push_back(p.part(i) - t.at(i, n - 1));
  }
  std::optional<StaircasePartition> third;
  if (n >= 3) {
    std::vector<int> parts;
    for (int i = 1; i <= n - 2; ++i) parts.push_back(second[static_cast<std::size_t>(i - 1)] - t.at(i, n - 1));
    third = StaircasePartition::validate(std::move(parts), n - 2, m);
  }
  return DerivedPartitions{StaircasePartition::validate(std::move(first), n - 1, m),
                           StaircasePartition::validate(std::move(second), n - 1, m),
                           std::move(third),
                           StaircasePartition::validate(std::move(fourth), n - 1, m)};
}

}  // namespace fusscat
