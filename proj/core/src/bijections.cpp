#include "fusscat/bijections.hpp"

#include <algorithm>

namespace fusscat {

namespace {

void require_labeling(const Dissection& d, Labeling expected, const char* op) {
  if (d.polygon().labeling() != expected) {
    throw WrongLabeling(std::string(op) + " needs a " + to_string(expected) + " polygon");
  }
}

}  // namespace

StaircasePartition psi(const Dissection& d) {
  require_labeling(d, Labeling::Alternating, "psi");
  return initial_points(d);
}

StaircasePartition psi_prime(const Dissection& d) {
  require_labeling(d, Labeling::Standard, "psi_prime");
  return initial_points(d);
}

Dissection psi_inverse(const StaircasePartition& p) {
  const int n = p.rank(), m = p.fuss();
  LabeledPolygon poly = alternating_labeling(n, m);

  std::vector<int> remaining(static_cast<std::size_t>(poly.vertex_count()));
  for (int pos = 0; pos < poly.vertex_count(); ++pos) remaining[static_cast<std::size_t>(pos)] = pos;

  std::vector<Diagonal> diagonals;
  for (const int start : p.parts()) {
    const int start_pos = poly.position_of(start);
    const auto it = std::find(remaining.begin(), remaining.end(), start_pos);
    if (it == remaining.end()) {
      throw std::logic_error("psi_inverse: vertex " + std::to_string(start) + " was cut off early");
    }
    const auto size = static_cast<int>(remaining.size());
    const auto at = static_cast<int>(it - remaining.begin());
    auto vertex = [&](int offset) {
      return remaining[static_cast<std::size_t>(((at + offset) % size + size) % size)];
    };

    int best_direction = 0;
    int best_label = -1;
    for (const int direction : {+1, -1}) {
      bool qualifies = true;
      for (int step = 1; step <= m; ++step) {
        qualifies = qualifies && poly.label_at(vertex(direction * step)) > start;
      }
      const int target = poly.label_at(vertex(direction * (m + 1)));
      if (qualifies && target > start && target > best_label) {
        best_label = target;
        best_direction = direction;
      }
    }
    if (best_direction == 0) {
      throw std::logic_error("psi_inverse: no admissible cut at vertex " + std::to_string(start));
    }

    diagonals.push_back(make_diagonal(start, best_label));
    std::vector<int> cut;
    for (int step = 1; step <= m; ++step) cut.push_back(vertex(best_direction * step));
    std::erase_if(remaining, [&](int pos) {
      return std::find(cut.begin(), cut.end(), pos) != cut.end();
    });
  }
  return Dissection::validate(std::move(poly), std::move(diagonals));
}

ShiTableau omega(const Dissection& d) { return phi_inverse(psi(d)); }

Dissection omega_inverse(const ShiTableau& t) { return psi_inverse(phi(t)); }

std::vector<int> parabolic_components(int n, const IndexSet& subset) {
  std::vector<bool> member(static_cast<std::size_t>(n + 2), false);
  for (const int i : subset) {
    if (i < 1 || i > n) throw InvalidParameters("index " + std::to_string(i) + " outside [1, n]");
    member[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> runs;
  int run = 0;
  for (int i = 1; i <= n + 1; ++i) {
    if (member[static_cast<std::size_t>(i)]) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  return runs;
}

BigInt refined_count(int n, int m, const IndexSet& J) {
  require_parameters(n, m);
  std::vector<bool> in_j(static_cast<std::size_t>(n + 1), false);
  for (const int i : J) {
    if (i < 1 || i > n) throw InvalidParameters("index " + std::to_string(i) + " outside [1, n]");
    in_j[static_cast<std::size_t>(i)] = true;
  }
  IndexSet complement;
  for (int i = 1; i <= n; ++i) {
    if (!in_j[static_cast<std::size_t>(i)]) complement.push_back(i);
  }
  BigInt product = 1;
  for (const int r : parabolic_components(n, complement)) product *= count_positive(r, m);
  return product;
}

BigInt RefinedCountTable::total() const {
  BigInt sum = 0;
  for (const auto& [J, count] : entries) sum += count;
  return sum;
}

std::vector<IndexSet> all_subsets(int n) {
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet s;
    for (int i = 1; i <= n; ++i) {
      if (mask & (1u << (i - 1))) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RefinedCountTable refined_count_table(int n, int m) {
  RefinedCountTable table{n, m, {}};
  for (auto& J : all_subsets(n)) {
    auto count = refined_count(n, m, J);
    table.entries.emplace(std::move(J), std::move(count));
  }
  return table;
}

}  // namespace fusscat
