#include "fusscat_cli/verify.hpp"

#include <fusscat/bijections.hpp>

#include <fmt/format.h>

#include <functional>

namespace fusscat::cli {

namespace {

using oracles::Verdict;

// Collects failures for one (suite, n, m) cell; only the first few are described.
class Cell {
 public:
  Cell(std::string check, int n, int m) : verdict_{std::move(check), n, m, true, ""} {}

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (++failures_ <= 3) verdict_.details += (verdict_.details.empty() ? "" : "; ") + what;
    verdict_.ok = false;
  }

  Verdict finish() {
    if (failures_ > 3) verdict_.details += fmt::format(" (+{} more)", failures_ - 3);
    return std::move(verdict_);
  }

 private:
  Verdict verdict_;
  int failures_ = 0;
};

void counts(Cell& c, int n, int m) {
  const auto total = count_partitions(n, m);
  c.expect(enumerate_partitions(n, m).size() == total, "partition enumeration");
  c.expect(enumerate_regions(n, m).size() == total, "region enumeration");
  for (auto lab : {Labeling::Standard, Labeling::Alternating})
    c.expect(enumerate_dissections(n, m, lab).size() == total, to_string(lab) + " dissection enumeration");

  const auto positive = count_positive(n, m);
  std::size_t parts = 0, bounded = 0, snakeless = 0;
  for (const auto& p : enumerate_partitions(n, m)) parts += max_parts(p).empty();
  for (const auto& t : enumerate_regions(n, m)) bounded += wall_profile(t).bounded;
  for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating)) snakeless += negative_roots_contained(d).empty();
  c.expect(parts == positive, "positive partitions");
  c.expect(bounded == positive, "bounded regions");
  c.expect(snakeless == positive, "snake-free dissections");
}

void roundtrip(Cell& c, int n, int m) {
  for (const auto& p : enumerate_partitions(n, m)) {
    c.expect(phi(phi_inverse(p)) == p, "phi . phi_inverse at " + p.to_string());
    c.expect(psi(psi_inverse(p)) == p, "psi . psi_inverse at " + p.to_string());
  }
  for (const auto& t : enumerate_regions(n, m)) {
    c.expect(phi_inverse(phi(t)) == t, "phi_inverse . phi at " + t.to_string());
    c.expect(omega(omega_inverse(t)) == t, "omega . omega_inverse at " + t.to_string());
  }
  for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating)) {
    c.expect(psi_inverse(psi(d)) == d, "psi_inverse . psi at " + d.to_string());
    c.expect(omega_inverse(omega(d)) == d, "omega_inverse . omega at " + d.to_string());
  }
}

void walls(Cell& c, int n, int m) {
  for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating)) {
    const auto roots = negative_roots_contained(d);
    c.expect(roots == max_parts(psi(d)), "max parts differ at " + d.to_string());
    c.expect(roots == wall_profile(omega(d)).simple_walls, "simple walls differ at " + d.to_string());
  }
}

void refined(Cell& c, int n, int m) {
  const auto [by_dissection, by_region] = oracles::exhaustive_refined_counts(n, m);
  const auto table = refined_count_table(n, m);
  c.expect(by_dissection == table, "dissection tally");
  c.expect(by_region == table, "region tally");
  c.expect(table.total() == count_partitions(n, m), "row sum");
}

void oracle(Cell& c, int n, int m, std::uint64_t limit) {
  std::set<TableauFilling> enumerated;
  for (const auto& t : enumerate_regions(n, m)) enumerated.insert(t.filling());
  std::set<TableauFilling> brute;
  for (const auto& t : oracles::exhaustive_tableaux(n, m, limit)) brute.insert(t.filling());
  c.expect(brute == enumerated, "exhaustive fillings");
  if (n <= 3) {
    const auto grid = oracles::stabilized_grid_region_oracle(n, m, limit);
    c.expect(grid.regions == enumerated, fmt::format("grid at resolution {}", grid.resolution));
    for (const auto& f : grid.regions) c.expect(check_shi_conditions(f).ok(), "grid sample violates Shi conditions");
  }
  for (const auto& p : enumerate_partitions(n, m))
    c.expect(psi_inverse(p) == oracles::exhaustive_psi_inverse(p), "search inverse at " + p.to_string());
}

void lemmas(Cell& c, int n, int m, std::uint64_t limit) {
  for (const auto& t : enumerate_regions(n, m))
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        c.expect(t.at(i, j) >= t.at(i, j - 1), "row monotonicity at " + t.to_string());
        c.expect(t.at(i, j) >= t.at(i + 1, j), "column monotonicity at " + t.to_string());
      }

  if (oracles::filling_count(n, m) > limit) throw InstanceTooLarge("too many fillings for the lemmas suite");
  std::vector<int> flat(static_cast<std::size_t>(n * (n + 1) / 2), 0);
  while (true) {
    const TableauFilling f(n, m, flat);
    c.expect(check_shi_conditions(f).ok() == check_hook_conditions(f), "hook and triplet forms disagree");
    std::size_t k = 0;
    while (k < flat.size() && flat[k] == m) flat[k++] = 0;
    if (k == flat.size()) break;
    ++flat[k];
  }

  if (n < 2) return;
  for (const auto& p : enumerate_partitions(n, m)) {
    const auto subs = subtableaux(phi_inverse(p));
    const auto derived = derived_partitions(p);
    c.expect(subs.without_top_row == phi_inverse(derived.first), "T(1) at " + p.to_string());
    c.expect(subs.without_first_column == phi_inverse(derived.second), "T(2) at " + p.to_string());
    c.expect(subs.without_second_column == phi_inverse(derived.fourth), "T(4) at " + p.to_string());
    c.expect(subs.without_two_columns.has_value() == derived.third.has_value() &&
                 (!derived.third || *subs.without_two_columns == phi_inverse(*derived.third)),
             "T(3) at " + p.to_string());
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "counts", "roundtrip", "walls", "refined", "oracle", "lemmas"};
  return names;
}

std::vector<Verdict> run_suite(const std::string& suite, int n_max, int m_max, std::uint64_t limit) {
  require_parameters(n_max, m_max);
  if (count_partitions(n_max, m_max) > limit) {
    throw InstanceTooLarge(fmt::format("{} objects at n={}, m={} exceed the limit {}",
                                       count_partitions(n_max, m_max).str(), n_max, m_max, limit));
  }

  using Body = std::function<void(Cell&, int, int)>;
  const std::vector<std::pair<std::string, Body>> suites{
      {"counts", counts},
      {"roundtrip", roundtrip},
      {"walls", walls},
      {"refined", refined},
      {"oracle", [limit](Cell& c, int n, int m) { oracle(c, n, m, limit); }},
      {"lemmas", [limit](Cell& c, int n, int m) { lemmas(c, n, m, limit); }},
  };

  std::vector<Verdict> verdicts;
  bool matched = false;
  for (const auto& [name, body] : suites) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    for (int n = 1; n <= n_max; ++n)
      for (int m = 1; m <= m_max; ++m) {
        if ((name == "oracle" || name == "lemmas") && (n > 4 || m > 3)) continue;
        Cell cell(name, n, m);
        body(cell, n, m);
        verdicts.push_back(cell.finish());
      }
  }
  if (!matched) throw InvalidParameters("unknown suite '" + suite + "'");
  return verdicts;
}

}  // namespace fusscat::cli
