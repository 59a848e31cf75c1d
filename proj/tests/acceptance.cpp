// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any failure.
#include <fusscat/bijections.hpp>
#include <fusscat/oracles.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace fusscat;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) notes << what;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s %d %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, seconds,
              out.ok ? "" : ": ", out.notes.str().c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string nm(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

void counting(Outcome& out) {
  const auto start = Clock::now();
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto expected = binomial((m + 1) * (n + 1), n + 1) / (m * (n + 1) + 1);
      out.expect(count_partitions(n, m) == expected, "formula " + nm(n, m));
      out.expect(enumerate_partitions(n, m).size() == expected, "partitions " + nm(n, m));
      out.expect(enumerate_regions(n, m).size() == expected, "regions " + nm(n, m));
      if (n <= 4)
        for (auto lab : {Labeling::Standard, Labeling::Alternating})
          out.expect(enumerate_dissections(n, m, lab).size() == expected, "dissections " + nm(n, m));
    }
  out.expect(count_partitions(2, 3) == 22, "22 at n=2 m=3");
  out.expect(count_partitions(5, 3) == 7084, "7084 at n=5 m=3");
  out.expect(enumerate_dissections(4, 3, Labeling::Alternating).size() == 969, "969 at n=4 m=3");
  out.expect(std::chrono::duration<double>(Clock::now() - start).count() < 60.0, "sweep over 60s");
}

void positive(Outcome& out) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto expected = binomial(m * (n + 1) + n - 1, n) / (n + 1);
      out.expect(count_positive(n, m) == expected, "formula " + nm(n, m));
      std::size_t parts = 0, bounded = 0, snakeless = 0;
      for (const auto& p : enumerate_partitions(n, m)) parts += max_parts(p).empty();
      for (const auto& t : enumerate_regions(n, m)) bounded += wall_profile(t).bounded;
      for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating))
        snakeless += negative_roots_contained(d).empty();
      out.expect(parts == expected && bounded == expected && snakeless == expected, "tallies " + nm(n, m));
    }
}

void round_trips(Outcome& out) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::size_t bad = 0;
      for (const auto& p : enumerate_partitions(n, m)) {
        bad += !(phi(phi_inverse(p)) == p);
        bad += !(psi(psi_inverse(p)) == p);
      }
      for (const auto& t : enumerate_regions(n, m)) {
        bad += !(phi_inverse(phi(t)) == t);
        bad += !(omega(omega_inverse(t)) == t);
      }
      for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating)) {
        bad += !(psi_inverse(psi(d)) == d);
        bad += !(omega_inverse(omega(d)) == d);
      }
      out.expect(bad == 0, std::to_string(bad) + " mismatches at " + nm(n, m));
    }
}

void walls(Outcome& out) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::size_t bad = 0;
      for (const auto& d : enumerate_dissections(n, m, Labeling::Alternating)) {
        const auto roots = negative_roots_contained(d);
        bad += !(roots == max_parts(psi(d)) && roots == wall_profile(omega(d)).simple_walls);
      }
      out.expect(bad == 0, std::to_string(bad) + " mismatches at " + nm(n, m));
    }
}

void refinement(Outcome& out) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      const auto [by_dissection, by_region] = oracles::exhaustive_refined_counts(n, m);
      const auto table = refined_count_table(n, m);
      out.expect(by_dissection == table && by_region == table, "tables differ at " + nm(n, m));
      out.expect(table.total() == count_partitions(n, m), "row sum at " + nm(n, m));
    }
  const auto small = refined_count_table(2, 1);
  out.expect(small.entries.at({}) == 2 && small.entries.at({1}) == 1 && small.entries.at({2}) == 1 &&
                 small.entries.at({1, 2}) == 1,
             "n=2 m=1 table");
}

void lemmas(Outcome& out) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      for (const auto& t : enumerate_regions(n, m))
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            out.expect(t.at(i, j) >= t.at(i, j - 1) && t.at(i, j) >= t.at(i + 1, j), "monotonicity " + nm(n, m));

      // Odometer over every filling in [0, m]^{n(n+1)/2}.
      TableauFilling f(n, m);
      std::vector<int> flat(f.flat().begin(), f.flat().end());
      std::size_t disagreements = 0;
      while (true) {
        const TableauFilling g(n, m, flat);
        disagreements += check_shi_conditions(g).ok() != check_hook_conditions(g);
        std::size_t k = 0;
        while (k < flat.size() && flat[k] == m) flat[k++] = 0;
        if (k == flat.size()) break;
        ++flat[k];
      }
      out.expect(disagreements == 0, "hook/triplet forms disagree at " + nm(n, m));

      if (n < 2) continue;
      for (const auto& p : enumerate_partitions(n, m)) {
        const auto subs = subtableaux(phi_inverse(p));
        const auto derived = derived_partitions(p);
        bool ok = subs.without_top_row == phi_inverse(derived.first) &&
                  subs.without_first_column == phi_inverse(derived.second) &&
                  subs.without_second_column == phi_inverse(derived.fourth) &&
                  subs.without_two_columns.has_value() == derived.third.has_value();
        if (ok && derived.third) ok = *subs.without_two_columns == phi_inverse(*derived.third);
        out.expect(ok, "sub-tableau coherence at " + nm(n, m));
      }
    }
}

void grid(Outcome& out) {
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m) {
      const auto result = oracles::stabilized_grid_region_oracle(n, m);
      std::set<TableauFilling> enumerated;
      for (const auto& t : enumerate_regions(n, m)) enumerated.insert(t.filling());
      out.expect(result.regions == enumerated, "grid set differs at " + nm(n, m));
      for (const auto& f : result.regions) out.expect(check_shi_conditions(f).ok(), "sample fails Shi at " + nm(n, m));
    }
  out.expect(oracles::stabilized_grid_region_oracle(2, 3).regions.size() == 22, "22 regions at n=2 m=3");
}

void counterexample(Outcome& out) {
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 3; ++m) {
      std::vector<Diagonal> fan;
      for (int i = 1; i <= n; ++i) fan.push_back(make_diagonal(i * m, m * (n + 1) + 1));
      const auto d = Dissection::validate(standard_labeling(n, m), fan);
      const auto image = psi_prime(d);
      out.expect(static_cast<int>(max_parts(image).size()) == n, "image not saturated at " + nm(n, m));
      out.expect(static_cast<int>(negative_roots_contained(d).size()) < n, "fan holds the snake at " + nm(n, m));
    }
}

void figure(Outcome& out) {
  const auto snake = snake_diagonals(alternating_labeling(4, 3));
  out.expect(snake == std::vector<Diagonal>{{12, 15}, {9, 12}, {6, 9}, {3, 6}}, "snake differs");
}

}  // namespace

int main() {
  report(1, "counting identities", counting);
  report(2, "positive partitions, bounded regions, snake-free dissections", positive);
  report(3, "bijection round trips", round_trips);
  report(4, "snake diagonals, maximal parts and simple walls agree", walls);
  report(5, "refined counts by parabolic product", refinement);
  report(6, "tableau lemmas", lemmas);
  report(7, "grid oracle reproduces the regions", grid);
  report(8, "standard-labeling counterexample", counterexample);
  report(9, "snake of the 17-gon", figure);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
