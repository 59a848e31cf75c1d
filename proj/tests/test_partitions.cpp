#include "doctest.h"

#include <fusscat/partitions.hpp>

#include <algorithm>
#include <set>

using namespace fusscat;

namespace {

StaircasePartition P(std::vector<int> parts, int n, int m) {
  return StaircasePartition::validate(std::move(parts), n, m);
}

// Brute force over every integer tuple under the staircase, independent of the enumerator.
std::vector<std::vector<int>> brute_partitions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (;;) {
    bool decreasing = true;
    for (int i = 1; i < n; ++i) decreasing = decreasing && t[i - 1] >= t[i];
    if (decreasing) out.push_back(t);
    int k = 0;
    for (; k < n; ++k) {
      if (++t[k] <= m * (n - k)) break;
      t[k] = 0;
    }
    if (k == n) break;
  }
  return out;
}

// N(A_n, m) and N_+(A_n, m) as products over the exponents, evaluated exactly
// as a single fraction.
BigInt product_formula(int n, int m, int shift) {
  const auto params = counting_parameters(n, m);
  BigInt num = 1, den = 1;
  for (int e : params.exponents) {
    num *= e + m * params.coxeter_number + shift;
    den *= e + 1;
  }
  REQUIRE(num % den == 0);
  return num / den;
}

}  // namespace

TEST_CASE("validate_partition accepts staircase partitions") {
  CHECK(P({0, 0}, 2, 1).parts().size() == 2);
  const auto full = P({12, 9, 6, 3}, 4, 3);
  CHECK(full.part(1) == 12);
  CHECK(full.bound(4) == 3);
}

TEST_CASE("validate_partition rejects bad input") {
  try {
    P({4, 3}, 2, 1);
    FAIL("expected ExceedsStaircase");
  } catch (const ExceedsStaircase& e) {
    CHECK(e.index() == 1);
  }
  try {
    P({1, 2}, 2, 3);
    FAIL("expected NotWeaklyDecreasing");
  } catch (const NotWeaklyDecreasing& e) {
    CHECK(e.index() == 2);
  }
  CHECK_THROWS_AS(P({0, 2}, 2, 1), NotWeaklyDecreasing);
  CHECK_THROWS_AS(P({1, 2}, 2, 1), NotWeaklyDecreasing);
  CHECK_THROWS_AS(P({2, 2}, 2, 1), ExceedsStaircase);
  CHECK_THROWS_AS(P({1}, 2, 1), InvalidPartition);
  CHECK_THROWS_AS(P({0, -1}, 2, 1), InvalidPartition);
  CHECK_THROWS_AS(P({0}, 0, 1), InvalidParameters);
  CHECK_THROWS_AS(P({0}, 1, 0), InvalidParameters);
}

TEST_CASE("enumerate_partitions small cases") {
  auto as_vectors = [](int n, int m) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n, m)) out.emplace_back(p.parts().begin(), p.parts().end());
    return out;
  };
  CHECK(as_vectors(1, 2) == std::vector<std::vector<int>>{{2}, {1}, {0}});
  CHECK(as_vectors(2, 1) == std::vector<std::vector<int>>{{2, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}});
  CHECK(enumerate_partitions(2, 3).size() == 22);
}

TEST_CASE("enumeration is strictly lexicographically decreasing and matches brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const auto listed = enumerate_partitions(n, m);
      for (std::size_t k = 1; k < listed.size(); ++k) {
        CHECK(std::lexicographical_compare(listed[k].parts().begin(), listed[k].parts().end(),
                                           listed[k - 1].parts().begin(), listed[k - 1].parts().end()));
      }
      auto brute = brute_partitions(n, m);
      std::set<std::vector<int>> expected(brute.begin(), brute.end()), got;
      for (const auto& p : listed) got.emplace(p.parts().begin(), p.parts().end());
      CHECK(got == expected);
      CHECK(got.size() == listed.size());
    }
  }
}

TEST_CASE("PartitionEnumerator restarts") {
  PartitionEnumerator e(3, 2);
  std::size_t first = 0;
  while (e.next()) ++first;
  CHECK_FALSE(e.next().has_value());
  e.reset();
  std::size_t second = 0;
  while (e.next()) ++second;
  CHECK(first == 55);
  CHECK(second == 55);
}

TEST_CASE("count_partitions examples") {
  CHECK(count_partitions(2, 1) == 5);
  CHECK(count_partitions(2, 3) == 22);
  CHECK(count_partitions(5, 3) == 7084);
  CHECK(count_partitions(4, 3) == 969);
}

TEST_CASE("count_positive examples") {
  for (int m = 1; m <= 6; ++m) CHECK(count_positive(1, m) == m);
  CHECK(count_positive(2, 1) == 2);
  // (1/3) * C(10, 2); brute force over lambda_1 < 6, lambda_2 < 3 gives 6 + 5 + 4.
  CHECK(count_positive(2, 3) == 15);
}

TEST_CASE("counting formulas agree with brute force and with the exponent products") {
  // Frozen from an independent brute-force listing: {total, positive} per (n, m).
  const int frozen[5][3][2] = {
      {{2, 1}, {3, 2}, {4, 3}},
      {{5, 2}, {12, 7}, {22, 15}},
      {{14, 5}, {55, 30}, {140, 91}},
      {{42, 14}, {273, 143}, {969, 612}},
      {{132, 42}, {1428, 728}, {7084, 4389}},
  };
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(count_partitions(n, m) == frozen[n - 1][m - 1][0]);
      CHECK(count_positive(n, m) == frozen[n - 1][m - 1][1]);
      CHECK(count_partitions(n, m) == product_formula(n, m, +1));
      CHECK(count_positive(n, m) == product_formula(n, m, -1));

      const auto listed = enumerate_partitions(n, m);
      CHECK(count_partitions(n, m) == listed.size());
      const auto positive = std::count_if(listed.begin(), listed.end(),
                                          [](const auto& p) { return max_parts(p).empty(); });
      CHECK(count_positive(n, m) == positive);
    }
  }
}

TEST_CASE("counting formulas divide exactly far beyond the enumerable range") {
  for (int n = 1; n <= 40; ++n) {
    for (int m = 1; m <= 12; ++m) {
      CHECK_NOTHROW(count_partitions(n, m));
      CHECK_NOTHROW(count_positive(n, m));
      CHECK(count_partitions(n, m) == product_formula(n, m, +1));
    }
  }
  CHECK(count_partitions(40, 12).str().size() > 20);
}

TEST_CASE("binomial") {
  CHECK(binomial(12, 3) == 220);
  CHECK(binomial(24, 6) == 134596);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("max_parts") {
  CHECK(max_parts(P({0, 0, 0, 0}, 4, 3)).empty());
  CHECK(max_parts(P({12, 9, 6, 3}, 4, 3)) == IndexSet{1, 2, 3, 4});
  CHECK(max_parts(P({6, 2}, 2, 3)) == IndexSet{1});
}

TEST_CASE("to_lattice_path examples") {
  CHECK(to_lattice_path(P({0, 0}, 2, 1)) == "NNEE");
  CHECK(to_lattice_path(P({2, 1}, 2, 1)) == "ENEN");
  CHECK(to_lattice_path(P({1, 0}, 2, 1)) == "NENE");
  CHECK(to_lattice_path(P({0, 0, 0}, 3, 2)) == "NNNEEEEEE");
  CHECK(to_lattice_path(P({4, 2}, 2, 3)) == "EENEENEE");
}

TEST_CASE("lattice paths: injective, above y = x/m - 1, touching at maximal parts") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 3; ++m) {
      std::set<std::string> seen;
      for (const auto& p : enumerate_partitions(n, m)) {
        const auto path = to_lattice_path(p);
        CHECK(seen.insert(path).second);
        CHECK(std::count(path.begin(), path.end(), 'N') == n);
        CHECK(std::count(path.begin(), path.end(), 'E') == m * n);

        // Walk the path in integer coordinates; m*y >= x - m is "weakly above".
        int x = 0, y = 0;
        IndexSet touches;
        for (char step : path) {
          if (step == 'E') ++x; else ++y;
          CHECK(m * y >= x - m);
          // A touch at the end of row i's east run, row i = n - y.
          if (step == 'E' && m * y == x - m) touches.push_back(n - y);
        }
        std::sort(touches.begin(), touches.end());
        touches.erase(std::unique(touches.begin(), touches.end()), touches.end());
        CHECK(touches == max_parts(p));
      }
    }
  }
}
