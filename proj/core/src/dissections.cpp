#include "fusscat/dissections.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fusscat {

std::string to_string(Labeling labeling) {
  return labeling == Labeling::Standard ? "standard" : "alternating";
}

Labeling labeling_from_string(const std::string& name) {
  if (name == "standard") return Labeling::Standard;
  if (name == "alternating") return Labeling::Alternating;
  throw SchemaError("unknown labeling '" + name + "'");
}

LabeledPolygon::LabeledPolygon(int n, int m, Labeling labeling, std::vector<int> ccw_labels)
    : n_(n), m_(m), labeling_(labeling), ccw_labels_(std::move(ccw_labels)),
      position_of_label_(ccw_labels_.size(), -1) {
  for (std::size_t pos = 0; pos < ccw_labels_.size(); ++pos) {
    position_of_label_[static_cast<std::size_t>(ccw_labels_[pos])] = static_cast<int>(pos);
  }
}

int LabeledPolygon::position_of(int label) const {
  if (label < 0 || label >= vertex_count()) throw UnknownLabel(label);
  return position_of_label_[static_cast<std::size_t>(label)];
}

LabeledPolygon standard_labeling(int n, int m) {
  require_parameters(n, m);
  const int count = m * (n + 1) + 2;
  std::vector<int> labels(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) labels[static_cast<std::size_t>(k)] = k;
  return LabeledPolygon(n, m, Labeling::Standard, std::move(labels));
}

LabeledPolygon alternating_labeling(int n, int m) {
  require_parameters(n, m);
  const int count = m * (n + 1) + 2;
  std::vector<int> labels(static_cast<std::size_t>(count), 0);
  int ccw = 1, cw = count - 1;
  for (int k = 1; k < count; ++k) {
    if ((k / m) % 2 == 0) {
      labels[static_cast<std::size_t>(ccw++)] = k;
    } else {
      labels[static_cast<std::size_t>(cw--)] = k;
    }
  }
  return LabeledPolygon(n, m, Labeling::Alternating, std::move(labels));
}

LabeledPolygon make_polygon(int n, int m, Labeling labeling) {
  return labeling == Labeling::Standard ? standard_labeling(n, m) : alternating_labeling(n, m);
}

Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

namespace {

bool positions_form_m_diagonal(int p, int q, int count, int m) {
  const int d = ((q - p) % count + count) % count;
  if (d <= 1 || d >= count - 1) return false;
  return (d - 1) % m == 0;
}

bool positions_cross(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::pair<int, int> positions(const LabeledPolygon& poly, const Diagonal& d) {
  int p = poly.position_of(d.low), q = poly.position_of(d.high);
  if (p > q) std::swap(p, q);
  return {p, q};
}

}  // namespace

bool is_m_diagonal(const LabeledPolygon& poly, int a, int b) {
  const int p = poly.position_of(a), q = poly.position_of(b);
  return positions_form_m_diagonal(p, q, poly.vertex_count(), poly.fuss());
}

bool diagonals_cross(const LabeledPolygon& poly, const Diagonal& d1, const Diagonal& d2) {
  const auto [a, b] = positions(poly, d1);
  const auto [c, d] = positions(poly, d2);
  return positions_cross(a, b, c, d);
}

std::vector<Diagonal> all_m_diagonals(const LabeledPolygon& poly) {
  std::vector<Diagonal> out;
  const int count = poly.vertex_count();
  for (int p = 0; p < count; ++p) {
    for (int q = p + 1; q < count; ++q) {
      if (positions_form_m_diagonal(p, q, count, poly.fuss())) {
        out.push_back(make_diagonal(poly.label_at(p), poly.label_at(q)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dissection Dissection::validate(LabeledPolygon polygon, std::vector<Diagonal> diagonals) {
  for (auto& d : diagonals) {
    d = make_diagonal(d.low, d.high);
    if (d.low == d.high) throw NotAnMDiagonal("degenerate diagonal {" + std::to_string(d.low) + "}");
    if (!is_m_diagonal(polygon, d.low, d.high)) {
      throw NotAnMDiagonal("{" + std::to_string(d.low) + "," + std::to_string(d.high) +
                           "} is not an m-diagonal");
    }
  }
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) {
    throw InvalidDissection("repeated diagonal");
  }
  if (diagonals.size() != static_cast<std::size_t>(polygon.rank())) {
    throw InvalidDissection("a maximal dissection has exactly " + std::to_string(polygon.rank()) +
                            " diagonals, got " + std::to_string(diagonals.size()));
  }
  for (std::size_t a = 0; a < diagonals.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      if (diagonals_cross(polygon, diagonals[a], diagonals[b])) {
        throw InvalidDissection("diagonals cross");
      }
    }
  }
  return Dissection(std::move(polygon), std::move(diagonals));
}

bool Dissection::contains(const Diagonal& d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), make_diagonal(d.low, d.high));
}

std::string Dissection::to_string() const {
  std::ostringstream os;
  os << fusscat::to_string(polygon_.labeling()) << '{';
  for (std::size_t k = 0; k < diagonals_.size(); ++k) {
    if (k) os << ',';
    os << '{' << diagonals_[k].low << ',' << diagonals_[k].high << '}';
  }
  os << '}';
  return os.str();
}

void for_each_dissection(const LabeledPolygon& poly,
                         const std::function<void(const Dissection&)>& visit) {
  const int m = poly.fuss();
  // A pending interval [lo, hi] of positions still has to be cut into (m+2)-gons;
  // its base edge {lo, hi} is either a polygon side or an already chosen diagonal.
  std::vector<std::pair<int, int>> pending{{0, poly.vertex_count() - 1}};
  std::vector<std::pair<int, int>> chosen;

  std::function<void()> fill = [&]() {
    if (pending.empty()) {
      std::vector<Diagonal> diagonals;
      diagonals.reserve(chosen.size());
      for (auto [p, q] : chosen) diagonals.push_back(make_diagonal(poly.label_at(p), poly.label_at(q)));
      std::sort(diagonals.begin(), diagonals.end());
      visit(Dissection(poly, std::move(diagonals)));
      return;
    }
    const auto [lo, hi] = pending.back();
    pending.pop_back();

    // The cell on the base edge has corners lo = c_0 < c_1 < ... < c_{m+1} = hi,
    // each gap 1 + m*x_t. Distribute the spare multiples of m over the m+1 gaps.
    std::vector<int> corners{lo};
    std::function<void(int, int)> place = [&](int gap_index, int spare) {
      if (gap_index == m) {
        corners.push_back(corners.back() + 1 + m * spare);
        const auto pending_size = pending.size();
        const auto chosen_size = chosen.size();
        for (std::size_t t = 0; t + 1 < corners.size(); ++t) {
          if (corners[t + 1] - corners[t] > 1) {
            pending.emplace_back(corners[t], corners[t + 1]);
            chosen.emplace_back(corners[t], corners[t + 1]);
          }
        }
        fill();
        pending.resize(pending_size);
        chosen.resize(chosen_size);
        corners.pop_back();
        return;
      }
      for (int x = 0; x <= spare; ++x) {
        corners.push_back(corners.back() + 1 + m * x);
        place(gap_index + 1, spare - x);
        corners.pop_back();
      }
    };
    place(0, (hi - lo - m - 1) / m);

    pending.emplace_back(lo, hi);
  };
  fill();
}

std::vector<Dissection> enumerate_dissections(int n, int m, Labeling labeling) {
  std::vector<Dissection> out;
  for_each_dissection(make_polygon(n, m, labeling), [&](const Dissection& d) { out.push_back(d); });
  return out;
}

std::vector<Diagonal> snake_diagonals(const LabeledPolygon& poly) {
  const int n = poly.rank(), m = poly.fuss();
  std::vector<Diagonal> out(static_cast<std::size_t>(n));
  if (poly.labeling() == Labeling::Standard) {
    for (int i = 1; 2 * i - 1 <= n; ++i) {
      out[static_cast<std::size_t>(2 * i - 2)] = make_diagonal((i - 1) * m, (n + 1 - i) * m + 1);
    }
    for (int i = 1; 2 * i <= n; ++i) {
      out[static_cast<std::size_t>(2 * i - 1)] = make_diagonal(i * m, (n + 1 - i) * m + 1);
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      out[static_cast<std::size_t>(i - 1)] = make_diagonal((n - i + 1) * m, (n - i + 2) * m);
    }
  }
  return out;
}

IndexSet negative_roots_contained(const Dissection& d) {
  IndexSet out;
  const auto snake = snake_diagonals(d.polygon());
  for (std::size_t i = 0; i < snake.size(); ++i) {
    if (d.contains(snake[i])) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string ColoredRoot::to_string() const {
  if (kind == Kind::NegativeSimple) return "-a" + std::to_string(i);
  return "a^" + std::to_string(color) + "_" + std::to_string(i) + "," + std::to_string(j);
}

namespace {

/// Snake indices crossed by d, as a closed run [first, last]; {0, 0} if none.
std::pair<int, int> crossed_run(const LabeledPolygon& poly, const std::vector<Diagonal>& snake,
                                const Diagonal& d) {
  std::vector<int> crossed;
  for (std::size_t i = 0; i < snake.size(); ++i) {
    if (diagonals_cross(poly, d, snake[i])) crossed.push_back(static_cast<int>(i) + 1);
  }
  if (crossed.empty()) return {0, 0};
  if (crossed.back() - crossed.front() + 1 != static_cast<int>(crossed.size())) {
    throw NonConsecutiveCrossing("{" + std::to_string(d.low) + "," + std::to_string(d.high) +
                                 "} crosses a non-consecutive part of the snake");
  }
  return {crossed.front(), crossed.back()};
}

}  // namespace

ColoredRoot diagonal_to_colored_root(const LabeledPolygon& poly, const Diagonal& d_in) {
  const Diagonal d = make_diagonal(d_in.low, d_in.high);
  if (d.low == d.high || !is_m_diagonal(poly, d.low, d.high)) {
    throw NotAnMDiagonal("{" + std::to_string(d.low) + "," + std::to_string(d.high) +
                         "} is not an m-diagonal");
  }
  const auto snake = snake_diagonals(poly);
  for (std::size_t i = 0; i < snake.size(); ++i) {
    if (snake[i] == d) return ColoredRoot::negative(static_cast<int>(i) + 1);
  }
  const auto run = crossed_run(poly, snake, d);
  if (run.first == 0) {
    throw NonConsecutiveCrossing("m-diagonal crosses no snake diagonal");
  }

  std::vector<std::pair<int, int>> peers;  // positions (p < q) of diagonals crossing the same run
  for (const auto& other : all_m_diagonals(poly)) {
    if (std::find(snake.begin(), snake.end(), other) != snake.end()) continue;
    if (crossed_run(poly, snake, other) == run) peers.push_back(positions(poly, other));
  }
  if (peers.size() != static_cast<std::size_t>(poly.fuss())) {
    throw std::logic_error("expected exactly m diagonals crossing snake run, found " +
                           std::to_string(peers.size()));
  }
  std::sort(peers.begin(), peers.end(), [](const auto& a, const auto& b) {
    if (a.first + a.second != b.first + b.second) return a.first + a.second > b.first + b.second;
    return a.first > b.first;
  });
  const auto self = positions(poly, d);
  const auto rank = std::find(peers.begin(), peers.end(), self) - peers.begin();
  return ColoredRoot::positive(run.first, run.second, static_cast<int>(rank) + 1);
}

StaircasePartition initial_points(const Dissection& d) {
  std::vector<int> starts;
  starts.reserve(d.diagonals().size());
  for (const auto& diag : d.diagonals()) starts.push_back(diag.low);
  std::sort(starts.begin(), starts.end(), std::greater<>());
  return StaircasePartition::validate(std::move(starts), d.polygon().rank(), d.polygon().fuss());
}

}  // namespace fusscat
