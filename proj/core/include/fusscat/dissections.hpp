#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fusscat/errors.hpp"
#include "fusscat/partitions.hpp"

namespace fusscat {

enum class Labeling { Standard, Alternating };

std::string to_string(Labeling labeling);
/// Accepts "standard" or "alternating"; throws SchemaError otherwise.
Labeling labeling_from_string(const std::string& name);

/// An (m(n+1)+2)-gon whose counterclockwise positions 0..N-1 carry distinct labels.
class LabeledPolygon {
 public:
  int rank() const noexcept { return n_; }
  int fuss() const noexcept { return m_; }
  int vertex_count() const noexcept { return static_cast<int>(ccw_labels_.size()); }
  Labeling labeling() const noexcept { return labeling_; }

  const std::vector<int>& ccw_labels() const noexcept { return ccw_labels_; }
  int label_at(int position) const { return ccw_labels_.at(static_cast<std::size_t>(position)); }
  /// Throws UnknownLabel.
  int position_of(int label) const;

  friend bool operator==(const LabeledPolygon&, const LabeledPolygon&) = default;

 private:
  friend LabeledPolygon standard_labeling(int n, int m);
  friend LabeledPolygon alternating_labeling(int n, int m);
  LabeledPolygon(int n, int m, Labeling labeling, std::vector<int> ccw_labels);

  int n_ = 0;
  int m_ = 0;
  Labeling labeling_ = Labeling::Standard;
  std::vector<int> ccw_labels_;
  std::vector<int> position_of_label_;
};

/// Labels 0, 1, ..., N-1 counterclockwise.
LabeledPolygon standard_labeling(int n, int m);

/// Label 0 at position 0; labels k with floor(k/m) even increase counterclockwise
/// from 0, labels with floor(k/m) odd increase clockwise from 0.
LabeledPolygon alternating_labeling(int n, int m);

LabeledPolygon make_polygon(int n, int m, Labeling labeling);

/// Unordered pair of vertex labels, stored with low < high.
struct Diagonal {
  int low = 0;
  int high = 0;

  friend bool operator==(const Diagonal&, const Diagonal&) = default;
  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

Diagonal make_diagonal(int a, int b);

/// True iff {a, b} is not a side and its endpoints are a position distance
/// d apart with d = 1 (mod m), i.e. both halves have 2 (mod m) vertices.
/// Throws UnknownLabel.
bool is_m_diagonal(const LabeledPolygon& poly, int a, int b);

/// True iff the endpoints strictly interleave in cyclic order. Throws UnknownLabel.
bool diagonals_cross(const LabeledPolygon& poly, const Diagonal& d1, const Diagonal& d2);

/// Every m-diagonal of the polygon, sorted.
std::vector<Diagonal> all_m_diagonals(const LabeledPolygon& poly);

/// A maximal set of n pairwise noncrossing m-diagonals.
class Dissection {
 public:
  /// Throws UnknownLabel, NotAnMDiagonal or InvalidDissection.
  static Dissection validate(LabeledPolygon polygon, std::vector<Diagonal> diagonals);

  const LabeledPolygon& polygon() const noexcept { return polygon_; }
  /// Sorted ascending.
  const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }
  bool contains(const Diagonal& d) const;

  std::string to_string() const;

  friend bool operator==(const Dissection& a, const Dissection& b) {
    return a.polygon_ == b.polygon_ && a.diagonals_ == b.diagonals_;
  }

 private:
  friend void for_each_dissection(const LabeledPolygon&, const std::function<void(const Dissection&)>&);
  Dissection(LabeledPolygon polygon, std::vector<Diagonal> diagonals)
      : polygon_(std::move(polygon)), diagonals_(std::move(diagonals)) {}

  LabeledPolygon polygon_;
  std::vector<Diagonal> diagonals_;
};

/// Visits every maximal m-dissection once. The recursion works on position
/// intervals: the (m+2)-gon containing the interval's base edge is chosen,
/// and each nontrivial piece it cuts off is filled recursively.
void for_each_dissection(const LabeledPolygon& poly, const std::function<void(const Dissection&)>& visit);

std::vector<Dissection> enumerate_dissections(int n, int m, Labeling labeling);

/// Diagonals of the negative simple roots -alpha_1, ..., -alpha_n (index i-1 holds -alpha_i).
/// Standard: -alpha_{2i-1} = {(i-1)m, (n+1-i)m+1}, -alpha_{2i} = {im, (n+1-i)m+1}.
/// Alternating: -alpha_i = {(n-i+1)m, (n-i+2)m}.
std::vector<Diagonal> snake_diagonals(const LabeledPolygon& poly);

/// Indices i whose snake diagonal belongs to d.
IndexSet negative_roots_contained(const Dissection& d);

/// An element of the colored almost positive roots: -alpha_i, or alpha^c_{ij}.
struct ColoredRoot {
  enum class Kind { NegativeSimple, ColoredPositive };
  Kind kind = Kind::NegativeSimple;
  int i = 0;
  int j = 0;
  int color = 0;  // 1..m for colored positive roots, 0 otherwise

  static ColoredRoot negative(int i) { return {Kind::NegativeSimple, i, i, 0}; }
  static ColoredRoot positive(int i, int j, int color) { return {Kind::ColoredPositive, i, j, color}; }

  std::string to_string() const;

  friend bool operator==(const ColoredRoot&, const ColoredRoot&) = default;
  friend auto operator<=>(const ColoredRoot&, const ColoredRoot&) = default;
};

/// Identifies an m-diagonal with a colored almost positive root. A snake diagonal
/// gives its negative simple root; any other diagonal crosses a consecutive run
/// -alpha_i..-alpha_j of the snake and gets color c = its rank in clockwise order
/// among the m diagonals crossing exactly that run. Clockwise order: with
/// endpoint positions p < q, decreasing p + q, then decreasing p.
/// Throws NotAnMDiagonal, NonConsecutiveCrossing.
ColoredRoot diagonal_to_colored_root(const LabeledPolygon& poly, const Diagonal& d);

/// The smaller label of each diagonal, sorted decreasingly. Throws
/// InvalidPartition if the result leaves the staircase (never for valid input).
StaircasePartition initial_points(const Dissection& d);

}  // namespace fusscat
