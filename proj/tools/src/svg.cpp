#include "fusscat_cli/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>

namespace fusscat::cli {

namespace {

constexpr double kCell = 28.0;
constexpr double kMargin = 20.0;
constexpr const char* kSnakeColor = "#c0392b";

class Canvas {
 public:
  Canvas(double width, double height) : width_(width), height_(height) {}

  template <typename... Args>
  void add(fmt::format_string<Args...> format, Args&&... args) {
    fmt::format_to(std::back_inserter(body_), format, std::forward<Args>(args)...);
    body_.push_back('\n');
  }

  std::string finish() const {
    return fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.3f}\" height=\"{1:.3f}\" "
        "viewBox=\"0 0 {0:.3f} {1:.3f}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{2}</svg>\n",
        width_, height_, body_);
  }

 private:
  double width_, height_;
  std::string body_;
};

void box(Canvas& c, double x, double y, const char* fill, const char* stroke, const char* extra = "") {
  c.add(R"(<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="{}" stroke="{}"{}/>)", x, y, kCell,
        kCell, fill, stroke, extra);
}

struct Point {
  double x, y;
};

std::string polygon_svg(const LabeledPolygon& poly, const std::vector<Diagonal>& diagonals, bool dash_snake) {
  const int count = poly.vertex_count();
  const double radius = std::max(90.0, 14.0 * count);
  const double center = radius + 3 * kMargin;
  Canvas c(2 * center, 2 * center);

  // Position 0 at the bottom, positions increasing counterclockwise.
  auto at = [&](int position, double r) {
    const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * position / count;
    return Point{center + r * std::cos(theta), center - r * std::sin(theta)};
  };

  std::string outline;
  for (int p = 0; p < count; ++p) {
    const auto v = at(p, radius);
    outline += fmt::format("{}{:.3f},{:.3f}", p == 0 ? "" : " ", v.x, v.y);
  }
  c.add(R"(<polygon points="{}" fill="none" stroke="black" stroke-width="1.5"/>)", outline);

  const auto snake = snake_diagonals(poly);
  auto line = [&](const Diagonal& d, const char* color, double width, const char* extra) {
    const auto a = at(poly.position_of(d.low), radius), b = at(poly.position_of(d.high), radius);
    c.add(R"(<line x1="{:.3f}" y1="{:.3f}" x2="{:.3f}" y2="{:.3f}" stroke="{}" stroke-width="{:.3f}"{}/>)", a.x, a.y,
          b.x, b.y, color, width, extra);
  };
  if (dash_snake)
    for (const auto& d : snake) line(d, kSnakeColor, 2.0, R"( stroke-dasharray="6 4")");
  for (const auto& d : diagonals) {
    const bool in_snake = std::find(snake.begin(), snake.end(), d) != snake.end();
    line(d, in_snake ? kSnakeColor : "#2c3e50", in_snake ? 3.0 : 1.5, "");
  }

  for (int p = 0; p < count; ++p) {
    const auto v = at(p, radius), t = at(p, radius + 16);
    c.add(R"(<circle cx="{:.3f}" cy="{:.3f}" r="3.000" fill="black"/>)", v.x, v.y);
    c.add(R"(<text x="{:.3f}" y="{:.3f}" font-family="sans-serif" font-size="13" text-anchor="middle" )"
          R"(dominant-baseline="middle">{}</text>)",
          t.x, t.y, poly.label_at(p));
  }
  return c.finish();
}

}  // namespace

std::string render_svg(const StaircasePartition& p) {
  const int n = p.rank();
  Canvas c(2 * kMargin + kCell * p.bound(1), 2 * kMargin + kCell * n);
  for (int i = 1; i <= n; ++i) {
    const double y = kMargin + kCell * (i - 1);
    for (int col = 0; col < p.bound(i); ++col) {
      const double x = kMargin + kCell * col;
      if (col < p.part(i))
        box(c, x, y, "#aed6f1", "black");
      else
        box(c, x, y, "none", "#b0b0b0", R"( stroke-dasharray="3 3")");
    }
  }
  return c.finish();
}

std::string render_svg(const ShiTableau& t) {
  const int n = t.rank();
  Canvas c(2 * kMargin + kCell * n, 2 * kMargin + kCell * n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const double x = kMargin + kCell * (n - j), y = kMargin + kCell * (i - 1);
      box(c, x, y, "none", "black");
      if (t.at(i, j) != 0)
        c.add(R"(<text x="{:.3f}" y="{:.3f}" font-family="sans-serif" font-size="14" text-anchor="middle" )"
              R"(dominant-baseline="middle">{}</text>)",
              x + kCell / 2, y + kCell / 2, t.at(i, j));
    }
  return c.finish();
}

std::string render_svg(const Dissection& d) { return polygon_svg(d.polygon(), d.diagonals(), false); }

std::string render_svg(const LabeledPolygon& poly) { return polygon_svg(poly, {}, true); }

}  // namespace fusscat::cli
