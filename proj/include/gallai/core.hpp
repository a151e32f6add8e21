// Value types for lattice points, colors and finite colored windows, plus the
// integer-exact area and color predicates everything else is built from.
//
// All areas are carried as doubled integers (a lattice triangle of area 1/2
// has doubled area 1), so every quantity in the library is integer-exact and
// no rational or floating arithmetic appears anywhere.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

using Color = int;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Row-major order: by y first, then x. Search sweeps and witness ordering
// use this everywhere so that reported witnesses are reproducible.
inline bool row_less(const Point& a, const Point& b) {
  if (a.y != b.y) return a.y < b.y;
  return a.x < b.x;
}

enum class RainbowMode {
  // |colors(Y)| == min(palette, |Y|)
  Canonical,
  // all points of Y pairwise distinctly colored
  Strict,
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

// A finite rectangular slice of the colored lattice. Cells are stored densely
// in row-major order, row y = origin.y first. Immutable after construction.
class Window {
 public:
  Window(Point origin, int width, int height, int palette,
         std::vector<Color> cells)
      : origin_(origin),
        width_(width),
        height_(height),
        palette_(palette),
        cells_(std::move(cells)) {
    if (width_ < 1 || height_ < 1)
      throw std::invalid_argument("Window: width and height must be >= 1");
    if (palette_ < 1) throw std::invalid_argument("Window: palette must be >= 1");
    if (cells_.size() != static_cast<std::size_t>(width_) * height_)
      throw std::invalid_argument("Window: cell count does not match bounds");
    for (Color c : cells_)
      if (c < 0 || c >= palette_)
        throw std::invalid_argument("Window: cell color out of palette range");
  }

  static Window filled(Point origin, int width, int height, int palette,
                       Color fill) {
    return Window(origin, width, height, palette,
                  std::vector<Color>(static_cast<std::size_t>(width) * height,
                                     fill));
  }

  Point origin() const { return origin_; }
  int width() const { return width_; }
  int height() const { return height_; }
  int palette() const { return palette_; }
  const std::vector<Color>& cells() const { return cells_; }

  bool contains(const Point& p) const {
    return p.x >= origin_.x && p.x < origin_.x + width_ && p.y >= origin_.y &&
           p.y < origin_.y + height_;
  }

  Color at(const Point& p) const {
    if (!contains(p))
      throw std::out_of_range("Window::at: point (" + std::to_string(p.x) +
                              "," + std::to_string(p.y) + ") outside window");
    return at_local(static_cast<int>(p.x - origin_.x),
                    static_cast<int>(p.y - origin_.y));
  }

  // Unchecked local lookup, ix in [0,width), iy in [0,height).
  Color at_local(int ix, int iy) const {
    return cells_[static_cast<std::size_t>(iy) * width_ + ix];
  }

  Point to_absolute(int ix, int iy) const {
    return Point{origin_.x + ix, origin_.y + iy};
  }

  // Copy with one cell recolored. Used to build small perturbed instances.
  Window patched(const Point& p, Color c) const {
    if (!contains(p)) throw std::out_of_range("Window::patched: point outside");
    if (c < 0 || c >= palette_)
      throw std::invalid_argument("Window::patched: color out of range");
    std::vector<Color> cells = cells_;
    cells[static_cast<std::size_t>(p.y - origin_.y) * width_ +
          (p.x - origin_.x)] = c;
    return Window(origin_, width_, height_, palette_, std::move(cells));
  }

 private:
  Point origin_;
  int width_;
  int height_;
  int palette_;
  std::vector<Color> cells_;
};

// Twice the enclosed area of a triangle or quadrilateral given in traversal
// order: |sum of x_i*y_{i+1} - x_{i+1}*y_i| over the closed cycle.
// Collinear or self-crossing input yields 0 or a smaller value; callers that
// care about non-degeneracy check for a positive result.
inline std::int64_t doubled_area(std::span<const Point> vertices) {
  if (vertices.size() != 3 && vertices.size() != 4)
    throw std::invalid_argument("doubled_area: expected 3 or 4 vertices");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % vertices.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s < 0 ? -s : s;
}

inline std::int64_t doubled_area(std::initializer_list<Point> vertices) {
  return doubled_area(std::span<const Point>(vertices.begin(), vertices.size()));
}

// Colors of the given points with multiplicity, sorted ascending.
inline std::vector<Color> color_multiset(std::span<const Point> points,
                                         const Window& w) {
  std::vector<Color> colors;
  colors.reserve(points.size());
  for (const Point& p : points) colors.push_back(w.at(p));
  std::sort(colors.begin(), colors.end());
  return colors;
}

inline int distinct_color_count(std::span<const Point> points,
                                const Window& w) {
  std::vector<Color> colors = color_multiset(points, w);
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  return static_cast<int>(colors.size());
}

inline bool is_rainbow(std::span<const Point> points, const Window& w,
                       RainbowMode mode) {
  if (points.empty())
    throw std::invalid_argument("is_rainbow: needs at least one point");
  const int distinct = distinct_color_count(points, w);
  switch (mode) {
    case RainbowMode::Canonical:
      return distinct ==
             std::min<std::int64_t>(w.palette(),
                                    static_cast<std::int64_t>(points.size()));
    case RainbowMode::Strict:
      return distinct == static_cast<int>(points.size());
  }
  return false;
}

inline bool is_monochromatic(std::span<const Point> points, const Window& w) {
  if (points.empty())
    throw std::invalid_argument("is_monochromatic: needs at least one point");
  return distinct_color_count(points, w) == 1;
}

}  // namespace gallai
