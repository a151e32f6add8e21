// Total colorings of the lattice, realized as small closed-form rules that
// can be evaluated at any point and rendered into a Window.
//
// Every rule is deterministic; the one randomized family derives all of its
// randomness from an explicit 64-bit seed, so identical parameters always
// produce identical colorings on every platform.
#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gallai/core.hpp"

namespace gallai {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a;
  return s ^ (splitmix64(s) + 0x9E3779B97F4A7C15ULL + (b << 6) + (b >> 2));
}

}  // namespace detail

enum class OutOfBounds { Error, Periodic };

struct ColumnExceptionRule {
  std::int64_t t;  // spacing of the exceptional points (0, t*m)
  int palette;
};

struct StripedRule {
  std::vector<Color> line_colors;  // period p >= 3, cyclic
  int palette;
};

struct DiagonalRule {};  // 3 colors, (x,y) -> (y - x) mod 3

struct ParityRule {
  int palette;  // even coordinate sum -> palette-1, else (x+y) mod (palette-1)
};

struct StoredGridRule {
  Window grid;
  OutOfBounds policy;
};

struct RainbowFeasibleRandomRule {
  int n;  // block length, >= 6 and divisible by 3
  std::uint64_t seed;
};

// A total coloring of the lattice. Construction goes through the make_*
// factories below, which validate parameters.
class ColoringRule {
 public:
  using Variant = std::variant<ColumnExceptionRule, StripedRule, DiagonalRule,
                               ParityRule, StoredGridRule,
                               RainbowFeasibleRandomRule>;

  explicit ColoringRule(Variant v) : impl_(std::move(v)) {}

  int palette() const {
    return std::visit(
        [](const auto& r) -> int {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, DiagonalRule>)
            return 3;
          else if constexpr (std::is_same_v<T, StoredGridRule>)
            return r.grid.palette();
          else if constexpr (std::is_same_v<T, RainbowFeasibleRandomRule>)
            return 3;
          else
            return r.palette;
        },
        impl_);
  }

  Color at(const Point& p) const {
    return std::visit([&](const auto& r) { return eval(r, p); }, impl_);
  }

  const Variant& variant() const { return impl_; }

 private:
  static Color eval(const ColumnExceptionRule& r, const Point& p) {
    if (p.x != 0 || floor_mod(p.y, r.t) != 0) return 0;
    const std::int64_t m = floor_div(p.y, r.t);
    return 1 + static_cast<Color>(floor_mod(m, r.palette - 1));
  }

  static Color eval(const StripedRule& r, const Point& p) {
    const auto period = static_cast<std::int64_t>(r.line_colors.size());
    return r.line_colors[static_cast<std::size_t>(floor_mod(p.y, period))];
  }

  static Color eval(const DiagonalRule&, const Point& p) {
    return static_cast<Color>(floor_mod(p.y - p.x, 3));
  }

  static Color eval(const ParityRule& r, const Point& p) {
    const std::int64_t s = p.x + p.y;
    if (floor_mod(s, 2) == 0) return r.palette - 1;
    return static_cast<Color>(floor_mod(s, r.palette - 1));
  }

  static Color eval(const StoredGridRule& r, const Point& p) {
    if (r.policy == OutOfBounds::Error || r.grid.contains(p)) return r.grid.at(p);
    const Point wrapped{
        r.grid.origin().x + floor_mod(p.x - r.grid.origin().x, r.grid.width()),
        r.grid.origin().y + floor_mod(p.y - r.grid.origin().y, r.grid.height())};
    return r.grid.at(wrapped);
  }

  static Color eval(const RainbowFeasibleRandomRule& r, const Point& p) {
    const std::int64_t block = floor_div(p.x, r.n);
    const int offset = static_cast<int>(p.x - block * r.n);
    // Balanced block: n/3 cells of each color, shuffled by a stream seeded
    // from (seed, y, block). Same parameters give the same block forever.
    std::uint64_t state = detail::mix(
        detail::mix(r.seed, static_cast<std::uint64_t>(p.y)),
        static_cast<std::uint64_t>(block));
    std::vector<Color> cells(static_cast<std::size_t>(r.n));
    for (int i = 0; i < r.n; ++i) cells[i] = i / (r.n / 3);
    for (int i = r.n - 1; i > 0; --i) {
      const int j = static_cast<int>(detail::splitmix64(state) %
                                     static_cast<std::uint64_t>(i + 1));
      std::swap(cells[i], cells[j]);
    }
    return cells[offset];
  }

  Variant impl_;
};

// All of the lattice gets color 0 except the points (0, t*m), which cycle
// through colors 1..r-1 as m runs over the integers.
inline ColoringRule make_column_exception(std::int64_t t, int r) {
  if (t < 1) throw std::invalid_argument("column-exception: t must be >= 1");
  if (r < 3) throw std::invalid_argument("column-exception: palette must be >= 3");
  return ColoringRule(ColumnExceptionRule{t, r});
}

// Each horizontal line y gets the single color line_colors[y mod p]. Every 3
// cyclically consecutive entries must be pairwise distinct.
inline ColoringRule make_striped(const std::vector<Color>& line_colors, int r) {
  const auto p = line_colors.size();
  if (p < 3) throw std::invalid_argument("striped: need at least 3 line colors");
  for (Color c : line_colors)
    if (c < 0 || c >= r)
      throw std::invalid_argument("striped: line color out of palette range");
  for (std::size_t i = 0; i < p; ++i) {
    const Color a = line_colors[i];
    const Color b = line_colors[(i + 1) % p];
    const Color c = line_colors[(i + 2) % p];
    if (a == b || b == c || a == c)
      throw std::invalid_argument(
          "striped: 3 consecutive line colors must be pairwise distinct "
          "(violated at position " +
          std::to_string(i) + ")");
  }
  return ColoringRule(StripedRule{line_colors, r});
}

inline ColoringRule make_diagonal_d3() { return ColoringRule(DiagonalRule{}); }

inline ColoringRule make_parity(int r) {
  if (r < 2) throw std::invalid_argument("parity: palette must be >= 2");
  return ColoringRule(ParityRule{r});
}

inline ColoringRule make_stored_grid(Window grid,
                                     OutOfBounds policy = OutOfBounds::Error) {
  return ColoringRule(StoredGridRule{std::move(grid), policy});
}

// 3-coloring whose horizontal lines are tiled by independent aligned blocks
// of length n, each a seeded shuffle of a balanced multiset (n/3 of each
// color). Every aligned length-n segment therefore holds each color exactly
// n/3 times, which keeps rainbow 3-term progressions available in every
// segment.
inline ColoringRule make_rainbow_feasible_random(int n, std::uint64_t seed) {
  if (n < 6 || n % 3 != 0)
    throw std::invalid_argument(
        "rf-random: block length must be >= 6 and divisible by 3");
  return ColoringRule(RainbowFeasibleRandomRule{n, seed});
}

inline Window render(const ColoringRule& rule, Point origin, int width,
                     int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("render: width and height must be >= 1");
  std::vector<Color> cells;
  cells.reserve(static_cast<std::size_t>(width) * height);
  for (int iy = 0; iy < height; ++iy)
    for (int ix = 0; ix < width; ++ix)
      cells.push_back(rule.at(Point{origin.x + ix, origin.y + iy}));
  return Window(origin, width, height, rule.palette(), std::move(cells));
}

}  // namespace gallai
