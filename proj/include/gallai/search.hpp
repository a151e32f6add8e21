// Enumerators and first-witness finders for the configuration species the
// library knows about: monochromatic axis rectangles, rainbow triangles,
// rainbow 3-term progressions on a row, and quadrilaterals with two
// horizontal sides (parallelograms and trapezoids), all matched by exact
// doubled area.
//
// Every finder sweeps its candidate space in a fixed lexicographic order and
// reports witnesses in that order, so results are reproducible across runs
// and across worker counts. Parallel runs partition the space into chunks
// that are merged in chunk order; the merged report is identical to the
// single-threaded one.
#pragma once

#include <array>
#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gallai/core.hpp"
#include "gallai/parallel.hpp"

namespace gallai {

enum class ConfigKind {
  MonoRect,
  RainbowTriangle,
  MonoParallelogramH,
  RainbowTrapezoidH,
  RainbowAp3,
};

inline const char* kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::MonoRect: return "mono-rect";
    case ConfigKind::RainbowTriangle: return "rainbow-triangle";
    case ConfigKind::MonoParallelogramH: return "mono-parallelogram";
    case ConfigKind::RainbowTrapezoidH: return "rainbow-trapezoid";
    case ConfigKind::RainbowAp3: return "rainbow-ap3";
  }
  return "?";
}

// A found pattern. Polygon vertices are emitted in counterclockwise
// traversal order starting from the row-order-smallest vertex; colors are
// the window colors of the vertices in the same order. Progressions carry
// doubled_area 0, every other kind is non-degenerate (doubled_area > 0).
struct Configuration {
  ConfigKind kind = ConfigKind::MonoRect;
  std::vector<Point> vertices;
  std::int64_t doubled_area = 0;
  std::vector<Color> colors;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Label of a rainbow 3-term progression inside a length-N segment: initial
// offset x from the segment start, difference d, and the color pattern of
// the three points. x + 2d <= N - 1 and the sigma entries are pairwise
// distinct.
struct Ap3Triple {
  int x = 0;
  int d = 0;
  std::array<Color, 3> sigma{};

  friend auto operator<=>(const Ap3Triple&, const Ap3Triple&) = default;
};

struct SearchReport {
  std::string query;
  std::vector<Configuration> witnesses;  // truncated at the requested limit
  std::optional<long long> total_count;
  bool exhaustive = false;
  std::int64_t elapsed_ms = 0;
};

enum class TriangleSweep { Auto, Full, FastPath };

// Above this many window points the full triangle sweep is replaced by the
// horizontal-base fast path unless explicitly forced.
inline constexpr int kFullTriangleSweepMaxPoints = 600;

struct SearchOptions {
  long long limit = 16;  // max witnesses kept in the report
  int jobs = 1;
  TriangleSweep sweep = TriangleSweep::Auto;
};

namespace detail {

struct ChunkHits {
  std::vector<Configuration> witnesses;
  long long count = 0;
};

inline SearchReport merge_chunks(std::string query,
                                 std::vector<ChunkHits> chunks,
                                 long long limit, bool exhaustive,
                                 std::chrono::steady_clock::time_point start) {
  SearchReport report;
  report.query = std::move(query);
  report.exhaustive = exhaustive;
  long long total = 0;
  for (auto& c : chunks) {
    total += c.count;
    for (auto& w : c.witnesses) {
      if (static_cast<long long>(report.witnesses.size()) < limit)
        report.witnesses.push_back(std::move(w));
    }
  }
  report.total_count = total;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

inline std::int64_t cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (b.x - o.x) * (a.y - o.y);
}

// Counterclockwise vertex order starting from the row-order-smallest vertex.
// Input must be non-degenerate.
inline std::array<Point, 3> ccw_triangle(Point a, Point b, Point c) {
  if (row_less(b, a)) std::swap(a, b);
  if (row_less(c, b)) std::swap(b, c);
  if (row_less(b, a)) std::swap(a, b);
  if (cross(a, b, c) < 0) std::swap(b, c);
  return {a, b, c};
}

inline Configuration make_config(ConfigKind kind, std::vector<Point> vertices,
                                 const Window& w) {
  Configuration cfg;
  cfg.kind = kind;
  cfg.doubled_area =
      vertices.size() == 3 && kind == ConfigKind::RainbowAp3
          ? 0
          : doubled_area(std::span<const Point>(vertices.data(), vertices.size()));
  cfg.colors.reserve(vertices.size());
  for (const Point& p : vertices) cfg.colors.push_back(w.at(p));
  cfg.vertices = std::move(vertices);
  return cfg;
}

inline int rainbow_required(RainbowMode mode, int palette, int n_points) {
  return mode == RainbowMode::Strict ? n_points
                                     : std::min(palette, n_points);
}

}  // namespace detail

// Axis-parallel rectangles of geometric area exactly `area` whose four
// vertices share a color. Witness order: bottom row y, then left column x,
// then width ascending over the factor pairs of `area`.
inline SearchReport find_mono_rects(const Window& w, std::int64_t area,
                                    const SearchOptions& opts = {}) {
  if (area < 1) throw std::invalid_argument("find_mono_rects: area must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<int, int>> shapes;  // (width, height), width ascending
  for (std::int64_t wd = 1; wd <= area && wd < w.width(); ++wd)
    if (area % wd == 0 && area / wd < w.height())
      shapes.emplace_back(static_cast<int>(wd), static_cast<int>(area / wd));

  auto chunks = run_chunked<detail::ChunkHits>(
      w.height(), opts.jobs, [&](int y) {
        detail::ChunkHits hits;
        for (int x = 0; x < w.width(); ++x) {
          for (auto [wd, ht] : shapes) {
            if (x + wd >= w.width() || y + ht >= w.height()) continue;
            const Color c = w.at_local(x, y);
            if (w.at_local(x + wd, y) != c || w.at_local(x, y + ht) != c ||
                w.at_local(x + wd, y + ht) != c)
              continue;
            ++hits.count;
            if (static_cast<long long>(hits.witnesses.size()) < opts.limit) {
              hits.witnesses.push_back(detail::make_config(
                  ConfigKind::MonoRect,
                  {w.to_absolute(x, y), w.to_absolute(x + wd, y),
                   w.to_absolute(x + wd, y + ht), w.to_absolute(x, y + ht)},
                  w));
            }
          }
        }
        return hits;
      });

  return detail::merge_chunks("mono-rect area=" + std::to_string(area),
                              std::move(chunks), opts.limit, true, start);
}

// Triangles of the requested doubled area that are rainbow under `mode`.
//
// Two sweeps are available. The full sweep visits every vertex triple and is
// exhaustive; it is used automatically for windows of at most
// kFullTriangleSweepMaxPoints points. The fast path only considers triangles
// with a horizontal base (two vertices on one row, apex on another row),
// which is the shape the quadratic-cost sweep can afford on large windows;
// its report is marked non-exhaustive since triangles whose vertices sit on
// three distinct rows are invisible to it.
inline SearchReport find_rainbow_triangles(const Window& w, std::int64_t target,
                                           RainbowMode mode,
                                           const SearchOptions& opts = {}) {
  if (target < 1)
    throw std::invalid_argument("find_rainbow_triangles: target must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const long long n_points =
      static_cast<long long>(w.width()) * w.height();
  const bool full =
      opts.sweep == TriangleSweep::Full ||
      (opts.sweep == TriangleSweep::Auto &&
       n_points <= kFullTriangleSweepMaxPoints);
  const int need = detail::rainbow_required(mode, w.palette(), 3);
  const std::string query =
      std::string("rainbow-triangle doubled-area=") + std::to_string(target) +
      (mode == RainbowMode::Strict ? " strict" : " canonical") +
      (full ? " full-sweep" : " fast-path");

  if (full) {
    // Points in row-major order; triples (i, j, k) with i < j < k are
    // visited lexicographically.
    const int n = static_cast<int>(n_points);
    std::vector<std::int32_t> px(n), py(n);
    std::vector<Color> pc(n);
    for (int iy = 0, p = 0; iy < w.height(); ++iy)
      for (int ix = 0; ix < w.width(); ++ix, ++p) {
        px[p] = ix;
        py[p] = iy;
        pc[p] = w.at_local(ix, iy);
      }

    auto chunks = run_chunked<detail::ChunkHits>(n, opts.jobs, [&](int i) {
      detail::ChunkHits hits;
      const std::int64_t xi = px[i], yi = py[i];
      const Color ci = pc[i];
      for (int j = i + 1; j < n; ++j) {
        const Color cj = pc[j];
        if (need == 3 && cj == ci) continue;
        const std::int64_t dxj = px[j] - xi, dyj = py[j] - yi;
        for (int k = j + 1; k < n; ++k) {
          const std::int64_t s =
              dxj * (py[k] - yi) - (px[k] - xi) * dyj;
          if (s != target && s != -target) continue;
          const Color ck = pc[k];
          int distinct = 1 + (cj != ci) +
                         (ck != ci && ck != cj);
          if (distinct != need) continue;
          ++hits.count;
          if (static_cast<long long>(hits.witnesses.size()) < opts.limit) {
            const auto tri = detail::ccw_triangle(
                w.to_absolute(px[i], py[i]), w.to_absolute(px[j], py[j]),
                w.to_absolute(px[k], py[k]));
            hits.witnesses.push_back(detail::make_config(
                ConfigKind::RainbowTriangle, {tri[0], tri[1], tri[2]}, w));
          }
        }
      }
      return hits;
    });
    return detail::merge_chunks(query, std::move(chunks), opts.limit, true,
                                start);
  }

  // Horizontal-base fast path: base length L must divide the target, apex
  // sits on the row at distance target / L, at any column.
  std::vector<int> lengths;
  for (std::int64_t len = 1; len < w.width(); ++len)
    if (target % len == 0 && target / len < w.height()) lengths.push_back(static_cast<int>(len));

  auto chunks = run_chunked<detail::ChunkHits>(w.height(), opts.jobs, [&](int y) {
    detail::ChunkHits hits;
    for (int x1 = 0; x1 < w.width(); ++x1) {
      for (int len : lengths) {
        if (x1 + len >= w.width()) break;
        const Color c1 = w.at_local(x1, y);
        const Color c2 = w.at_local(x1 + len, y);
        if (need == 3 && c1 == c2) continue;
        const int dy = static_cast<int>(target / len);
        for (int ay : {y - dy, y + dy}) {
          if (ay < 0 || ay >= w.height()) continue;
          for (int ax = 0; ax < w.width(); ++ax) {
            const Color ca = w.at_local(ax, ay);
            int distinct = 1 + (c2 != c1) + (ca != c1 && ca != c2);
            if (distinct != need) continue;
            ++hits.count;
            if (static_cast<long long>(hits.witnesses.size()) < opts.limit) {
              const auto tri = detail::ccw_triangle(w.to_absolute(x1, y),
                                                    w.to_absolute(x1 + len, y),
                                                    w.to_absolute(ax, ay));
              hits.witnesses.push_back(detail::make_config(
                  ConfigKind::RainbowTriangle, {tri[0], tri[1], tri[2]}, w));
            }
          }
        }
      }
    }
    return hits;
  });
  return detail::merge_chunks(query, std::move(chunks), opts.limit, false,
                              start);
}

// All rainbow 3-term progressions inside the horizontal span [x_begin,
// x_end) on the given row, as (offset, difference, colors) triples relative
// to x_begin. Triples come out ordered by offset, then difference.
inline std::vector<Ap3Triple> find_rainbow_ap3(const Window& w,
                                               std::int64_t row_y,
                                               std::int64_t x_begin,
                                               std::int64_t x_end) {
  const std::int64_t n = x_end - x_begin;
  if (n < 3)
    throw std::invalid_argument("find_rainbow_ap3: span must hold >= 3 points");
  if (!w.contains(Point{x_begin, row_y}) ||
      !w.contains(Point{x_end - 1, row_y}))
    throw std::out_of_range("find_rainbow_ap3: span outside window");

  std::vector<Ap3Triple> out;
  for (std::int64_t x = 0; x + 2 <= n - 1; ++x) {
    for (std::int64_t d = 1; x + 2 * d <= n - 1; ++d) {
      const Color a = w.at(Point{x_begin + x, row_y});
      const Color b = w.at(Point{x_begin + x + d, row_y});
      const Color c = w.at(Point{x_begin + x + 2 * d, row_y});
      if (a != b && b != c && a != c)
        out.push_back(Ap3Triple{static_cast<int>(x), static_cast<int>(d),
                                {a, b, c}});
    }
  }
  return out;
}

inline Configuration ap3_configuration(const Ap3Triple& t, std::int64_t row_y,
                                       std::int64_t x_begin, const Window& w) {
  return detail::make_config(ConfigKind::RainbowAp3,
                             {Point{x_begin + t.x, row_y},
                              Point{x_begin + t.x + t.d, row_y},
                              Point{x_begin + t.x + 2 * t.d, row_y}},
                             w);
}

// Quadrilaterals with both parallel sides horizontal, on two distinct rows.
// MonoParallelogramH: equal side lengths, all four vertices one color.
// RainbowTrapezoidH: unequal side lengths; Strict mode asks for at least 3
// distinct colors among the four vertices, Canonical for min(4, palette).
// The doubled area of such a shape is (bottom length + top length) * height.
// Witness order: bottom row, then top row, then bottom-left x, then bottom
// length, then top-left x.
inline SearchReport find_h_quads(const Window& w, std::int64_t target,
                                 ConfigKind kind, RainbowMode mode,
                                 const SearchOptions& opts = {}) {
  const bool para = kind == ConfigKind::MonoParallelogramH;
  if (!para && kind != ConfigKind::RainbowTrapezoidH)
    throw std::invalid_argument("find_h_quads: kind must be a horizontal quad");
  if (para && (target < 2 || target % 2 != 0))
    throw std::invalid_argument(
        "find_h_quads: parallelogram doubled area must be even and >= 2");
  if (!para && target < 1)
    throw std::invalid_argument("find_h_quads: target must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  const std::string query = std::string(kind_name(kind)) +
                            " doubled-area=" + std::to_string(target);

  auto chunks = run_chunked<detail::ChunkHits>(w.height(), opts.jobs, [&](int y1) {
    detail::ChunkHits hits;
    for (int y2 = y1 + 1; y2 < w.height(); ++y2) {
      const std::int64_t dy = y2 - y1;
      if (target % dy != 0) continue;
      const std::int64_t side_sum = target / dy;  // bottom + top length
      for (int x1 = 0; x1 < w.width(); ++x1) {
        for (std::int64_t len1 = 1; len1 < side_sum; ++len1) {
          const std::int64_t len2 = side_sum - len1;
          if (para && len1 != len2) continue;
          if (!para && len1 == len2) continue;
          if (x1 + len1 >= w.width() || len2 >= w.width()) continue;
          const Color c1 = w.at_local(x1, y1);
          const Color c2 = w.at_local(x1 + static_cast<int>(len1), y1);
          if (para && c1 != c2) continue;
          for (int x2 = 0; x2 + len2 < w.width(); ++x2) {
            const Color c3 = w.at_local(x2 + static_cast<int>(len2), y2);
            const Color c4 = w.at_local(x2, y2);
            bool ok;
            if (para) {
              ok = c3 == c1 && c4 == c1;
            } else {
              int distinct = 1 + (c2 != c1) + (c3 != c1 && c3 != c2) +
                             (c4 != c1 && c4 != c2 && c4 != c3);
              ok = mode == RainbowMode::Strict
                       ? distinct >= 3
                       : distinct == detail::rainbow_required(
                                         RainbowMode::Canonical, w.palette(), 4);
            }
            if (!ok) continue;
            ++hits.count;
            if (static_cast<long long>(hits.witnesses.size()) < opts.limit) {
              hits.witnesses.push_back(detail::make_config(
                  kind,
                  {w.to_absolute(x1, y1),
                   w.to_absolute(x1 + static_cast<int>(len1), y1),
                   w.to_absolute(x2 + static_cast<int>(len2), y2),
                   w.to_absolute(x2, y2)},
                  w));
            }
          }
        }
      }
    }
    return hits;
  });
  return detail::merge_chunks(query, std::move(chunks), opts.limit, true,
                              start);
}

// For every axis-parallel rectangle of geometric area `area` in the window,
// count how many distinct colors its four vertices carry. Index c of the
// result holds the number of rectangles with exactly c distinct colors.
inline std::array<long long, 5> rect_color_histogram(const Window& w,
                                                     std::int64_t area,
                                                     int jobs = 1) {
  if (area < 1)
    throw std::invalid_argument("rect_color_histogram: area must be >= 1");
  std::vector<std::pair<int, int>> shapes;
  for (std::int64_t wd = 1; wd <= area && wd < w.width(); ++wd)
    if (area % wd == 0 && area / wd < w.height())
      shapes.emplace_back(static_cast<int>(wd), static_cast<int>(area / wd));

  auto chunks = run_chunked<std::array<long long, 5>>(
      w.height(), jobs, [&](int y) {
        std::array<long long, 5> hist{};
        for (int x = 0; x < w.width(); ++x) {
          for (auto [wd, ht] : shapes) {
            if (x + wd >= w.width() || y + ht >= w.height()) continue;
            const Color a = w.at_local(x, y);
            const Color b = w.at_local(x + wd, y);
            const Color c = w.at_local(x + wd, y + ht);
            const Color d = w.at_local(x, y + ht);
            const int distinct = 1 + (b != a) + (c != a && c != b) +
                                 (d != a && d != b && d != c);
            ++hist[distinct];
          }
        }
        return hist;
      });

  std::array<long long, 5> total{};
  for (const auto& h : chunks)
    for (int i = 0; i < 5; ++i) total[i] += h[i];
  return total;
}

// Re-checks a configuration against a window: vertices in bounds, stored
// colors and doubled area consistent with the window and the vertex list,
// and the kind's shape and color predicate satisfied. Tests use this to
// confirm that every reported witness is real.
inline bool revalidate(const Configuration& cfg, const Window& w,
                       RainbowMode mode = RainbowMode::Strict) {
  for (const Point& p : cfg.vertices)
    if (!w.contains(p)) return false;
  if (cfg.colors.size() != cfg.vertices.size()) return false;
  for (std::size_t i = 0; i < cfg.vertices.size(); ++i)
    if (w.at(cfg.vertices[i]) != cfg.colors[i]) return false;

  const auto span =
      std::span<const Point>(cfg.vertices.data(), cfg.vertices.size());
  switch (cfg.kind) {
    case ConfigKind::MonoRect: {
      if (cfg.vertices.size() != 4) return false;
      if (doubled_area(span) != cfg.doubled_area || cfg.doubled_area <= 0)
        return false;
      const Point a = cfg.vertices[0], b = cfg.vertices[1],
                  c = cfg.vertices[2], d = cfg.vertices[3];
      if (a.y != b.y || c.y != d.y || a.y == c.y) return false;
      if (a.x != d.x || b.x != c.x || a.x == b.x) return false;
      return is_monochromatic(span, w);
    }
    case ConfigKind::RainbowTriangle:
      if (cfg.vertices.size() != 3) return false;
      if (doubled_area(span) != cfg.doubled_area || cfg.doubled_area <= 0)
        return false;
      return is_rainbow(span, w, mode);
    case ConfigKind::MonoParallelogramH:
    case ConfigKind::RainbowTrapezoidH: {
      if (cfg.vertices.size() != 4) return false;
      if (doubled_area(span) != cfg.doubled_area || cfg.doubled_area <= 0)
        return false;
      const Point a = cfg.vertices[0], b = cfg.vertices[1],
                  c = cfg.vertices[2], d = cfg.vertices[3];
      if (a.y != b.y || c.y != d.y || a.y == c.y) return false;
      const std::int64_t bottom = b.x - a.x, top = c.x - d.x;
      if (bottom < 1 || top < 1) return false;
      if (cfg.kind == ConfigKind::MonoParallelogramH)
        return bottom == top && is_monochromatic(span, w);
      if (bottom == top) return false;
      const int distinct = distinct_color_count(span, w);
      return mode == RainbowMode::Strict
                 ? distinct >= 3
                 : distinct == std::min(w.palette(), 4);
    }
    case ConfigKind::RainbowAp3: {
      if (cfg.vertices.size() != 3 || cfg.doubled_area != 0) return false;
      const Point a = cfg.vertices[0], b = cfg.vertices[1],
                  c = cfg.vertices[2];
      if (a.y != b.y || b.y != c.y) return false;
      const std::int64_t d = b.x - a.x;
      if (d < 1 || c.x - b.x != d) return false;
      return distinct_color_count(span, w) == 3;
    }
  }
  return false;
}

}  // namespace gallai
