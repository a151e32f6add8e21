// Executable checks built on the searches: the rainbow-triangle-or-mono-rect
// dichotomy on a window, the rainbow AP3 threshold for 3-colorings of [N]
// (closed formula plus exhaustive oracle), small van der Waerden numbers by
// backtracking, the segment-triple machinery (chi0 / chi1) and the canonical
// witness engine that turns a shared triple on three segments into a
// monochromatic parallelogram or a rainbow trapezoid, and the three
// constructive proposition searches.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gallai/colorings.hpp"
#include "gallai/core.hpp"
#include "gallai/parallel.hpp"
#include "gallai/search.hpp"

namespace gallai {

// Thrown when an enumeration would exceed its stated budget; callers may
// raise the cap explicitly.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Rainbow AP3 threshold for 3-colorings of [N].

// Smallest integer m strictly above the closed-form bound: the bound is
// floor((n + 2) / 6) when n is not a multiple of 6 and (n + 4) / 6 when it
// is. The exhaustive oracle below is authoritative where the two disagree.
inline int af_formula_threshold(int n) {
  if (n < 6)
    throw std::invalid_argument("af_formula_threshold: n must be >= 6");
  return (n % 6 != 0) ? (n + 2) / 6 + 1 : (n + 4) / 6 + 1;
}

struct AfResult {
  int n = 0;
  int formula_threshold = 0;
  // Minimal m such that every 3-coloring of [n] whose color classes all have
  // size >= m contains a rainbow 3-term progression.
  int brute_threshold = 0;
  // A rainbow-AP3-free coloring with min class size brute_threshold - 1.
  std::vector<Color> extremal_witness;
  bool agree = false;
};

namespace detail {

// True if position p completes a rainbow 3-term progression in c[0..p].
inline bool completes_rainbow_ap3(const std::vector<Color>& c, int p) {
  for (int d = 1; 2 * d <= p; ++d) {
    const Color a = c[p - 2 * d], b = c[p - d], q = c[p];
    if (a != b && b != q && a != q) return true;
  }
  return false;
}

struct AfBest {
  int min_class = -1;
  std::vector<Color> witness;
};

// Completes c[depth..n) over all canonical assignments (colors introduced in
// increasing order, rainbow-free prefixes only); first coloring attaining a
// new best min class wins.
inline void af_dfs(std::vector<Color>& c, int depth, int n,
                   std::array<int, 3>& counts, int maxused, AfBest& best) {
  if (depth == n) {
    const int m = std::min({counts[0], counts[1], counts[2]});
    if (m > best.min_class) {
      best.min_class = m;
      best.witness = c;
    }
    return;
  }
  const int top = std::min(maxused + 1, 2);
  for (Color q = 0; q <= top; ++q) {
    c[depth] = q;
    if (completes_rainbow_ap3(c, depth)) continue;
    ++counts[q];
    af_dfs(c, depth + 1, n, counts, std::max(maxused, q), best);
    --counts[q];
  }
}

struct AfPrefix {
  std::vector<Color> colors;
  std::array<int, 3> counts{};
  int maxused = 0;
};

inline void collect_af_prefixes(std::vector<Color>& c, int depth, int goal,
                                std::array<int, 3>& counts, int maxused,
                                std::vector<AfPrefix>& out) {
  if (depth == goal) {
    out.push_back(AfPrefix{c, counts, maxused});
    return;
  }
  const int top = std::min(maxused + 1, 2);
  for (Color q = 0; q <= top; ++q) {
    c[depth] = q;
    if (completes_rainbow_ap3(c, depth)) continue;
    ++counts[q];
    collect_af_prefixes(c, depth + 1, goal, counts, std::max(maxused, q), out);
    --counts[q];
  }
}

}  // namespace detail

// Exhaustive determination of the threshold, over canonical representatives
// of the 3-colorings of [n] up to color permutation (position 1 is pinned to
// color 0 and the other two colors are introduced in order, a factor-6
// reduction). Workers take disjoint canonical prefixes; the prefix order
// makes the reported witness independent of the worker count.
inline AfResult af_brute_force(int n, int jobs = 1, int max_n = 16) {
  if (n < 6) throw std::invalid_argument("af_brute_force: n must be >= 6");
  if (n > max_n)
    throw BudgetExceeded("af_brute_force: n = " + std::to_string(n) +
                         " exceeds the enumeration budget " +
                         std::to_string(max_n));

  const int prefix_len = std::min(n, 7);
  std::vector<detail::AfPrefix> prefixes;
  {
    std::vector<Color> c(n, 0);
    std::array<int, 3> counts{};
    // position 1 pinned to color 0
    counts[0] = 1;
    detail::collect_af_prefixes(c, 1, prefix_len, counts, 0, prefixes);
  }

  auto chunks = run_chunked<detail::AfBest>(
      static_cast<int>(prefixes.size()), jobs, [&](int idx) {
        detail::AfBest best;
        detail::AfPrefix pre = prefixes[idx];
        pre.colors.resize(n, 0);
        detail::af_dfs(pre.colors, prefix_len, n, pre.counts, pre.maxused,
                       best);
        return best;
      });

  detail::AfBest best;
  for (const auto& c : chunks)
    if (c.min_class > best.min_class) best = c;

  AfResult result;
  result.n = n;
  result.formula_threshold = af_formula_threshold(n);
  result.brute_threshold = best.min_class + 1;
  result.extremal_witness = std::move(best.witness);
  result.agree = result.brute_threshold == result.formula_threshold;
  return result;
}

// ---------------------------------------------------------------------------
// van der Waerden numbers by backtracking.

namespace detail {

inline bool completes_mono_ap(const std::vector<Color>& c, int p, int k) {
  for (int d = 1; p - (k - 1) * d >= 0; ++d) {
    bool mono = true;
    for (int i = 1; i < k && mono; ++i) mono = c[p - i * d] == c[p];
    if (mono) return true;
  }
  return false;
}

// Deepest prefix length reachable without a monochromatic k-term
// progression, capped.
inline void vdw_dfs(std::vector<Color>& c, int depth, int cap, int k, int r,
                    int maxused, int& deepest) {
  deepest = std::max(deepest, depth);
  if (depth == cap) return;
  const int top = std::min(maxused + 1, r - 1);
  for (Color q = 0; q <= top; ++q) {
    c[depth] = q;
    if (completes_mono_ap(c, depth, k)) continue;
    vdw_dfs(c, depth + 1, cap, k, r, std::max(maxused, q), deepest);
    if (deepest == cap) return;
  }
}

struct VdwPrefix {
  std::vector<Color> colors;
  int maxused = 0;
};

inline void collect_vdw_prefixes(std::vector<Color>& c, int depth, int goal,
                                 int k, int r, int maxused,
                                 std::vector<VdwPrefix>& out, int& deepest) {
  deepest = std::max(deepest, depth);
  if (depth == goal) {
    out.push_back(VdwPrefix{std::vector<Color>(c.begin(), c.begin() + goal),
                            maxused});
    return;
  }
  const int top = std::min(maxused + 1, r - 1);
  for (Color q = 0; q <= top; ++q) {
    c[depth] = q;
    if (completes_mono_ap(c, depth, k)) continue;
    collect_vdw_prefixes(c, depth + 1, goal, k, r, std::max(maxused, q), out,
                         deepest);
  }
}

}  // namespace detail

// Smallest n <= cap such that every r-coloring of [n] contains a
// monochromatic k-term progression, or absent if every n up to cap still
// admits a free coloring. Recomputed by search, no table. Color classes are
// interchangeable, so only canonical colorings (colors introduced in order)
// are explored.
inline std::optional<int> vdw_number(int k, int r, int cap, int jobs = 1) {
  if (k < 3) throw std::invalid_argument("vdw_number: k must be >= 3");
  if (r < 2) throw std::invalid_argument("vdw_number: r must be >= 2");
  if (cap < k) throw std::invalid_argument("vdw_number: cap must be >= k");

  const int prefix_len = std::min(cap, 8);
  std::vector<detail::VdwPrefix> prefixes;
  int deepest = 0;
  {
    std::vector<Color> c(cap, 0);
    detail::collect_vdw_prefixes(c, 0, prefix_len, k, r, -1, prefixes,
                                 deepest);
  }

  auto chunks = run_chunked<int>(
      static_cast<int>(prefixes.size()), jobs, [&](int idx) {
        std::vector<Color> c = prefixes[idx].colors;
        c.resize(cap, 0);
        int chunk_deepest = 0;
        detail::vdw_dfs(c, prefix_len, cap, k, r, prefixes[idx].maxused,
                        chunk_deepest);
        return chunk_deepest;
      });
  for (int d : chunks) deepest = std::max(deepest, d);

  if (deepest == cap) return std::nullopt;
  return deepest + 1;
}

// ---------------------------------------------------------------------------
// Segment triples (chi0 / chi1) and the canonical witness engine.

// For each aligned length-n segment of each row, the lexicographically
// smallest rainbow AP3 triple, or absent when the segment has none.
struct Chi0Grid {
  int n = 0;
  int segments = 0;  // per row
  int rows = 0;
  std::vector<std::optional<Ap3Triple>> cells;  // [row * segments + segment]

  const std::optional<Ap3Triple>& at(int segment, int row) const {
    if (segment < 0 || segment >= segments || row < 0 || row >= rows)
      throw std::out_of_range("Chi0Grid::at: index outside grid");
    return cells[static_cast<std::size_t>(row) * segments + segment];
  }
};

inline Chi0Grid build_chi0(const Window& w, int n) {
  if (n < 3) throw std::invalid_argument("build_chi0: n must be >= 3");
  if (w.width() % n != 0)
    throw std::invalid_argument("build_chi0: window width must be a multiple of n");
  Chi0Grid grid;
  grid.n = n;
  grid.segments = w.width() / n;
  grid.rows = w.height();
  grid.cells.resize(static_cast<std::size_t>(grid.segments) * grid.rows);
  for (int row = 0; row < grid.rows; ++row) {
    const std::int64_t y = w.origin().y + row;
    for (int seg = 0; seg < grid.segments; ++seg) {
      const std::int64_t a = w.origin().x + static_cast<std::int64_t>(seg) * n;
      auto triples = find_rainbow_ap3(w, y, a, a + n);
      if (!triples.empty())
        grid.cells[static_cast<std::size_t>(row) * grid.segments + seg] =
            triples.front();
    }
  }
  return grid;
}

// The set of triples appearing on one row of the grid (absents ignored).
inline std::set<Ap3Triple> build_chi1(const Chi0Grid& grid, int row) {
  if (row < 0 || row >= grid.rows)
    throw std::out_of_range("build_chi1: row outside grid");
  std::set<Ap3Triple> out;
  for (int seg = 0; seg < grid.segments; ++seg) {
    const auto& cell = grid.at(seg, row);
    if (cell) out.insert(*cell);
  }
  return out;
}

// A shared triple on segments i < j of row u and segment k of row u2, and
// the quadrilateral it forces. With the triple's points named a1..a3 (in
// segment i), b1..b3 (segment j), g1..g3 (segment k) and z = g2 + (b2 - a2):
// if the coloring gives z the triple's middle color, {a2, b2, g2, z} is a
// monochromatic parallelogram; otherwise {a1, b2, g3, z} is a trapezoid with
// at least 3 distinct colors. Both have doubled area 2 * (j - i) * n *
// |u2 - u|.
struct CanonicalWitness {
  int n = 0;
  std::int64_t row_u = 0, row_u2 = 0;
  int seg_i = 0, seg_j = 0, seg_k = 0;
  Ap3Triple triple;
  std::array<Point, 3> alpha{}, beta{}, gamma{};
  Point z{};
  Configuration outcome;
  std::int64_t doubled_area = 0;
};

namespace detail {

// CCW order for four points, two per row, left point of the lower row first.
inline std::vector<Point> ccw_two_rows(Point low_l, Point low_r, Point high_l,
                                       Point high_r) {
  if (low_l.y > high_l.y) {
    std::swap(low_l, high_l);
    std::swap(low_r, high_r);
  }
  return {low_l, low_r, high_r, high_l};
}

}  // namespace detail

// Scans rows 0..y_rows-1 and segments 0..x_segments-1 of the rule, looking
// for a triple shared by two segments of one row and one segment of another.
// Candidates are ordered by (u, u2, i, j, k) and the first one found is
// returned, so the result does not depend on the worker count. Returns
// absent when the budgets hold no candidate.
inline std::optional<CanonicalWitness> canonical_witness_search(
    const ColoringRule& rule, int n, int x_segments, int y_rows,
    int jobs = 1) {
  if (n < 6 || n % 3 != 0)
    throw std::invalid_argument(
        "canonical_witness_search: n must be >= 6 and divisible by 3");
  if (x_segments < 2 || y_rows < 2)
    throw std::invalid_argument(
        "canonical_witness_search: budgets must be >= 2");

  const Window w =
      render(rule, Point{0, 0}, x_segments * n, y_rows);
  const Chi0Grid chi0 = build_chi0(w, n);

  // segment lists per triple per row, ascending
  std::vector<std::map<Ap3Triple, std::vector<int>>> by_row(y_rows);
  for (int row = 0; row < y_rows; ++row)
    for (int seg = 0; seg < x_segments; ++seg) {
      const auto& cell = chi0.at(seg, row);
      if (cell) by_row[row][*cell].push_back(seg);
    }

  const int n_pairs = y_rows * (y_rows - 1);
  auto chunks = run_chunked<std::optional<CanonicalWitness>>(
      n_pairs, jobs, [&](int pair) -> std::optional<CanonicalWitness> {
        const int u = pair / (y_rows - 1);
        const int rest = pair % (y_rows - 1);
        const int u2 = rest < u ? rest : rest + 1;
        const auto& here = by_row[u];
        const auto& there = by_row[u2];
        for (int i = 0; i < x_segments; ++i) {
          const auto& cell = chi0.at(i, u);
          if (!cell) continue;
          const auto other = there.find(*cell);
          if (other == there.end()) continue;
          const auto& mates = here.at(*cell);
          const auto next = std::upper_bound(mates.begin(), mates.end(), i);
          if (next == mates.end()) continue;
          const int j = *next;
          const int k = other->second.front();

          const Ap3Triple t = *cell;
          CanonicalWitness cw;
          cw.n = n;
          cw.row_u = u;
          cw.row_u2 = u2;
          cw.seg_i = i;
          cw.seg_j = j;
          cw.seg_k = k;
          cw.triple = t;
          auto triple_points = [&](int seg, std::int64_t y) {
            const std::int64_t base = static_cast<std::int64_t>(seg) * n + t.x;
            return std::array<Point, 3>{Point{base, y}, Point{base + t.d, y},
                                        Point{base + 2 * t.d, y}};
          };
          cw.alpha = triple_points(i, u);
          cw.beta = triple_points(j, u);
          cw.gamma = triple_points(k, u2);
          cw.z = Point{cw.gamma[1].x + (cw.beta[1].x - cw.alpha[1].x),
                       cw.gamma[1].y};
          cw.doubled_area = 2 * static_cast<std::int64_t>(j - i) * n *
                            (u2 > u ? u2 - u : u - u2);

          const Color cz = rule.at(cw.z);
          std::vector<Point> verts;
          if (cz == t.sigma[1]) {
            cw.outcome.kind = ConfigKind::MonoParallelogramH;
            verts = detail::ccw_two_rows(cw.alpha[1], cw.beta[1], cw.gamma[1],
                                         cw.z);
          } else {
            cw.outcome.kind = ConfigKind::RainbowTrapezoidH;
            verts = detail::ccw_two_rows(cw.alpha[0], cw.beta[1], cw.gamma[2],
                                         cw.z);
          }
          cw.outcome.doubled_area = doubled_area(
              std::span<const Point>(verts.data(), verts.size()));
          for (const Point& p : verts)
            cw.outcome.colors.push_back(rule.at(p));
          cw.outcome.vertices = std::move(verts);
          return cw;
        }
        return std::nullopt;
      });

  for (auto& c : chunks)
    if (c) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Window dichotomy: rainbow triangle of doubled area 1, or monochromatic
// rectangles of every requested even area.

struct DichotomyReport {
  std::optional<Configuration> found_rainbow_triangle;
  std::map<std::int64_t, std::optional<Configuration>> mono_rect_areas_found;
  bool satisfied = false;
  // whether the triangle sweep covered every triangle of the window
  bool exhaustive = false;
  // "window-scoped" on a false verdict: absence in a finite window says
  // nothing about the full plane
  std::string caveat;
};

inline DichotomyReport verify_dichotomy(const Window& w,
                                        const std::vector<std::int64_t>& even_areas,
                                        const SearchOptions& opts = {}) {
  if (w.palette() < 3)
    throw std::invalid_argument("verify_dichotomy: needs a palette of >= 3 colors");
  if (even_areas.empty())
    throw std::invalid_argument("verify_dichotomy: area list must be nonempty");
  for (std::int64_t a : even_areas)
    if (a < 2 || a % 2 != 0)
      throw std::invalid_argument(
          "verify_dichotomy: areas must be positive even integers");

  SearchOptions one = opts;
  one.limit = 1;
  DichotomyReport report;
  const SearchReport tri =
      find_rainbow_triangles(w, 1, RainbowMode::Strict, one);
  report.exhaustive = tri.exhaustive;
  if (!tri.witnesses.empty()) report.found_rainbow_triangle = tri.witnesses.front();

  bool all_areas = true;
  for (std::int64_t a : even_areas) {
    const SearchReport rects = find_mono_rects(w, a, one);
    if (rects.witnesses.empty()) {
      report.mono_rect_areas_found[a] = std::nullopt;
      all_areas = false;
    } else {
      report.mono_rect_areas_found[a] = rects.witnesses.front();
    }
  }
  report.satisfied = report.found_rainbow_triangle.has_value() || all_areas;
  if (!report.satisfied) report.caveat = "window-scoped";
  return report;
}

// ---------------------------------------------------------------------------
// Constructive proposition searches. Each returns the configurations it
// builds, or an empty list with a machine-readable reason for the absence.

struct PropResult {
  std::vector<Configuration> configurations;
  std::string reason;  // nonempty iff nothing was found

  bool found() const { return !configurations.empty(); }
};

namespace detail {

inline void require_row(const Window& w, std::int64_t y, const char* who) {
  if (y < w.origin().y || y >= w.origin().y + w.height())
    throw std::invalid_argument(std::string(who) + ": required row " +
                                std::to_string(y) + " not inside window");
}

}  // namespace detail

// An adjacent pair of differently colored points on the row y = 0 plus a
// third-colored point on the row y = 2 span a rainbow triangle of doubled
// area 2. First qualifying pair (by x), then first qualifying apex.
inline PropResult prop_triangle_between_lines(const Window& w) {
  if (w.palette() < 3)
    throw std::invalid_argument(
        "prop_triangle_between_lines: needs a palette of >= 3 colors");
  detail::require_row(w, 0, "prop_triangle_between_lines");
  detail::require_row(w, 2, "prop_triangle_between_lines");

  PropResult result;
  bool saw_pair = false;
  const std::int64_t x0 = w.origin().x;
  for (std::int64_t x = x0; x + 1 < x0 + w.width(); ++x) {
    const Color a = w.at(Point{x, 0});
    const Color b = w.at(Point{x + 1, 0});
    if (a == b) continue;
    saw_pair = true;
    for (std::int64_t xa = x0; xa < x0 + w.width(); ++xa) {
      const Color c = w.at(Point{xa, 2});
      if (c == a || c == b) continue;
      const auto tri =
          detail::ccw_triangle(Point{x, 0}, Point{x + 1, 0}, Point{xa, 2});
      result.configurations.push_back(detail::make_config(
          ConfigKind::RainbowTriangle, {tri[0], tri[1], tri[2]}, w));
      return result;
    }
  }
  result.reason = saw_pair ? "no-third-color" : "no-adjacent-pair";
  return result;
}

// From the first rainbow AP3 a, b, c on row 0 (gap s) and third-colored
// points d (apart from the colors of a, b) and e (apart from b, c) on row
// 2A/s, the triangles abd and bce are both rainbow with doubled area 2A.
inline PropResult prop_double_triangles(const Window& w, std::int64_t a) {
  if (a < 1)
    throw std::invalid_argument("prop_double_triangles: area parameter must be >= 1");
  if (w.palette() < 3)
    throw std::invalid_argument(
        "prop_double_triangles: needs a palette of >= 3 colors");
  detail::require_row(w, 0, "prop_double_triangles");

  PropResult result;
  const std::int64_t x0 = w.origin().x;
  const auto triples = find_rainbow_ap3(w, 0, x0, x0 + w.width());
  if (triples.empty()) {
    result.reason = "no-ap3";
    return result;
  }
  const Ap3Triple t = triples.front();
  const std::int64_t s = t.d;
  if ((2 * a) % s != 0) {
    result.reason = "divisibility";
    return result;
  }
  const std::int64_t row = 2 * a / s;
  if (row < w.origin().y || row >= w.origin().y + w.height()) {
    result.reason = "row-out-of-window";
    return result;
  }

  const Point pa{x0 + t.x, 0}, pb{x0 + t.x + s, 0}, pc{x0 + t.x + 2 * s, 0};
  const Color ca = t.sigma[0], cb = t.sigma[1], cc = t.sigma[2];
  std::optional<Point> pd, pe;
  for (std::int64_t x = x0; x < x0 + w.width(); ++x) {
    const Color c = w.at(Point{x, row});
    if (!pd && c != ca && c != cb) pd = Point{x, row};
    if (!pe && c != cb && c != cc) pe = Point{x, row};
    if (pd && pe) break;
  }
  if (!pd || !pe) {
    result.reason = "no-third-color";
    return result;
  }
  for (const auto& [p, q, apex] :
       {std::tuple{pa, pb, *pd}, std::tuple{pb, pc, *pe}}) {
    const auto tri = detail::ccw_triangle(p, q, apex);
    result.configurations.push_back(detail::make_config(
        ConfigKind::RainbowTriangle, {tri[0], tri[1], tri[2]}, w));
  }
  return result;
}

// From the first rainbow AP3 a, b, c on row 0 (gap d, colors c1, c2, c3) and
// the first distance-d pair e, f of distinct colors on row A/d with one
// color outside {c1, c2, c3}: a quadrilateral of 4 distinct colors. When the
// pair's other color is c2 the result is the trapezium acef (parallel sides
// 2d and d, doubled area 3A); otherwise it is a parallelogram, bcef or abef,
// of doubled area 2A. Both come out under the rainbow-trapezoid kind, the
// only horizontal-quad kind with a color predicate.
inline PropResult prop_para_or_trapezium(const Window& w, std::int64_t a) {
  if (a < 1)
    throw std::invalid_argument("prop_para_or_trapezium: area parameter must be >= 1");
  if (w.palette() < 4)
    throw std::invalid_argument(
        "prop_para_or_trapezium: needs a palette of >= 4 colors");
  detail::require_row(w, 0, "prop_para_or_trapezium");

  PropResult result;
  const std::int64_t x0 = w.origin().x;
  const auto triples = find_rainbow_ap3(w, 0, x0, x0 + w.width());
  if (triples.empty()) {
    result.reason = "no-ap3";
    return result;
  }
  const Ap3Triple t = triples.front();
  const std::int64_t d = t.d;
  if (a % d != 0) {
    result.reason = "divisibility";
    return result;
  }
  const std::int64_t row = a / d;
  if (row < w.origin().y || row >= w.origin().y + w.height()) {
    result.reason = "row-out-of-window";
    return result;
  }

  const Point pa{x0 + t.x, 0}, pb{x0 + t.x + d, 0}, pc{x0 + t.x + 2 * d, 0};
  const Color c1 = t.sigma[0], c2 = t.sigma[1], c3 = t.sigma[2];
  for (std::int64_t x = x0; x + d < x0 + w.width(); ++x) {
    const Point pe{x, row}, pf{x + d, row};
    const Color ce = w.at(pe), cf = w.at(pf);
    if (ce == cf) continue;
    const bool e_new = ce != c1 && ce != c2 && ce != c3;
    const bool f_new = cf != c1 && cf != c2 && cf != c3;
    if (!e_new && !f_new) continue;
    const Color other = e_new ? cf : ce;

    std::vector<Point> verts;
    if (other == c2) {
      verts = detail::ccw_two_rows(pa, pc, pe, pf);  // trapezium, sides 2d and d
    } else if (other == c3) {
      verts = detail::ccw_two_rows(pa, pb, pe, pf);  // parallelogram
    } else {
      verts = detail::ccw_two_rows(pb, pc, pe, pf);  // parallelogram
    }
    result.configurations.push_back(
        detail::make_config(ConfigKind::RainbowTrapezoidH, std::move(verts), w));
    return result;
  }
  result.reason = "no-fourth-color-pair";
  return result;
}

}  // namespace gallai
