#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <stdexcept>

#include "gallai/colorings.hpp"
#include "gallai/search.hpp"
#include "helpers.hpp"

using gallai::Color;
using gallai::ConfigKind;
using gallai::Configuration;
using gallai::Point;
using gallai::RainbowMode;
using gallai::SearchOptions;
using gallai::SearchReport;
using gallai::TriangleSweep;
using gallai::Window;

namespace {

Window striped_8x6() {
  return gallai::render(gallai::make_striped({0, 1, 2}, 3), {0, 0}, 8, 6);
}

Window d3(int width, int height) {
  return gallai::render(gallai::make_diagonal_d3(), {0, 0}, width, height);
}

long long naive_mono_rect_count(const Window& w, std::int64_t area) {
  long long count = 0;
  for (int y = 0; y < w.height(); ++y)
    for (int x = 0; x < w.width(); ++x)
      for (int wd = 1; x + wd < w.width(); ++wd) {
        if (area % wd != 0) continue;
        const std::int64_t ht = area / wd;
        if (y + ht >= w.height()) continue;
        const Color c = w.at_local(x, y);
        if (w.at_local(x + wd, y) == c &&
            w.at_local(x, y + static_cast<int>(ht)) == c &&
            w.at_local(x + wd, y + static_cast<int>(ht)) == c)
          ++count;
      }
  return count;
}

long long naive_triangle_count(const Window& w, std::int64_t target,
                               RainbowMode mode) {
  std::vector<Point> pts;
  for (int iy = 0; iy < w.height(); ++iy)
    for (int ix = 0; ix < w.width(); ++ix) pts.push_back(w.to_absolute(ix, iy));
  long long count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const std::int64_t s = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                               (pts[k].x - pts[i].x) * (pts[j].y - pts[i].y);
        if (s != target && s != -target) continue;
        const std::vector<Point> tri = {pts[i], pts[j], pts[k]};
        if (gallai::is_rainbow(tri, w, mode)) ++count;
      }
  return count;
}

std::vector<gallai::Ap3Triple> naive_ap3(const Window& w, std::int64_t row,
                                         std::int64_t x_begin,
                                         std::int64_t x_end) {
  std::vector<gallai::Ap3Triple> out;
  for (std::int64_t x1 = x_begin; x1 < x_end; ++x1)
    for (std::int64_t x3 = x1 + 2; x3 < x_end; x3 += 2) {
      const std::int64_t x2 = (x1 + x3) / 2;
      const Color a = w.at({x1, row});
      const Color b = w.at({x2, row});
      const Color c = w.at({x3, row});
      if (a != b && b != c && a != c)
        out.push_back({static_cast<int>(x1 - x_begin),
                       static_cast<int>(x2 - x1),
                       {a, b, c}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("mono rect search finds the striped period-3 rectangles") {
  const Window w = striped_8x6();
  const SearchReport r = gallai::find_mono_rects(w, 3);
  REQUIRE(r.query == "mono-rect area=3");
  REQUIRE(r.exhaustive);
  REQUIRE(r.total_count == 21);
  REQUIRE(r.witnesses.size() == 16);  // default limit
  const Configuration& first = r.witnesses.front();
  REQUIRE(first.kind == ConfigKind::MonoRect);
  REQUIRE(first.vertices ==
          std::vector<Point>{{0, 0}, {1, 0}, {1, 3}, {0, 3}});
  REQUIRE(first.colors == std::vector<Color>{0, 0, 0, 0});
  REQUIRE(first.doubled_area == 6);
  REQUIRE(r.witnesses[1].vertices ==
          std::vector<Point>{{1, 0}, {2, 0}, {2, 3}, {1, 3}});
  for (const Configuration& c : r.witnesses) REQUIRE(gallai::revalidate(c, w));

  // Areas whose row pairs never repeat a color have no witnesses.
  REQUIRE(gallai::find_mono_rects(w, 2).total_count == 0);
  REQUIRE(gallai::find_mono_rects(w, 4).total_count == 0);
}

TEST_CASE("mono rect limit truncates witnesses but not the count") {
  const Window w = Window::filled({0, 0}, 6, 6, 1, 0);
  SearchOptions opts;
  opts.limit = 3;
  const SearchReport r = gallai::find_mono_rects(w, 1, opts);
  REQUIRE(r.total_count == 25);
  REQUIRE(r.witnesses.size() == 3);
  REQUIRE(r.witnesses.front().vertices ==
          std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  REQUIRE_THROWS_AS(gallai::find_mono_rects(w, 0), std::invalid_argument);
}

TEST_CASE("mono rect counts agree with the quadruple loop oracle") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Window w = testutil::random_window(seed, 9 + seed % 4, 7, 2);
    for (std::int64_t area : {1, 2, 3, 4, 6}) {
      const SearchReport r = gallai::find_mono_rects(w, area);
      REQUIRE(r.total_count == naive_mono_rect_count(w, area));
      for (const Configuration& c : r.witnesses)
        REQUIRE(gallai::revalidate(c, w));
    }
  }
}

TEST_CASE("full triangle sweep on the diagonal coloring") {
  const Window w = d3(5, 5);
  const SearchReport r =
      gallai::find_rainbow_triangles(w, 1, RainbowMode::Strict);
  REQUIRE(r.query == "rainbow-triangle doubled-area=1 strict full-sweep");
  REQUIRE(r.exhaustive);
  REQUIRE(r.total_count == 88);
  const Configuration& first = r.witnesses.front();
  REQUIRE(first.kind == ConfigKind::RainbowTriangle);
  REQUIRE(first.vertices == std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
  REQUIRE(first.colors == std::vector<Color>{0, 2, 1});
  REQUIRE(first.doubled_area == 1);
  for (const Configuration& c : r.witnesses)
    REQUIRE(gallai::revalidate(c, w, RainbowMode::Strict));
  REQUIRE(r.total_count == naive_triangle_count(w, 1, RainbowMode::Strict));
}

TEST_CASE("column exception coloring has no strict unit triangles") {
  const Window w =
      gallai::render(gallai::make_column_exception(5, 4), {0, 0}, 10, 10);
  SearchOptions opts;
  opts.sweep = TriangleSweep::Full;
  const SearchReport r =
      gallai::find_rainbow_triangles(w, 1, RainbowMode::Strict, opts);
  REQUIRE(r.exhaustive);
  REQUIRE(r.total_count == 0);
}

TEST_CASE("fast path only sees horizontal-base triangles") {
  // Row colors 0,1,2,...: every rainbow triangle spans three rows, so the
  // horizontal-base sweep finds nothing while the full sweep succeeds.
  const Window w = gallai::render(gallai::make_striped({0, 1, 2}, 3), {0, 0},
                                  6, 6);
  SearchOptions full;
  full.sweep = TriangleSweep::Full;
  SearchOptions fast;
  fast.sweep = TriangleSweep::FastPath;

  const SearchReport rf =
      gallai::find_rainbow_triangles(w, 1, RainbowMode::Strict, full);
  const SearchReport rp =
      gallai::find_rainbow_triangles(w, 1, RainbowMode::Strict, fast);
  REQUIRE(rf.exhaustive);
  REQUIRE(rf.total_count > 0);
  REQUIRE_FALSE(rp.exhaustive);
  REQUIRE(rp.total_count == 0);
  REQUIRE(rp.query == "rainbow-triangle doubled-area=1 strict fast-path");
}

TEST_CASE("fast path witnesses are a sound subset of the full sweep") {
  const Window w = testutil::random_window(31, 10, 10, 3);
  SearchOptions full;
  full.sweep = TriangleSweep::Full;
  SearchOptions fast;
  fast.sweep = TriangleSweep::FastPath;
  for (std::int64_t target : {1, 2, 4}) {
    const SearchReport rf =
        gallai::find_rainbow_triangles(w, target, RainbowMode::Strict, full);
    const SearchReport rp =
        gallai::find_rainbow_triangles(w, target, RainbowMode::Strict, fast);
    REQUIRE(*rp.total_count <= *rf.total_count);
    for (const Configuration& c : rp.witnesses) {
      REQUIRE(gallai::revalidate(c, w, RainbowMode::Strict));
      REQUIRE(c.doubled_area == target);
    }
  }
}

TEST_CASE("triangle sweep selection follows the window size") {
  // 100 points: automatic selection runs the full sweep.
  REQUIRE(gallai::find_rainbow_triangles(d3(10, 10), 1, RainbowMode::Strict)
              .exhaustive);
  // 625 points: automatic selection falls back to the fast path.
  const SearchReport big =
      gallai::find_rainbow_triangles(d3(25, 25), 1, RainbowMode::Strict);
  REQUIRE_FALSE(big.exhaustive);
  REQUIRE(big.query ==
          "rainbow-triangle doubled-area=1 strict fast-path");
  REQUIRE_THROWS_AS(
      gallai::find_rainbow_triangles(d3(4, 4), 0, RainbowMode::Strict),
      std::invalid_argument);
}

TEST_CASE("canonical triangle mode caps the color requirement") {
  // Two-color palette: strict rainbow is impossible, canonical needs 2.
  const Window w = gallai::render(gallai::make_parity(2), {0, 0}, 4, 4);
  REQUIRE(
      *gallai::find_rainbow_triangles(w, 1, RainbowMode::Strict).total_count ==
      0);
  const SearchReport canon =
      gallai::find_rainbow_triangles(w, 1, RainbowMode::Canonical);
  REQUIRE(*canon.total_count > 0);
  REQUIRE(*canon.total_count ==
          naive_triangle_count(w, 1, RainbowMode::Canonical));

  const Window mono = Window::filled({0, 0}, 3, 3, 1, 0);
  const SearchReport ones =
      gallai::find_rainbow_triangles(mono, 1, RainbowMode::Canonical);
  REQUIRE(*ones.total_count ==
          naive_triangle_count(mono, 1, RainbowMode::Canonical));
  REQUIRE(*ones.total_count > 0);
}

TEST_CASE("rainbow ap3 enumeration on the diagonal row") {
  const Window w = d3(6, 1);
  const auto triples = gallai::find_rainbow_ap3(w, 0, 0, 6);
  REQUIRE(triples.size() == 6);
  const std::vector<gallai::Ap3Triple> expected = {
      {0, 1, {0, 2, 1}}, {0, 2, {0, 1, 2}}, {1, 1, {2, 1, 0}},
      {1, 2, {2, 0, 1}}, {2, 1, {1, 0, 2}}, {3, 1, {0, 2, 1}},
  };
  REQUIRE(triples == expected);
  REQUIRE(std::is_sorted(triples.begin(), triples.end()));
}

TEST_CASE("rainbow ap3 offsets are relative to the span start") {
  const Window w = d3(8, 2);
  const auto triples = gallai::find_rainbow_ap3(w, 1, 2, 8);
  REQUIRE_FALSE(triples.empty());
  REQUIRE(triples.front() == gallai::Ap3Triple{0, 1, {2, 1, 0}});
}

TEST_CASE("rainbow ap3 validates the span") {
  const Window w = d3(6, 1);
  REQUIRE_THROWS_AS(gallai::find_rainbow_ap3(w, 0, 0, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(gallai::find_rainbow_ap3(w, 0, 0, 7), std::out_of_range);
  REQUIRE_THROWS_AS(gallai::find_rainbow_ap3(w, 1, 0, 6), std::out_of_range);
  REQUIRE_THROWS_AS(gallai::find_rainbow_ap3(w, 0, -1, 5), std::out_of_range);
}

TEST_CASE("rainbow ap3 matches the naive evenly-spaced oracle") {
  for (std::uint64_t seed = 10; seed < 18; ++seed) {
    const Window w = testutil::random_window(seed, 11, 2, 3);
    for (std::int64_t row : {0, 1}) {
      const auto got = gallai::find_rainbow_ap3(w, row, 0, 11);
      REQUIRE(got == naive_ap3(w, row, 0, 11));
    }
  }
}

TEST_CASE("ap3 configurations are degenerate by design and revalidate") {
  const Window w = d3(6, 1);
  const auto triples = gallai::find_rainbow_ap3(w, 0, 0, 6);
  const Configuration cfg = gallai::ap3_configuration(triples.front(), 0, 0, w);
  REQUIRE(cfg.kind == ConfigKind::RainbowAp3);
  REQUIRE(cfg.vertices == std::vector<Point>{{0, 0}, {1, 0}, {2, 0}});
  REQUIRE(cfg.doubled_area == 0);
  REQUIRE(cfg.colors == std::vector<Color>{0, 2, 1});
  REQUIRE(gallai::revalidate(cfg, w));
}

TEST_CASE("mono parallelogram search on the striped coloring") {
  const Window w = striped_8x6();
  const SearchReport r = gallai::find_h_quads(
      w, 12, ConfigKind::MonoParallelogramH, RainbowMode::Strict);
  REQUIRE(r.query == "mono-parallelogram doubled-area=12");
  REQUIRE(r.total_count == 108);
  REQUIRE(r.exhaustive);
  const Configuration& first = r.witnesses.front();
  REQUIRE(first.vertices ==
          std::vector<Point>{{0, 0}, {2, 0}, {2, 3}, {0, 3}});
  REQUIRE(first.colors == std::vector<Color>{0, 0, 0, 0});
  REQUIRE(first.doubled_area == 12);
  for (const Configuration& c : r.witnesses) REQUIRE(gallai::revalidate(c, w));
}

TEST_CASE("mono parallelogram search on the diagonal coloring") {
  // Side length 3 keeps both base vertices on one diagonal class; the top
  // row must then be shifted by 1 to land on the same class.
  const Window w = d3(6, 2);
  const SearchReport r = gallai::find_h_quads(
      w, 6, ConfigKind::MonoParallelogramH, RainbowMode::Strict);
  REQUIRE(r.total_count == 3);
  REQUIRE(r.witnesses.front().vertices ==
          std::vector<Point>{{0, 0}, {3, 0}, {4, 1}, {1, 1}});
  REQUIRE(r.witnesses.front().colors == std::vector<Color>{0, 0, 0, 0});
}

TEST_CASE("rainbow trapezoid search on the diagonal coloring") {
  const Window w = d3(8, 6);
  const SearchReport r = gallai::find_h_quads(
      w, 14, ConfigKind::RainbowTrapezoidH, RainbowMode::Strict);
  REQUIRE(r.query == "rainbow-trapezoid doubled-area=14");
  REQUIRE(r.total_count == 192);
  const Configuration& first = r.witnesses.front();
  REQUIRE(first.vertices ==
          std::vector<Point>{{0, 0}, {1, 0}, {7, 2}, {1, 2}});
  REQUIRE(first.colors == std::vector<Color>{0, 2, 1, 1});
  REQUIRE(first.doubled_area == 14);
  for (const Configuration& c : r.witnesses)
    REQUIRE(gallai::revalidate(c, w, RainbowMode::Strict));
}

TEST_CASE("trapezoid color requirement differs between the modes") {
  // Bottom row 0 1 0 0, top row 3 0 0 2. The three doubled-area-4 trapezoid
  // placements carry 4, 4 and 3 distinct colors.
  const Window w({0, 0}, 4, 2, 4, {0, 1, 0, 0, 3, 0, 0, 2});
  const SearchReport strict = gallai::find_h_quads(
      w, 4, ConfigKind::RainbowTrapezoidH, RainbowMode::Strict);
  const SearchReport canon = gallai::find_h_quads(
      w, 4, ConfigKind::RainbowTrapezoidH, RainbowMode::Canonical);
  REQUIRE(strict.total_count == 3);
  REQUIRE(canon.total_count == 2);
  for (const Configuration& c : strict.witnesses)
    REQUIRE(gallai::revalidate(c, w, RainbowMode::Strict));
  for (const Configuration& c : canon.witnesses)
    REQUIRE(gallai::revalidate(c, w, RainbowMode::Canonical));
}

TEST_CASE("h-quad search validates kind and target") {
  const Window w = striped_8x6();
  REQUIRE_THROWS_AS(gallai::find_h_quads(w, 7, ConfigKind::MonoParallelogramH,
                                         RainbowMode::Strict),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(gallai::find_h_quads(w, 0, ConfigKind::RainbowTrapezoidH,
                                         RainbowMode::Strict),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(
      gallai::find_h_quads(w, 4, ConfigKind::MonoRect, RainbowMode::Strict),
      std::invalid_argument);
}

TEST_CASE("rect color histogram splits by distinct vertex colors") {
  const Window constant = Window::filled({0, 0}, 5, 5, 3, 1);
  REQUIRE(gallai::rect_color_histogram(constant, 2) ==
          std::array<long long, 5>{0, 24, 0, 0, 0});

  // Diagonal coloring: area-2 rectangles always see 3 distinct colors.
  REQUIRE(gallai::rect_color_histogram(d3(5, 5), 2) ==
          std::array<long long, 5>{0, 0, 0, 24, 0});

  // Class 1 of the histogram is exactly the mono rect count.
  const Window w = testutil::random_window(77, 10, 9, 2);
  for (std::int64_t area : {1, 2, 6}) {
    const auto hist = gallai::rect_color_histogram(w, area);
    REQUIRE(hist[0] == 0);
    REQUIRE(hist[1] == *gallai::find_mono_rects(w, area).total_count);
  }
  REQUIRE_THROWS_AS(gallai::rect_color_histogram(constant, 0),
                    std::invalid_argument);
}

TEST_CASE("revalidate rejects tampered configurations") {
  const Window w = striped_8x6();
  const Configuration good =
      gallai::find_mono_rects(w, 3).witnesses.front();
  REQUIRE(gallai::revalidate(good, w));

  Configuration bad = good;
  bad.colors[0] = 1;
  REQUIRE_FALSE(gallai::revalidate(bad, w));

  bad = good;
  bad.doubled_area += 2;
  REQUIRE_FALSE(gallai::revalidate(bad, w));

  bad = good;
  bad.vertices[2] = {100, 100};
  REQUIRE_FALSE(gallai::revalidate(bad, w));

  // A parallelogram is not a rectangle.
  bad = good;
  bad.vertices = {{0, 0}, {1, 0}, {2, 3}, {1, 3}};
  bad.colors = {w.at({0, 0}), w.at({1, 0}), w.at({2, 3}), w.at({1, 3})};
  bad.doubled_area = 6;
  REQUIRE_FALSE(gallai::revalidate(bad, w));
}

TEST_CASE("revalidate enforces the trapezoid and parallelogram shapes") {
  std::vector<Color> cells(7 * 3, 0);
  Window w({0, 0}, 7, 3, 3, std::move(cells));
  w = w.patched({4, 0}, 1).patched({6, 2}, 2);

  Configuration trap;
  trap.kind = ConfigKind::RainbowTrapezoidH;
  trap.vertices = {{0, 0}, {4, 0}, {6, 2}, {3, 2}};
  trap.doubled_area = 14;
  trap.colors = {0, 1, 2, 0};
  REQUIRE(gallai::revalidate(trap, w, RainbowMode::Strict));

  // Equal parallel sides disqualify a trapezoid.
  Configuration equal_sides = trap;
  equal_sides.vertices = {{0, 0}, {4, 0}, {6, 2}, {2, 2}};
  equal_sides.doubled_area = 16;
  REQUIRE_FALSE(gallai::revalidate(equal_sides, w, RainbowMode::Strict));

  Configuration para;
  para.kind = ConfigKind::MonoParallelogramH;
  para.vertices = {{0, 0}, {3, 0}, {4, 2}, {1, 2}};
  para.doubled_area = 12;
  para.colors = {0, 0, 0, 0};
  REQUIRE(gallai::revalidate(para, w));

  Configuration skew = para;
  skew.vertices = {{0, 0}, {3, 0}, {5, 2}, {1, 2}};
  skew.doubled_area = 14;
  skew.colors = {0, 0, 0, 0};
  REQUIRE_FALSE(gallai::revalidate(skew, w));
}

TEST_CASE("revalidate checks progression spacing and degeneracy") {
  const Window w = d3(6, 1);
  Configuration cfg;
  cfg.kind = ConfigKind::RainbowAp3;
  cfg.vertices = {{0, 0}, {1, 0}, {2, 0}};
  cfg.doubled_area = 0;
  cfg.colors = {0, 2, 1};
  REQUIRE(gallai::revalidate(cfg, w));

  Configuration uneven = cfg;
  uneven.vertices = {{0, 0}, {1, 0}, {3, 0}};
  uneven.colors = {0, 2, 0};
  REQUIRE_FALSE(gallai::revalidate(uneven, w));

  Configuration area = cfg;
  area.doubled_area = 2;
  REQUIRE_FALSE(gallai::revalidate(area, w));
}

TEST_CASE("search reports are independent of the worker count") {
  const Window w = striped_8x6();
  const Window r10 = testutil::random_window(3, 10, 10, 3);
  SearchOptions serial;
  serial.jobs = 1;
  SearchOptions wide;
  wide.jobs = 7;

  const SearchReport a1 = gallai::find_mono_rects(w, 3, serial);
  const SearchReport a2 = gallai::find_mono_rects(w, 3, wide);
  REQUIRE(a1.witnesses == a2.witnesses);
  REQUIRE(a1.total_count == a2.total_count);

  const SearchReport b1 =
      gallai::find_rainbow_triangles(r10, 2, RainbowMode::Strict, serial);
  const SearchReport b2 =
      gallai::find_rainbow_triangles(r10, 2, RainbowMode::Strict, wide);
  REQUIRE(b1.witnesses == b2.witnesses);
  REQUIRE(b1.total_count == b2.total_count);

  const SearchReport c1 = gallai::find_h_quads(
      d3(8, 6), 14, ConfigKind::RainbowTrapezoidH, RainbowMode::Strict, serial);
  const SearchReport c2 = gallai::find_h_quads(
      d3(8, 6), 14, ConfigKind::RainbowTrapezoidH, RainbowMode::Strict, wide);
  REQUIRE(c1.witnesses == c2.witnesses);
  REQUIRE(c1.total_count == c2.total_count);

  REQUIRE(gallai::rect_color_histogram(r10, 2, 1) ==
          gallai::rect_color_histogram(r10, 2, 5));
}
