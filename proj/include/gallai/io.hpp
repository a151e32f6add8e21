// Grid file format and PPM export.
//
// Grid format: line 1 is "width height r", followed by `height` lines of
// `width` space-separated color indices. The first data line is row y = 0
// (the origin is at the bottom-left, y increases upward). Parsing is strict:
// any index outside [0, r) is an error, as is a short or malformed file.
#pragma once

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gallai/core.hpp"

namespace gallai {

inline Window read_grid(std::istream& in) {
  int width = 0, height = 0, palette = 0;
  if (!(in >> width >> height >> palette))
    throw std::runtime_error("grid parse: missing or malformed header");
  if (width < 1 || height < 1 || palette < 1)
    throw std::runtime_error("grid parse: non-positive dimension or palette");
  std::vector<Color> cells(static_cast<std::size_t>(width) * height);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    long long v;
    if (!(in >> v))
      throw std::runtime_error("grid parse: expected " +
                               std::to_string(cells.size()) +
                               " cells, file ended at " + std::to_string(i));
    if (v < 0 || v >= palette)
      throw std::runtime_error("grid parse: color index " + std::to_string(v) +
                               " out of range [0," + std::to_string(palette) +
                               ")");
    cells[i] = static_cast<Color>(v);
  }
  return Window(Point{0, 0}, width, height, palette, std::move(cells));
}

inline Window read_grid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid file: " + path);
  return read_grid(in);
}

inline void write_grid(std::ostream& out, const Window& w) {
  out << w.width() << ' ' << w.height() << ' ' << w.palette() << '\n';
  for (int iy = 0; iy < w.height(); ++iy) {
    for (int ix = 0; ix < w.width(); ++ix) {
      if (ix) out << ' ';
      out << w.at_local(ix, iy);
    }
    out << '\n';
  }
}

inline void write_grid_file(const std::string& path, const Window& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_grid(out, w);
}

// Fixed 8-entry pixel palette; color indices beyond 7 wrap around.
inline constexpr std::array<std::array<int, 3>, 8> kPpmPalette = {{
    {230, 25, 75},    // red
    {60, 180, 75},    // green
    {255, 225, 25},   // yellow
    {0, 130, 200},    // blue
    {245, 130, 48},   // orange
    {145, 30, 180},   // purple
    {70, 240, 240},   // cyan
    {240, 50, 230},   // magenta
}};

// P3 text PPM, one pixel per cell. PPM rows run top to bottom, so the
// window's highest row is written first.
inline void write_ppm(std::ostream& out, const Window& w) {
  out << "P3\n" << w.width() << ' ' << w.height() << "\n255\n";
  for (int iy = w.height() - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < w.width(); ++ix) {
      const auto& rgb = kPpmPalette[w.at_local(ix, iy) % 8];
      if (ix) out << ' ';
      out << rgb[0] << ' ' << rgb[1] << ' ' << rgb[2];
    }
    out << '\n';
  }
}

inline void write_ppm_file(const std::string& path, const Window& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_ppm(out, w);
}

}  // namespace gallai
