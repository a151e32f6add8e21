// Shared test utilities: reproducible random windows and a subprocess runner
// for the command-line binary.
#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gallai/colorings.hpp"
#include "gallai/core.hpp"

namespace testutil {

// Uniform pseudorandom cell colors; same seed, same window.
inline gallai::Window random_window(std::uint64_t seed, int width, int height,
                                    int palette) {
  std::uint64_t state = gallai::detail::mix(seed, 0x77ca7716u);
  std::vector<gallai::Color> cells(static_cast<std::size_t>(width) * height);
  for (auto& c : cells)
    c = static_cast<gallai::Color>(gallai::detail::splitmix64(state) % palette);
  return gallai::Window(gallai::Point{0, 0}, width, height, palette,
                        std::move(cells));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string temp_path(const std::string& name) {
  return std::string("/tmp/gallai_test_") + std::to_string(::getpid()) + "_" +
         name;
}

#ifdef GALLAI_CLI_PATH
inline CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_path = temp_path("out" + std::to_string(counter));
  const std::string err_path = temp_path("err" + std::to_string(counter));
  ++counter;
  const std::string cmd = std::string(GALLAI_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  result.err = read_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}
#endif

}  // namespace testutil
