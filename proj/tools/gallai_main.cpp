// Command-line entry point. Subcommands map one-to-one onto library
// operations: generate, search, verify-dichotomy, af, vdw, witness, prop,
// export. Every run is a pure function of flags, input files and seeds; JSON
// artifacts and grid files are byte-identical across reruns and across
// --jobs values.
//
// Exit codes: 0 found/verified, 1 exhaustively absent or unsatisfied,
// 2 usage or input error, 3 enumeration budget exceeded.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gallai/colorings.hpp"
#include "gallai/core.hpp"
#include "gallai/io.hpp"
#include "gallai/json.hpp"
#include "gallai/search.hpp"
#include "gallai/verify.hpp"

namespace {

using namespace gallai;

std::vector<std::int64_t> parse_int_list(const std::string& text,
                                         const char* what) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) +
                                  ": expected a comma-separated integer list, got \"" +
                                  text + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_int_pair(const std::string& text,
                                                     const char* what) {
  const auto items = parse_int_list(text, what);
  if (items.size() != 2)
    throw std::invalid_argument(std::string(what) + ": expected two integers");
  return {items[0], items[1]};
}

// Flags shared by every subcommand that needs a coloring source: either a
// stored grid file or a named rule rendered over a window.
struct SourceOpts {
  std::string rule;
  std::string input;
  int t = 1;
  int r = 0;  // 0 = per-rule default
  std::string period_colors = "0,1,2";
  int n = 6;
  std::uint64_t seed = 0;
  std::string oob = "error";
  std::string origin = "0,0";
  int width = 0;
  int height = 0;
};

void add_rule_flags(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("--rule", o.rule,
                  "coloring rule: column-exception|striped|d3|parity|rf-random|file");
  cmd->add_option("--input", o.input, "grid file (rule \"file\", or direct window)");
  cmd->add_option("--t", o.t, "column-exception spacing");
  cmd->add_option("--r", o.r, "palette size (default depends on rule)");
  cmd->add_option("--period-colors", o.period_colors,
                  "striped line colors, e.g. 0,1,2");
  cmd->add_option("--n", o.n, "rf-random block length");
  cmd->add_option("--seed", o.seed, "rf-random seed");
  cmd->add_option("--oob", o.oob,
                  "stored-grid out-of-bounds policy: error|periodic");
}

void add_window_flags(CLI::App* cmd, SourceOpts& o) {
  cmd->add_option("--origin", o.origin, "window origin X,Y");
  cmd->add_option("--width", o.width, "window width");
  cmd->add_option("--height", o.height, "window height");
}

OutOfBounds parse_oob(const std::string& s) {
  if (s == "error") return OutOfBounds::Error;
  if (s == "periodic") return OutOfBounds::Periodic;
  throw std::invalid_argument("--oob must be error or periodic");
}

ColoringRule build_rule(const SourceOpts& o) {
  if (o.rule == "column-exception")
    return make_column_exception(o.t, o.r == 0 ? 3 : o.r);
  if (o.rule == "striped") {
    const auto entries = parse_int_list(o.period_colors, "--period-colors");
    std::vector<Color> colors(entries.begin(), entries.end());
    int r = o.r;
    if (r == 0)
      for (Color c : colors) r = std::max(r, c + 1);
    return make_striped(colors, r);
  }
  if (o.rule == "d3") return make_diagonal_d3();
  if (o.rule == "parity") return make_parity(o.r == 0 ? 4 : o.r);
  if (o.rule == "rf-random") return make_rainbow_feasible_random(o.n, o.seed);
  if (o.rule == "file") {
    if (o.input.empty())
      throw std::invalid_argument("rule \"file\" requires --input");
    return make_stored_grid(read_grid_file(o.input), parse_oob(o.oob));
  }
  throw std::invalid_argument("unknown rule \"" + o.rule +
                              "\" (expected column-exception|striped|d3|parity|rf-random|file)");
}

// --input without an explicit window is the stored grid itself; otherwise
// the rule (or the stored grid under its policy) is rendered over the
// requested region.
Window build_window(const SourceOpts& o) {
  const bool has_window = o.width > 0 || o.height > 0;
  if (!o.input.empty() && o.rule.empty() && !has_window)
    return read_grid_file(o.input);
  SourceOpts src = o;
  if (!o.input.empty() && o.rule.empty()) src.rule = "file";
  if (src.rule.empty())
    throw std::invalid_argument("need --input or --rule");
  if (src.width < 1 || src.height < 1)
    throw std::invalid_argument("--width and --height must be >= 1");
  const auto [ox, oy] = parse_int_pair(src.origin, "--origin");
  return render(build_rule(src), Point{ox, oy}, src.width, src.height);
}

void write_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string config_line(const Configuration& c) {
  std::string s = kind_name(c.kind);
  for (const Point& p : c.vertices) s += " " + point_str(p);
  s += " colors";
  for (Color col : c.colors) s += " " + std::to_string(col);
  s += " doubled_area " + std::to_string(c.doubled_area);
  return s;
}

void print_report(const SearchReport& rep) {
  std::cout << "query: " << rep.query << "\n";
  if (rep.total_count) std::cout << "total_count: " << *rep.total_count << "\n";
  std::cout << "exhaustive: " << (rep.exhaustive ? "true" : "false") << "\n";
  std::cout << "witnesses_kept: " << rep.witnesses.size() << "\n";
  for (const Configuration& c : rep.witnesses)
    std::cout << "  " << config_line(c) << "\n";
}

RainbowMode parse_mode(const std::string& s) {
  if (s == "strict") return RainbowMode::Strict;
  if (s == "canonical") return RainbowMode::Canonical;
  throw std::invalid_argument("--mode must be strict or canonical");
}

TriangleSweep parse_sweep(const std::string& s) {
  if (s == "auto") return TriangleSweep::Auto;
  if (s == "full") return TriangleSweep::Full;
  if (s == "fast") return TriangleSweep::FastPath;
  throw std::invalid_argument("--sweep must be auto, full or fast");
}

// --n accepts a single value or an inclusive range "6..13"
std::pair<int, int> parse_n_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("--n: expected N or LO..HI, got \"" + text + "\"");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"search and verification toolkit for monochromatic and rainbow "
               "patterns of prescribed area in colored integer grids"};
  app.require_subcommand(1);

  // generate
  SourceOpts gen_src;
  std::string gen_out, gen_ppm;
  auto* gen = app.add_subcommand("generate", "render a coloring rule to a grid file");
  add_rule_flags(gen, gen_src);
  add_window_flags(gen, gen_src);
  gen->add_option("--out", gen_out, "grid file to write (stdout if omitted)");
  gen->add_option("--ppm", gen_ppm, "also write a P3 PPM image");

  // search
  SourceOpts search_src;
  std::string search_kind, search_mode = "strict", search_sweep = "auto";
  std::string search_json, search_span;
  std::int64_t search_area = -1, search_darea = -1, search_row = 0;
  long long search_limit = 16;
  int search_jobs = 1;
  auto* search = app.add_subcommand("search", "enumerate configurations in a window");
  add_rule_flags(search, search_src);
  add_window_flags(search, search_src);
  search->add_option("--kind", search_kind,
                     "mono-rect|rainbow-triangle|rainbow-ap3|mono-parallelogram|rainbow-trapezoid")
      ->required();
  search->add_option("--area", search_area, "geometric area (mono-rect)");
  search->add_option("--doubled-area", search_darea, "doubled area target");
  search->add_option("--mode", search_mode, "rainbow mode: strict|canonical");
  search->add_option("--limit", search_limit, "max witnesses kept");
  search->add_option("--jobs", search_jobs, "worker threads");
  search->add_option("--sweep", search_sweep, "triangle sweep: auto|full|fast");
  search->add_option("--row", search_row, "row for rainbow-ap3");
  search->add_option("--span", search_span, "x span A,B for rainbow-ap3 (default full width)");
  search->add_option("--json", search_json, "write the report as JSON");

  // verify-dichotomy
  SourceOpts dich_src;
  std::string dich_areas, dich_json, dich_sweep = "auto";
  int dich_jobs = 1;
  auto* dich = app.add_subcommand(
      "verify-dichotomy", "rainbow triangle of doubled area 1, or mono rects of the given areas");
  add_rule_flags(dich, dich_src);
  add_window_flags(dich, dich_src);
  dich->add_option("--areas", dich_areas, "even rectangle areas, e.g. 2,4,6")->required();
  dich->add_option("--jobs", dich_jobs, "worker threads");
  dich->add_option("--sweep", dich_sweep, "triangle sweep: auto|full|fast");
  dich->add_option("--json", dich_json, "write the report as JSON");

  // af
  std::string af_n, af_json;
  int af_jobs = 1, af_max_n = 16;
  auto* af = app.add_subcommand(
      "af", "rainbow AP3 threshold for 3-colorings of [N]: formula vs exhaustive search");
  af->add_option("--n", af_n, "N or range LO..HI")->required();
  af->add_option("--jobs", af_jobs, "worker threads");
  af->add_option("--max-n", af_max_n, "enumeration budget cap");
  af->add_option("--json", af_json, "write results as a JSON array");

  // vdw
  int vdw_k = 0, vdw_r = 0, vdw_cap = 0, vdw_jobs = 1;
  std::string vdw_json;
  auto* vdw = app.add_subcommand("vdw", "van der Waerden number by backtracking");
  vdw->add_option("--k", vdw_k, "progression length")->required();
  vdw->add_option("--r", vdw_r, "number of colors")->required();
  vdw->add_option("--cap", vdw_cap, "largest n to try")->required();
  vdw->add_option("--jobs", vdw_jobs, "worker threads");
  vdw->add_option("--json", vdw_json, "write the result as JSON");

  // witness; --n doubles as the rf-random block length and the segment length
  SourceOpts wit_src;
  wit_src.rule = "rf-random";
  int wit_segments = 40, wit_rows = 40, wit_jobs = 1;
  std::string wit_json;
  auto* wit = app.add_subcommand(
      "witness", "canonical monochromatic-parallelogram / rainbow-trapezoid witness");
  add_rule_flags(wit, wit_src);
  wit->add_option("--segments", wit_segments, "segment budget per row");
  wit->add_option("--rows", wit_rows, "row budget");
  wit->add_option("--jobs", wit_jobs, "worker threads");
  wit->add_option("--json", wit_json, "write the witness as JSON");

  // prop
  SourceOpts prop_src;
  std::string prop_which, prop_json;
  std::int64_t prop_a = 1;
  auto* prop = app.add_subcommand("prop", "constructive proposition searches");
  add_rule_flags(prop, prop_src);
  add_window_flags(prop, prop_src);
  prop->add_option("--which", prop_which,
                   "triangle1|double-triangles|para-trapezium")
      ->required();
  prop->add_option("--a", prop_a, "area parameter");
  prop->add_option("--json", prop_json, "write the result as JSON");

  // export
  std::string exp_input, exp_ppm;
  auto* exp = app.add_subcommand("export", "grid file to P3 PPM image");
  exp->add_option("--input", exp_input, "grid file")->required();
  exp->add_option("--ppm", exp_ppm, "PPM file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    const Window w = build_window(gen_src);
    if (gen_out.empty() && gen_ppm.empty()) {
      write_grid(std::cout, w);
    } else {
      if (!gen_out.empty()) write_grid_file(gen_out, w);
      if (!gen_ppm.empty()) write_ppm_file(gen_ppm, w);
    }
    return 0;
  }

  if (search->parsed()) {
    const Window w = build_window(search_src);
    SearchOptions opts;
    opts.limit = search_limit;
    opts.jobs = search_jobs;
    opts.sweep = parse_sweep(search_sweep);
    const RainbowMode mode = parse_mode(search_mode);

    SearchReport rep;
    if (search_kind == "mono-rect") {
      std::int64_t area = search_area;
      if (area < 0 && search_darea >= 0) {
        if (search_darea % 2 != 0)
          throw std::invalid_argument(
              "mono-rect: doubled area of an axis rectangle is even");
        area = search_darea / 2;
      }
      if (area < 0) throw std::invalid_argument("mono-rect needs --area");
      rep = find_mono_rects(w, area, opts);
    } else if (search_kind == "rainbow-triangle") {
      const std::int64_t target =
          search_darea >= 0 ? search_darea : 2 * search_area;
      if (target < 0)
        throw std::invalid_argument("rainbow-triangle needs --doubled-area");
      rep = find_rainbow_triangles(w, target, mode, opts);
    } else if (search_kind == "mono-parallelogram" ||
               search_kind == "rainbow-trapezoid") {
      const std::int64_t target =
          search_darea >= 0 ? search_darea : 2 * search_area;
      if (target < 0)
        throw std::invalid_argument(search_kind + " needs --doubled-area");
      const ConfigKind kind = search_kind == "mono-parallelogram"
                                  ? ConfigKind::MonoParallelogramH
                                  : ConfigKind::RainbowTrapezoidH;
      rep = find_h_quads(w, target, kind, mode, opts);
    } else if (search_kind == "rainbow-ap3") {
      std::int64_t a = w.origin().x, b = w.origin().x + w.width();
      if (!search_span.empty())
        std::tie(a, b) = parse_int_pair(search_span, "--span");
      const auto triples = find_rainbow_ap3(w, search_row, a, b);
      rep.query = "rainbow-ap3 row=" + std::to_string(search_row) + " span=[" +
                  std::to_string(a) + "," + std::to_string(b) + ")";
      rep.total_count = static_cast<long long>(triples.size());
      rep.exhaustive = true;
      for (const Ap3Triple& t : triples) {
        if (static_cast<long long>(rep.witnesses.size()) >= opts.limit) break;
        rep.witnesses.push_back(ap3_configuration(t, search_row, a, w));
      }
    } else {
      throw std::invalid_argument("unknown --kind \"" + search_kind + "\"");
    }

    print_report(rep);
    if (!search_json.empty()) write_json_file(search_json, to_json(rep));
    const bool any = rep.total_count ? *rep.total_count > 0
                                     : !rep.witnesses.empty();
    return any ? 0 : 1;
  }

  if (dich->parsed()) {
    const Window w = build_window(dich_src);
    SearchOptions opts;
    opts.jobs = dich_jobs;
    opts.sweep = parse_sweep(dich_sweep);
    const auto areas = parse_int_list(dich_areas, "--areas");
    const DichotomyReport rep = verify_dichotomy(w, areas, opts);

    std::cout << "satisfied: " << (rep.satisfied ? "true" : "false") << "\n";
    std::cout << "rainbow_triangle: "
              << (rep.found_rainbow_triangle
                      ? config_line(*rep.found_rainbow_triangle)
                      : "absent")
              << "\n";
    for (const auto& [area, cfg] : rep.mono_rect_areas_found)
      std::cout << "area " << area << ": "
                << (cfg ? config_line(*cfg) : "absent") << "\n";
    std::cout << "exhaustive: " << (rep.exhaustive ? "true" : "false") << "\n";
    if (!rep.caveat.empty()) std::cout << "caveat: " << rep.caveat << "\n";
    if (!dich_json.empty()) write_json_file(dich_json, to_json(rep));
    return rep.satisfied ? 0 : 1;
  }

  if (af->parsed()) {
    const auto [lo, hi] = parse_n_range(af_n);
    if (lo > hi) throw std::invalid_argument("--n: empty range");
    auto results = ordered_json::array();
    bool all_agree = true;
    for (int n = lo; n <= hi; ++n) {
      const AfResult r = af_brute_force(n, af_jobs, af_max_n);
      std::cout << "n=" << r.n << " formula=" << r.formula_threshold
                << " brute=" << r.brute_threshold
                << " agree=" << (r.agree ? "true" : "false") << " witness=";
      for (std::size_t i = 0; i < r.extremal_witness.size(); ++i)
        std::cout << (i ? "," : "") << r.extremal_witness[i];
      std::cout << "\n";
      all_agree = all_agree && r.agree;
      results.push_back(to_json(r));
    }
    if (!af_json.empty()) write_json_file(af_json, results);
    return all_agree ? 0 : 1;
  }

  if (vdw->parsed()) {
    const auto value = vdw_number(vdw_k, vdw_r, vdw_cap, vdw_jobs);
    if (value)
      std::cout << *value << "\n";
    else
      std::cout << "absent\n";
    if (!vdw_json.empty()) {
      ordered_json j;
      j["k"] = vdw_k;
      j["r"] = vdw_r;
      j["cap"] = vdw_cap;
      j["found"] = value.has_value();
      j["value"] = value ? ordered_json(*value) : ordered_json(nullptr);
      write_json_file(vdw_json, j);
    }
    return value ? 0 : 1;
  }

  if (wit->parsed()) {
    const ColoringRule rule = build_rule(wit_src);
    const auto cw = canonical_witness_search(rule, wit_src.n, wit_segments,
                                             wit_rows, wit_jobs);
    std::cout << "found: " << (cw ? "true" : "false") << "\n";
    if (cw) {
      std::cout << "rows: u=" << cw->row_u << " u2=" << cw->row_u2 << "\n";
      std::cout << "segments: i=" << cw->seg_i << " j=" << cw->seg_j
                << " k=" << cw->seg_k << "\n";
      std::cout << "triple: x=" << cw->triple.x << " d=" << cw->triple.d
                << " sigma=" << cw->triple.sigma[0] << ","
                << cw->triple.sigma[1] << "," << cw->triple.sigma[2] << "\n";
      std::cout << "outcome: " << config_line(cw->outcome) << "\n";
    }
    if (!wit_json.empty()) {
      ordered_json j;
      j["found"] = cw.has_value();
      j["witness"] = cw ? to_json(*cw) : ordered_json(nullptr);
      write_json_file(wit_json, j);
    }
    return cw ? 0 : 1;
  }

  if (prop->parsed()) {
    const Window w = build_window(prop_src);
    PropResult result;
    if (prop_which == "triangle1")
      result = prop_triangle_between_lines(w);
    else if (prop_which == "double-triangles")
      result = prop_double_triangles(w, prop_a);
    else if (prop_which == "para-trapezium")
      result = prop_para_or_trapezium(w, prop_a);
    else
      throw std::invalid_argument("unknown --which \"" + prop_which + "\"");

    std::cout << "found: " << (result.found() ? "true" : "false") << "\n";
    for (const Configuration& c : result.configurations)
      std::cout << "  " << config_line(c) << "\n";
    if (!result.reason.empty()) std::cout << "reason: " << result.reason << "\n";
    if (!prop_json.empty()) write_json_file(prop_json, to_json(result));
    return result.found() ? 0 : 1;
  }

  if (exp->parsed()) {
    write_ppm_file(exp_ppm, read_grid_file(exp_input));
    std::cout << "wrote " << exp_ppm << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const gallai::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
