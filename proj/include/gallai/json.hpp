// JSON views of the result types, with insertion-ordered keys so that equal
// results serialize to equal bytes. elapsed_ms is pinned to 0 in artifacts:
// wall-clock timing goes to the human-readable summary instead, keeping
// files byte-identical across reruns and worker counts.
#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gallai/search.hpp"
#include "gallai/verify.hpp"

namespace gallai {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Point& p) {
  return ordered_json::array({p.x, p.y});
}

inline ordered_json to_json(const Configuration& cfg) {
  ordered_json j;
  j["kind"] = kind_name(cfg.kind);
  auto verts = ordered_json::array();
  for (const Point& p : cfg.vertices) verts.push_back(to_json(p));
  j["vertices"] = std::move(verts);
  j["doubled_area"] = cfg.doubled_area;
  j["colors"] = cfg.colors;
  return j;
}

inline ordered_json to_json(const SearchReport& report) {
  ordered_json j;
  auto wits = ordered_json::array();
  for (const Configuration& c : report.witnesses) wits.push_back(to_json(c));
  j["witnesses"] = std::move(wits);
  if (report.total_count)
    j["total_count"] = *report.total_count;
  else
    j["total_count"] = nullptr;
  j["exhaustive"] = report.exhaustive;
  j["elapsed_ms"] = 0;
  return j;
}

inline ordered_json to_json(const AfResult& r) {
  ordered_json j;
  j["n"] = r.n;
  j["formula_threshold"] = r.formula_threshold;
  j["brute_threshold"] = r.brute_threshold;
  j["extremal_witness"] = r.extremal_witness;
  j["agree"] = r.agree;
  return j;
}

inline ordered_json to_json(const Ap3Triple& t) {
  ordered_json j;
  j["x"] = t.x;
  j["d"] = t.d;
  j["sigma"] = t.sigma;
  return j;
}

inline ordered_json to_json(const CanonicalWitness& cw) {
  ordered_json j;
  j["n"] = cw.n;
  j["row_u"] = cw.row_u;
  j["row_u2"] = cw.row_u2;
  j["segments"] = ordered_json::array({cw.seg_i, cw.seg_j, cw.seg_k});
  j["triple"] = to_json(cw.triple);
  auto points = [](const std::array<Point, 3>& ps) {
    auto arr = ordered_json::array();
    for (const Point& p : ps) arr.push_back(to_json(p));
    return arr;
  };
  j["alpha"] = points(cw.alpha);
  j["beta"] = points(cw.beta);
  j["gamma"] = points(cw.gamma);
  j["z"] = to_json(cw.z);
  j["outcome"] = to_json(cw.outcome);
  j["doubled_area"] = cw.doubled_area;
  return j;
}

inline ordered_json to_json(const DichotomyReport& r) {
  ordered_json j;
  j["found_rainbow_triangle"] = r.found_rainbow_triangle
                                    ? to_json(*r.found_rainbow_triangle)
                                    : ordered_json(nullptr);
  ordered_json areas;
  for (const auto& [area, cfg] : r.mono_rect_areas_found)
    areas[std::to_string(area)] = cfg ? to_json(*cfg) : ordered_json(nullptr);
  j["mono_rect_areas_found"] = std::move(areas);
  j["satisfied"] = r.satisfied;
  j["exhaustive"] = r.exhaustive;
  j["caveat"] = r.caveat;
  return j;
}

inline ordered_json to_json(const PropResult& r) {
  ordered_json j;
  j["found"] = r.found();
  auto configs = ordered_json::array();
  for (const Configuration& c : r.configurations) configs.push_back(to_json(c));
  j["configurations"] = std::move(configs);
  j["reason"] = r.reason;
  return j;
}

inline ConfigKind kind_from_name(const std::string& name) {
  for (ConfigKind k :
       {ConfigKind::MonoRect, ConfigKind::RainbowTriangle,
        ConfigKind::MonoParallelogramH, ConfigKind::RainbowTrapezoidH,
        ConfigKind::RainbowAp3})
    if (name == kind_name(k)) return k;
  throw std::invalid_argument("unknown configuration kind: " + name);
}

inline Point point_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point: expected [x, y]");
  return Point{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline Configuration configuration_from_json(const ordered_json& j) {
  Configuration cfg;
  cfg.kind = kind_from_name(j.at("kind").get<std::string>());
  for (const auto& v : j.at("vertices")) cfg.vertices.push_back(point_from_json(v));
  cfg.doubled_area = j.at("doubled_area").get<std::int64_t>();
  cfg.colors = j.at("colors").get<std::vector<Color>>();
  return cfg;
}

inline SearchReport report_from_json(const ordered_json& j) {
  SearchReport report;
  for (const auto& w : j.at("witnesses"))
    report.witnesses.push_back(configuration_from_json(w));
  if (!j.at("total_count").is_null())
    report.total_count = j.at("total_count").get<long long>();
  report.exhaustive = j.at("exhaustive").get<bool>();
  report.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return report;
}

}  // namespace gallai
