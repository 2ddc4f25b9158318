#include "rcn/drawing.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rcn/crossing.hpp"
#include "rcn/rng.hpp"

namespace rcn {
namespace {

using nlohmann::json;

constexpr long long kPerturbScale = 1000000;  // coordinate scale before offsets

json int_to_json(const Int& v) {
  // Big components fall back to decimal strings to stay bit-exact.
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer())
    return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected integer or decimal string");
}

json graph_to_json(const GraphSpec& g) {
  json j;
  switch (g.family()) {
    case Family::kComplete:
      j["family"] = "complete";
      j["params"] = g.vertex_count();
      break;
    case Family::kCompleteBipartite:
      j["family"] = "complete_bipartite";
      j["params"] = g.class_sizes();
      j["classes"] = g.class_sizes();
      break;
    case Family::kMultipartite:
      j["family"] = "multipartite";
      j["params"] = g.class_sizes();
      j["classes"] = g.class_sizes();
      break;
    case Family::kLayered:
      j["family"] = "layered";
      j["params"] = {g.vertex_count(),
                     static_cast<int>(g.class_sizes().size())};
      j["classes"] = g.class_sizes();
      break;
    case Family::kExplicit: {
      j["family"] = "explicit";
      json edges = json::array();
      for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
      j["params"] = {{"n", g.vertex_count()}, {"edges", edges}};
      break;
    }
  }
  return j;
}

GraphSpec graph_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "complete") return GraphSpec::complete(j.at("params").get<int>());
  if (family == "complete_bipartite") {
    auto s = j.at("params").get<std::vector<int>>();
    if (s.size() != 2) throw ParseError("complete_bipartite needs two sizes");
    return GraphSpec::complete_bipartite(s[0], s[1]);
  }
  if (family == "multipartite")
    return GraphSpec::multipartite(j.at("params").get<std::vector<int>>());
  if (family == "layered") {
    auto p = j.at("params").get<std::vector<int>>();
    if (p.size() != 2) throw ParseError("layered needs [n, r]");
    return GraphSpec::layered(p[0], p[1]);
  }
  if (family == "explicit") {
    const json& p = j.at("params");
    std::vector<Edge> edges;
    for (const auto& e : p.at("edges"))
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return GraphSpec::explicit_graph(p.at("n").get<int>(), std::move(edges));
  }
  throw ParseError("unknown graph family: " + family);
}

// Deterministic offsets used to push axis-aligned constructions into
// general position without changing the combinatorial crossing pattern.
std::vector<PtI> perturb_attempt(const std::vector<PtI>& base, long long scale,
                                 long long max_offset, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<PtI> out;
  out.reserve(base.size());
  for (const auto& p : base) {
    long long ox = static_cast<long long>(rng.below(max_offset)) + 1;
    long long oy = static_cast<long long>(rng.below(max_offset)) + 1;
    out.push_back({p.x * scale + ox, p.y * scale + oy});
  }
  return out;
}

// Scale by kPerturbScale and add small distinct offsets; retry with
// smaller offsets until general position holds and the brute-force count
// matches the known target.
Drawing perturb_to_target(const GraphSpec& g, const std::vector<PtI>& base,
                          long long target) {
  const auto edges = g.edges();
  for (int attempt = 0; attempt < 40; ++attempt) {
    long long max_offset = kPerturbScale / (1000LL << std::min(attempt, 18));
    if (max_offset < 2) max_offset = 2;
    auto pts = perturb_attempt(base, kPerturbScale, max_offset,
                               0x5eedULL + attempt);
    if (!in_general_position(pts)) continue;
    if (count_crossings(pts, edges) != target) continue;
    return make_integer_drawing(g, pts);
  }
  throw Error("perturbation failed to reach the target crossing count");
}

}  // namespace

Drawing::Drawing(GraphSpec g, std::vector<PtQ> pts, CoordKind k)
    : graph(std::move(g)), points(std::move(pts)), kind(k) {
  if (static_cast<int>(points.size()) != graph.vertex_count())
    throw ClassSizeMismatch("point count does not match graph vertex count");
  if (!in_general_position(points))
    throw GeneralPositionViolation("drawing points are not in general position");
}

Drawing make_integer_drawing(GraphSpec g, const std::vector<PtI>& pts) {
  std::vector<PtQ> q;
  q.reserve(pts.size());
  for (const auto& p : pts) q.push_back({Rat(static_cast<long>(p.x)), Rat(static_cast<long>(p.y))});
  return Drawing(std::move(g), std::move(q), CoordKind::kInteger);
}

std::string drawing_to_json(const Drawing& d) {
  json j;
  j["format"] = "rcn-drawing/1";
  j["coordinate_kind"] =
      d.kind == CoordKind::kInteger ? "integer" : "rational";
  json pts = json::array();
  for (const auto& p : d.points) {
    if (d.kind == CoordKind::kInteger) {
      if (!is_integral(p.x) || !is_integral(p.y))
        throw IOError("integer drawing holds a non-integer coordinate");
      pts.push_back({int_to_json(p.x.get_num()), int_to_json(p.y.get_num())});
    } else {
      pts.push_back({{int_to_json(p.x.get_num()), int_to_json(p.x.get_den())},
                     {int_to_json(p.y.get_num()), int_to_json(p.y.get_den())}});
    }
  }
  j["points"] = std::move(pts);
  j["graph"] = graph_to_json(d.graph);
  return j.dump(2);
}

Drawing drawing_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != "rcn-drawing/1")
      throw ParseError("unknown format tag");
    const std::string kind_s = j.at("coordinate_kind").get<std::string>();
    if (kind_s != "integer" && kind_s != "rational")
      throw ParseError("coordinate_kind must be integer or rational");
    const CoordKind kind =
        kind_s == "integer" ? CoordKind::kInteger : CoordKind::kRational;
    std::vector<PtQ> pts;
    for (const auto& pj : j.at("points")) {
      PtQ p;
      if (kind == CoordKind::kInteger) {
        p.x = Rat(int_from_json(pj.at(0)));
        p.y = Rat(int_from_json(pj.at(1)));
      } else {
        Int xn = int_from_json(pj.at(0).at(0)), xd = int_from_json(pj.at(0).at(1));
        Int yn = int_from_json(pj.at(1).at(0)), yd = int_from_json(pj.at(1).at(1));
        if (xd <= 0 || yd <= 0) throw ParseError("denominators must be positive");
        p.x = Rat(xn) / Rat(xd);
        p.y = Rat(yn) / Rat(yd);
        if (p.x.get_num() != xn || p.x.get_den() != xd ||
            p.y.get_num() != yn || p.y.get_den() != yd)
          throw ParseError("rational coordinates must be in lowest terms");
      }
      pts.push_back(std::move(p));
    }
    return Drawing(graph_from_json(j.at("graph")), std::move(pts), kind);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed drawing: ") + e.what());
  }
}

void save_drawing(const std::string& path, const Drawing& d) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot open for writing: " + path);
  out << drawing_to_json(d) << "\n";
  if (!out) throw IOError("write failed: " + path);
}

Drawing load_drawing(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return drawing_from_json(ss.str());
}

Drawing generate_layered(int r) {
  if (r < 2) throw Error("generate_layered: r must be >= 2");
  std::vector<PtI> base;
  for (int i = 1; i <= r; ++i) {
    if (i % 2 == 1) {
      base.push_back({i, 0});
      base.push_back({-i, 0});
    } else {
      base.push_back({0, i});
      base.push_back({0, -i});
    }
  }
  return perturb_to_target(GraphSpec::layered(2 * r, r), base, 0);
}

Drawing generate_zarankiewicz(int m, int n) {
  if (m < 1 || n < 1) throw Error("generate_zarankiewicz: m, n must be >= 1");
  std::vector<PtI> base;
  for (int i = 1; i <= (m + 1) / 2; ++i) base.push_back({i, 0});
  for (int i = 1; i <= m / 2; ++i) base.push_back({-i, 0});
  for (int i = 1; i <= (n + 1) / 2; ++i) base.push_back({0, i});
  for (int i = 1; i <= n / 2; ++i) base.push_back({0, -i});
  const long long z = static_cast<long long>(n / 2) * ((n - 1) / 2) *
                      (m / 2) * ((m - 1) / 2);
  return perturb_to_target(GraphSpec::complete_bipartite(m, n), base, z);
}

Drawing dataset_k24() {
  // Six points per class, classes 0..3 in order.
  static const PtI kPoints[24] = {
      {-59260959, 44970123},   {261261347, -43693014},
      {158829052, -28658158},  {-20273112, -23913465},
      {20602644, -8343316},    {-8148611, -63519416},
      {30209164, 4850528},     {12317574, -161508817},
      {46649346, -344926319},  {-11015825, -47872739},
      {-26347789, 22655563},   {-46729617, 35472331},
      {-74136586, 66127255},   {-278900322, 316137789},
      {14791528, -20163276},   {-140757971, 147565111},
      {14081248, -20874215},   {9903931, -24183515},
      {-38516867, 27953341},   {-60922797, 47350463},
      {8267623, -135305393},   {-15043716, -39580158},
      {41831995, 797354},      {181333931, -34086725},
  };
  std::vector<PtI> pts(kPoints, kPoints + 24);
  return make_integer_drawing(GraphSpec::balanced_multipartite(24, 4), pts);
}

std::map<std::string, Drawing> seed_library() {
  std::map<std::string, Drawing> lib;
  // Triangle with an interior point: the planar drawing of K_4.
  lib.emplace("k4_planar",
              make_integer_drawing(GraphSpec::complete(4),
                                   {{0, 0}, {10, 0}, {5, 9}, {5, 3}}));
  lib.emplace("k2_edge", make_integer_drawing(GraphSpec::complete(2),
                                              {{0, 0}, {7, 3}}));
  lib.emplace("k22", generate_zarankiewicz(2, 2));
  // Centrally symmetric hexagonal configuration with antipodal classes;
  // canonical substitute for the unpublished 3-partite seed.
  lib.emplace("k222_hex",
              make_integer_drawing(
                  GraphSpec::multipartite({2, 2, 2}),
                  {{4, 1}, {-4, -1}, {1, 4}, {-1, -4}, {-3, 3}, {3, -3}}));
  for (int r = 3; r <= 6; ++r)
    lib.emplace("layered_" + std::to_string(r), generate_layered(r));
  lib.emplace("k24_4", dataset_k24());
  return lib;
}

}  // namespace rcn
