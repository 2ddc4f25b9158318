#include "rcn/planter.hpp"

#include <algorithm>
#include <set>

#include "rcn/closed_forms.hpp"
#include "rcn/crossing.hpp"

namespace rcn {
namespace {

int cross_sign(const PtQ& a, const PtQ& b) {
  return sgn(Rat(a.x * b.y - a.y * b.x));
}

bool upper_half(const PtQ& d) {
  return d.y > 0 || (d.y == 0 && d.x > 0);
}

// G^s: every seed vertex becomes an independent cluster of s vertices,
// adjacent across clusters iff the seed vertices are adjacent. Cluster v
// occupies indices [v*s, (v+1)*s), which keeps class ranges contiguous.
GraphSpec blow_up(const GraphSpec& g, int s) {
  switch (g.family()) {
    case Family::kComplete:
      return GraphSpec::balanced_multipartite(g.vertex_count() * s,
                                              g.vertex_count());
    case Family::kCompleteBipartite:
      return GraphSpec::complete_bipartite(g.class_sizes()[0] * s,
                                           g.class_sizes()[1] * s);
    case Family::kMultipartite: {
      std::vector<int> sizes = g.class_sizes();
      for (int& sz : sizes) sz *= s;
      return GraphSpec::multipartite(std::move(sizes));
    }
    case Family::kLayered:
      return GraphSpec::layered(g.vertex_count() * s,
                                static_cast<int>(g.class_sizes().size()));
    case Family::kExplicit: {
      std::vector<Edge> edges;
      for (const auto& [u, v] : g.edges())
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) edges.emplace_back(u * s + i, v * s + j);
      return GraphSpec::explicit_graph(g.vertex_count() * s, std::move(edges));
    }
  }
  throw Error("unreachable");
}

std::vector<int> neighbors_of(const GraphSpec& g, int v) {
  std::vector<int> nbrs;
  for (const auto& [a, b] : g.edges()) {
    if (a == v) nbrs.push_back(b);
    if (b == v) nbrs.push_back(a);
  }
  return nbrs;
}

}  // namespace

PtQ splitting_direction(const Drawing& d, int v) {
  const int n = d.n();
  const auto nbrs = neighbors_of(d.graph, v);
  const int target = static_cast<int>(nbrs.size()) / 2;
  const PtQ& pv = d.points[v];

  // Critical directions: both rays toward every other vertex. A valid
  // splitting direction exists strictly inside some angular gap between
  // consecutive critical directions.
  std::vector<PtQ> crit;
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    PtQ dd{d.points[w].x - pv.x, d.points[w].y - pv.y};
    crit.push_back(dd);
    crit.push_back({-dd.x, -dd.y});
  }
  std::sort(crit.begin(), crit.end(), [](const PtQ& a, const PtQ& b) {
    const bool ha = upper_half(a), hb = upper_half(b);
    if (ha != hb) return ha;
    return cross_sign(a, b) > 0;
  });

  const std::size_t m = crit.size();
  for (std::size_t i = 0; i < m; ++i) {
    const PtQ& a = crit[i];
    const PtQ& b = crit[(i + 1) % m];
    PtQ cand;
    const int cs = cross_sign(a, b);
    if (cs == 0) {
      // Same or antipodal direction: for an antipodal pair take the
      // perpendicular, otherwise the gap is empty.
      if (sgn(Rat(a.x * b.x + a.y * b.y)) > 0) continue;
      cand = {-a.y, a.x};
    } else {
      cand = {a.x + b.x, a.y + b.y};  // strictly inside the open cone
    }
    int left = 0;
    bool hits_vertex = false;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const int s = cross_sign(cand, {d.points[w].x - pv.x, d.points[w].y - pv.y});
      if (s == 0) {
        hits_vertex = true;
        break;
      }
    }
    if (hits_vertex) continue;
    for (int w : nbrs)
      if (cross_sign(cand, {d.points[w].x - pv.x, d.points[w].y - pv.y}) > 0)
        ++left;
    if (left == target) return cand;
  }
  throw NoValidDirection("no splitting direction found");
}

Drawing plant(const Drawing& seed, int s) {
  if (s < 1) throw Error("plant: s >= 1 required");
  const int n = seed.n();

  std::vector<PtQ> dirs(n);
  std::vector<PtQ> perps(n);
  std::vector<Rat> eps(n);
  for (int v = 0; v < n; ++v) {
    PtQ d = splitting_direction(seed, v);
    // Normalize to L-infinity norm 1 so the offset scale is meaningful.
    const Rat ax(abs(d.x)), ay(abs(d.y));
    const Rat norm = ax > ay ? ax : ay;
    d = {d.x / norm, d.y / norm};
    dirs[v] = d;
    perps[v] = {-d.y, d.x};
    Rat clearance;
    bool first = true;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      const Rat cx(abs(seed.points[w].x - seed.points[v].x));
      const Rat cy(abs(seed.points[w].y - seed.points[v].y));
      const Rat c = cx > cy ? cx : cy;
      if (first || c < clearance) clearance = c;
      first = false;
    }
    eps[v] = clearance / (8 * s);
  }

  const long long expected = planted_crossings(
      count_crossings(seed), seed.graph.degrees(), seed.graph.edge_count(), s);
  const GraphSpec planted_graph = blow_up(seed.graph, s);

  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<PtQ> pts;
    pts.reserve(n * s);
    for (int v = 0; v < n; ++v) {
      const Rat delta = eps[v] / (1 << 20);
      for (int k = 1; k <= s; ++k) {
        const Rat along = k * eps[v];
        const Rat off = k * k * delta;
        pts.push_back({seed.points[v].x + along * dirs[v].x + off * perps[v].x,
                       seed.points[v].y + along * dirs[v].y + off * perps[v].y});
      }
    }
    if (in_general_position(pts) &&
        count_crossings(pts, planted_graph.edges()) == expected)
      return Drawing(planted_graph, std::move(pts), CoordKind::kRational);
    for (int v = 0; v < n; ++v) eps[v] /= 2;
  }
  throw PlantingFailed("planted count never matched the closed form");
}

PlantReport verify_planted(const Drawing& planted, const Drawing& seed,
                           int s) {
  PlantReport rep;
  const long long seed_cr = count_crossings(seed);
  const auto degrees = seed.graph.degrees();
  const long long edge_count = seed.graph.edge_count();

  const long long s2 = static_cast<long long>(s) * s;
  rep.expected_four = seed_cr * s2 * s2;
  Int vt = 0;
  for (int dg : degrees)
    vt += binom(static_cast<long>(dg / 2), 2) +
          binom(static_cast<long>((dg + 1) / 2), 2);
  rep.expected_three = to_ll(vt) * s2 * s * (s - 1) / 2;
  rep.expected_two = edge_count * s2 * (s - 1) * (s - 1) / 4;
  rep.expected_total = planted_crossings(seed_cr, degrees, edge_count, s);

  const auto edges = planted.graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (!segments_cross(planted.points[a], planted.points[b],
                          planted.points[c], planted.points[d]))
        continue;
      ++rep.total;
      const std::set<int> clusters{a / s, b / s, c / s, d / s};
      switch (clusters.size()) {
        case 4: ++rep.four_cluster; break;
        case 3: ++rep.three_cluster; break;
        case 2: ++rep.two_cluster; break;
        default:
          throw ClassificationMismatch("crossing within a single cluster");
      }
    }
  }
  rep.ok = rep.total == rep.expected_total &&
           rep.four_cluster == rep.expected_four &&
           rep.three_cluster == rep.expected_three &&
           rep.two_cluster == rep.expected_two;
  return rep;
}

}  // namespace rcn
