#include "rcn/graph_model.hpp"

#include <set>

#include "doctest.h"

using namespace rcn;

namespace {

// Brute-force oracle over all C(||G||, 2) edge pairs.
Int independent_pairs_bruteforce(const GraphSpec& g) {
  const auto edges = g.edges();
  Int count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      std::set<int> ends{edges[i].first, edges[i].second, edges[j].first,
                         edges[j].second};
      if (ends.size() == 4) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("edge lists") {
  CHECK(GraphSpec::complete(3).edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(GraphSpec::layered(4, 2).edges() ==
        std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(GraphSpec::balanced_multipartite(4, 2).edges() ==
        std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("independent pair counts") {
  CHECK(GraphSpec::complete(4).independent_pairs() == 3);
  CHECK(GraphSpec::balanced_multipartite(6, 3).independent_pairs() == 30);
  const auto l63 = GraphSpec::layered(6, 3);
  CHECK(l63.edge_count() == 8);
  CHECK(l63.independent_pairs() == independent_pairs_bruteforce(l63));
}

TEST_CASE("closed form equals brute force for small families") {
  std::vector<GraphSpec> specs;
  for (int n = 2; n <= 12; ++n) specs.push_back(GraphSpec::complete(n));
  for (int m = 1; m <= 6; ++m)
    for (int n = m; n <= 6; ++n)
      specs.push_back(GraphSpec::complete_bipartite(m, n));
  for (int r = 2; r <= 4; ++r)
    for (int n = r; n <= 12; n += r) {
      specs.push_back(GraphSpec::balanced_multipartite(n, r));
      specs.push_back(GraphSpec::layered(n, r));
    }
  specs.push_back(GraphSpec::multipartite({3, 2, 2, 2}));
  specs.push_back(GraphSpec::explicit_graph(5, {{0, 1}, {1, 2}, {3, 4}}));
  for (const auto& g : specs)
    CHECK(g.independent_pairs() == independent_pairs_bruteforce(g));
}

TEST_CASE("degree structure of layered graphs") {
  const auto g = GraphSpec::layered(12, 3);
  CHECK(g.edge_count() == 2 * 4 * 4);
  const auto d = g.degrees();
  for (int v = 0; v < 4; ++v) CHECK(d[v] == 4);
  for (int v = 4; v < 8; ++v) CHECK(d[v] == 8);
  for (int v = 8; v < 12; ++v) CHECK(d[v] == 4);
}

TEST_CASE("balanced multipartite count approaches the quartic form") {
  // Exact count minus (1/2)((r-1)/r)^2 (n^4/4 - n^3) stays within n^2.
  for (int r = 2; r <= 5; ++r)
    for (int n = r; n <= 200; n += r) {
      const auto g = GraphSpec::balanced_multipartite(n, r);
      const Rat ratio(static_cast<long>(r - 1), static_cast<long>(r));
      const Rat n4 = Rat(Int(n) * n * n * n);
      const Rat n3 = Rat(Int(n) * n * n);
      const Rat approx = ratio * ratio / 2 * (n4 / 4 - n3);
      Rat diff = Rat(g.independent_pairs()) - approx;
      const Rat bound = Rat(Int(n) * n);
      CHECK(diff <= bound);
      CHECK(-diff <= bound);
    }
}

TEST_CASE("layered count matches the exact degree-sum identity") {
  // E = (r-1)m^2; sum_v C(d,2) = m^2(m-1) + (r-2)m^2(2m-1) for layer
  // size m = n/r; independent pairs = C(E,2) - sum_v C(d,2).
  for (int r = 2; r <= 6; ++r)
    for (int n = r; n <= 120; n += r) {
      const auto g = GraphSpec::layered(n, r);
      const Int m = n / r;
      const Int e = (r - 1) * m * m;
      const Int expected =
          e * (e - 1) / 2 - m * m * ((m - 1) + (r - 2) * (2 * m - 1));
      CHECK(g.independent_pairs() == expected);
    }
}

TEST_CASE("divisibility requirements") {
  CHECK_THROWS_AS(GraphSpec::balanced_multipartite(9, 4), DivisibilityError);
  CHECK_THROWS_AS(GraphSpec::layered(7, 3), DivisibilityError);
  // K_9^4 goes through explicit sizes.
  const auto k94 = GraphSpec::multipartite({3, 2, 2, 2});
  CHECK(k94.vertex_count() == 9);
  CHECK(k94.class_of(0) == 0);
  CHECK(k94.class_of(3) == 1);
  CHECK(k94.class_of(8) == 3);
}
