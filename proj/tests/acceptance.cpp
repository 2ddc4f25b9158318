// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria with a runtime budget fail when the budget is blown.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "rcn/closed_forms.hpp"
#include "rcn/crossing.hpp"
#include "rcn/drawing.hpp"
#include "rcn/embed.hpp"
#include "rcn/hill.hpp"
#include "rcn/optimizer.hpp"
#include "rcn/planter.hpp"
#include "rcn/rng.hpp"

using namespace rcn;

namespace {

int g_failures = 0;

void run(int index, const std::string& label, double budget_secs,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (budget_secs > 0 && secs > budget_secs) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "over time budget";
  }
  if (!ok) ++g_failures;
  std::printf("criterion %2d: %s  (%.2fs)  %s%s%s\n", index,
              ok ? "PASS" : "FAIL", secs, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

std::vector<PtI> random_gp_points(int n, SplitMix64& rng) {
  while (true) {
    std::vector<PtI> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i)
      pts.push_back({rng.range(-100000, 100000), rng.range(-100000, 100000)});
    if (in_general_position(pts)) return pts;
  }
}

bool criterion1(std::string& detail) {
  const long long c = count_crossings(dataset_k24());
  if (c != 2033) {
    detail = "dataset count " + std::to_string(c);
    return false;
  }
  return true;
}

bool criterion2(std::string& detail) {
  for (int n = 4; n <= 14; ++n) {
    const HillModel m(n);  // self-checks against the closed form
    if (m.total() != hill_number(n)) {
      detail = "n=" + std::to_string(n);
      return false;
    }
  }
  return hill_number(10) == 60 && hill_number(12) == 150;
}

bool criterion3(std::string& detail) {
  SplitMix64 rng(314159);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const auto pts = random_gp_points(n, rng);
    const long long direct =
        count_crossings(pts, GraphSpec::complete(n).edges());
    if (crossings_from_kedges(k_edge_vector(pts)) != direct) {
      detail = "mismatch at trial " + std::to_string(trial);
      return false;
    }
  }
  return true;
}

bool criterion4(std::string& detail) {
  const auto rows = table1(10, 161);
  if (rows.size() != 152) {
    detail = "row count";
    return false;
  }
  std::ifstream in(std::string(RCN_TEST_DATA_DIR) + "/table1_expected.csv");
  if (!in) {
    detail = "missing expected table";
    return false;
  }
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (i >= rows.size()) {
      detail = "extra row " + line;
      return false;
    }
    std::ostringstream want;
    want << rows[i].n << "," << rows[i].hill << "," << rows[i].lower_bound;
    if (line != want.str()) {
      detail = "row " + std::to_string(i) + ": " + line;
      return false;
    }
    ++i;
  }
  if (i != 152) {
    detail = "expected table truncated";
    return false;
  }
  struct Spot { int n; long long h, lb; };
  for (const Spot s : {Spot{10, 60, 62}, Spot{47, 64009, 64893},
                       Spot{158, 9252243, 9372519},
                       Spot{161, 9985600, 10114482}}) {
    if (hill_number(s.n) != s.h || lower_bound_crn(s.n) != s.lb) {
      detail = "spot row n=" + std::to_string(s.n);
      return false;
    }
  }
  const auto rep = verify_proposition1();
  Rat expected_constant(9372519, 599809080L);
  expected_constant.canonicalize();
  if (!rep.ok || !rep.violations.empty() || rep.constant != expected_constant ||
      !rep.constant_exceeds_1_64) {
    detail = "proposition check";
    return false;
  }
  return true;
}

bool criterion5(std::string& detail) {
  const auto lib = seed_library();
  for (const char* name :
       {"k4_planar", "k2_edge", "k22", "layered_3", "layered_4"}) {
    const Drawing& seed = lib.at(name);
    const long long seed_cr = count_crossings(seed);
    for (int s = 1; s <= 3; ++s) {
      const Drawing planted = plant(seed, s);
      const long long expected = planted_crossings(
          seed_cr, seed.graph.degrees(), seed.graph.edge_count(), s);
      if (count_crossings(planted) != expected) {
        detail = std::string(name) + " s=" + std::to_string(s) + " count";
        return false;
      }
      const auto rep = verify_planted(planted, seed, s);
      if (!rep.ok) {
        detail = std::string(name) + " s=" + std::to_string(s) + " classes";
        return false;
      }
      if (std::string(name) == "k4_planar" && s == 2 &&
          (rep.four_cluster != 0 || rep.three_cluster != 16 ||
           rep.two_cluster != 6)) {
        detail = "k4 s=2 signature split";
        return false;
      }
    }
  }
  return true;
}

bool criterion6(std::string& detail) {
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n)
      if (count_crossings(generate_zarankiewicz(m, n)) !=
          zarankiewicz_number(m, n)) {
        detail = "zarankiewicz " + std::to_string(m) + "," + std::to_string(n);
        return false;
      }
  for (int r = 2; r <= 10; ++r)
    if (count_crossings(generate_layered(r)) != 0) {
      detail = "layered r=" + std::to_string(r);
      return false;
    }
  return true;
}

bool criterion7(std::string& detail) {
  const auto host6 = HostOracle::from_hill(HillModel(6));
  if (embed_exhaustive_mean(GraphSpec::balanced_multipartite(6, 3), host6) !=
      Rat(2)) {
    detail = "six-vertex exhaustive mean";
    return false;
  }
  const auto host7 = HostOracle::from_hill(HillModel(7));
  for (const auto& g : {GraphSpec::complete(7), GraphSpec::layered(7, 7),
                        GraphSpec::multipartite({3, 2, 2}),
                        GraphSpec::complete_bipartite(3, 4)}) {
    const Rat want = expected_crossings_random_embedding(
                         g, host7.total_crossings(), 7)
                         .exact;
    if (embed_exhaustive_mean(g, host7) != want) {
      detail = "seven-vertex exhaustive mean for " + g.slug();
      return false;
    }
  }
  const auto g84 = GraphSpec::balanced_multipartite(8, 4);
  const auto host8 = HostOracle::from_hill(HillModel(8));
  const double expect = 468.0 / 35.0;
  int within = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto st = embed_mc(g84, host8, 10000, seed);
    const double se = std::sqrt(st.variance / st.samples);
    if (std::abs(st.mean - expect) <= 3 * se) ++within;
  }
  if (within < 20) {  // >= 99% of 20 runs means all of them
    detail = std::to_string(within) + "/20 runs within 3 SE";
    return false;
  }
  return true;
}

bool criterion8(std::string& detail) {
  struct Target {
    GraphSpec g;
    long long target;
    double budget;
  };
  const std::vector<Target> targets{
      {GraphSpec::balanced_multipartite(8, 4), 8, 60.0},
      {GraphSpec::multipartite({3, 2, 2, 2}), 15, 60.0},
      {GraphSpec::balanced_multipartite(24, 4), 2300, 600.0},
  };
  for (const auto& t : targets) {
    SearchConfig cfg;
    cfg.time_budget_secs = t.budget;
    cfg.target = t.target;
    cfg.rng_seed = 2026;
    const auto r = optimize(t.g, cfg);
    if (count_crossings(r.best) != r.best_count) {
      detail = t.g.slug() + ": recount mismatch";
      return false;
    }
    if (r.best_count > t.target) {
      detail = t.g.slug() + ": best " + std::to_string(r.best_count) +
               " > " + std::to_string(t.target);
      return false;
    }
  }
  return true;
}

bool criterion9(std::string& detail) {
  if (planted_coefficient(0, 4, 1).exact != Rat(7, 512) ||
      planted_coefficient(8, 4, 2).exact != Rat(19, 2048) ||
      planted_coefficient(2033, 4, 6).exact != Rat(2951, 331776L)) {
    detail = "planted coefficient";
    return false;
  }
  for (int n = 4; n <= 1000; ++n) {
    const Rat lhs = Rat(static_cast<long>(hill_number(n))) /
                    (3 * Rat(binom(static_cast<long>(n), 4)));
    const Rat rhs = Rat(1, 8) * (1 - Rat(2, static_cast<long>(n)));
    if (lhs > rhs) {
      detail = "ratio inequality fails at n=" + std::to_string(n);
      return false;
    }
  }
  return true;
}

bool criterion10(std::string& detail) {
  // Leading-coefficient surrogates for the asymptotic statements.
  // (a) Expected crossings of a random four-class embedding, normalized by
  //     C(n,4), increase monotonically toward 27/128 and never exceed it.
  const Rat limit(27, 128);
  Rat prev(-1);
  for (int n = 8; n <= 64; n += 4) {
    const auto g = GraphSpec::balanced_multipartite(n, 4);
    const Rat e = expected_crossings_random_embedding(g, hill_number(n), n)
                      .exact /
                  Rat(binom(static_cast<long>(n), 4));
    if (e <= prev || e >= limit) {
      detail = "normalized expectation trend at n=" + std::to_string(n);
      return false;
    }
    prev = e;
  }
  // (b) The strict gap supporting cr < cr-bar on four classes at n=8: the
  //     curved upper construction gives 6, below the verified straight-line
  //     optimum 8.
  if (harborth_upper(8, 4) != Rat(6) || !(Rat(6) < Rat(8))) {
    detail = "eight-vertex gap";
    return false;
  }
  // (c) Coefficient ordering of the bound evaluators at large n.
  const auto b = bound_evaluators(100000, 4, kQBarHigh, Rat(7, 512));
  if (!(b.at("knr_harborth_approx").exact <
        b.at("knr_rectilinear_upper").exact) ||
      !(b.at("layered_conditional_lower").exact <
        b.at("layered_planted").exact) ||
      !(b.at("knr_lower_from_kr").exact <
        b.at("knr_rectilinear_upper").exact)) {
    detail = "evaluator ordering";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  run(1, "embedded 24-point dataset counts 2033", 1.0, criterion1);
  run(2, "cylindrical model totals match H(n), n=4..14", 5.0, criterion2);
  run(3, "k-edge identity on 200 random drawings", 10.0, criterion3);
  run(4, "table rows and induction constant", 5.0, criterion4);
  run(5, "planting matches the closed form per signature", 30.0, criterion5);
  run(6, "generator crossing counts", 0.0, criterion6);
  run(7, "random embedding: exact means and Monte Carlo", 60.0, criterion7);
  run(8, "optimizer reaches published counts", 0.0, criterion8);
  run(9, "closed-form constants and ratio inequality", 0.0, criterion9);
  run(10, "asymptotic surrogates", 0.0, criterion10);
  if (g_failures) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
