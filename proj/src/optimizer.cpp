#include "rcn/optimizer.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rcn/crossing.hpp"
#include "rcn/rng.hpp"

namespace rcn {
namespace {

using Clock = std::chrono::steady_clock;

struct RestartOutcome {
  RestartStats stats;
  std::vector<PtI> best_points;
  long long best_count = 0;
};

// Crossings involving the edges incident to v (pairs of incident edges
// share v and never count). This is the only part of the total a move of
// v can change.
long long local_crossings(const std::vector<PtI>& pts,
                          const std::vector<Edge>& edges,
                          const std::vector<std::vector<int>>& incident,
                          int v) {
  long long c = 0;
  for (int ei : incident[v]) {
    const auto [a, b] = edges[ei];
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const auto [p, q] = edges[j];
      if (p == v || q == v) continue;  // counted once, from the incident side
      if (p == a || p == b || q == a || q == b) continue;
      if (segments_cross(pts[a], pts[b], pts[p], pts[q])) ++c;
    }
  }
  return c;
}

bool position_keeps_general_position(const std::vector<PtI>& pts, int v,
                                     const PtI& cand) {
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    if (pts[i] == cand) return false;
    for (int j = i + 1; j < n; ++j) {
      if (j == v) continue;
      if (orient(pts[i], pts[j], cand) == 0) return false;
    }
  }
  return true;
}

std::vector<PtI> random_general_position(int n, long long box,
                                         SplitMix64& rng) {
  std::vector<PtI> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    PtI cand{rng.range(-box, box), rng.range(-box, box)};
    pts.push_back(cand);
    if (!position_keeps_general_position(pts, static_cast<int>(pts.size()) - 1,
                                         cand))
      pts.pop_back();
  }
  return pts;
}

RestartOutcome run_restart(const GraphSpec& g, const SearchConfig& cfg,
                           int restart_index, Clock::time_point deadline,
                           std::atomic<long long>& global_best) {
  SplitMix64 rng(cfg.rng_seed + static_cast<std::uint64_t>(restart_index));
  const int n = g.vertex_count();
  const auto edges = g.edges();
  std::vector<std::vector<int>> incident(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].first].push_back(static_cast<int>(i));
    incident[edges[i].second].push_back(static_cast<int>(i));
  }

  auto pts = random_general_position(n, cfg.box_half_width, rng);
  long long total = count_crossings(pts, edges);

  RestartOutcome out;
  out.stats.restart_index = restart_index;
  out.best_points = pts;
  out.best_count = total;

  long long step = cfg.initial_step;
  int stale = 0;
  while (step > 0) {
    if ((out.stats.moves & 0x3f) == 0 && Clock::now() >= deadline) break;
    if (cfg.target >= 0 &&
        global_best.load(std::memory_order_relaxed) <= cfg.target)
      break;

    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    long long dx, dy;
    do {
      dx = rng.range(-step, step);
      dy = rng.range(-step, step);
    } while (dx * dx + dy * dy > step * step || (dx == 0 && dy == 0));
    const PtI cand{pts[v].x + dx, pts[v].y + dy};
    ++out.stats.moves;

    bool improved = false;
    if (std::abs(cand.x) <= cfg.box_half_width &&
        std::abs(cand.y) <= cfg.box_half_width &&
        position_keeps_general_position(pts, v, cand)) {
      const long long before = local_crossings(pts, edges, incident, v);
      const PtI old = pts[v];
      pts[v] = cand;
      const long long after = local_crossings(pts, edges, incident, v);
      const long long proposed = total - before + after;
      if (proposed <= total) {  // ties accepted
        improved = proposed < total;
        total = proposed;
        ++out.stats.accepted;
        if (total < out.best_count) {
          out.best_count = total;
          out.best_points = pts;
          long long seen = global_best.load(std::memory_order_relaxed);
          while (total < seen && !global_best.compare_exchange_weak(
                                     seen, total, std::memory_order_relaxed)) {
          }
        }
      } else {
        pts[v] = old;
      }
    }

    // Incremental bookkeeping must agree with a from-scratch recount.
    if (out.stats.moves % 1000 == 0 && total != count_crossings(pts, edges))
      throw Error("optimizer: incremental count diverged from recount");

    if (improved) {
      stale = 0;
      step = cfg.initial_step;
    } else if (++stale > cfg.max_stale_moves) {
      stale = 0;
      step = step * cfg.decay_num / cfg.decay_den;
    }
  }

  if (total != count_crossings(pts, edges))
    throw Error("optimizer: incremental count diverged at termination");
  out.stats.final_count = total;
  return out;
}

std::string config_hash(const SearchConfig& cfg) {
  std::ostringstream os;
  os << cfg.restarts << "|" << cfg.max_stale_moves << "|" << cfg.initial_step
     << "|" << cfg.decay_num << "/" << cfg.decay_den << "|"
     << cfg.box_half_width << "|" << cfg.rng_seed << "|"
     << cfg.time_budget_secs;
  const std::string s = os.str();
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

}  // namespace

SearchResult optimize(const GraphSpec& g, const SearchConfig& cfg,
                      const ProgressFn& progress) {
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(
                         std::chrono::duration<double>(cfg.time_budget_secs));
  std::atomic<long long> global_best{LLONG_MAX};

  // At least cfg.restarts legs run; extra legs are scheduled while time
  // remains and the target (if any) is unmet.
  auto more_legs = [&](int started) {
    if (started < cfg.restarts) return true;
    if (Clock::now() >= deadline) return false;
    return cfg.target < 0 ||
           global_best.load(std::memory_order_relaxed) > cfg.target;
  };

  std::mutex mu;
  std::vector<RestartOutcome> outcomes;
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      int i;
      {
        std::lock_guard lk(mu);
        i = next.load();
        if (!more_legs(i)) break;
        next.store(i + 1);
      }
      auto out = run_restart(g, cfg, i, deadline, global_best);
      std::lock_guard lk(mu);
      if (progress) progress(out.stats);
      outcomes.push_back(std::move(out));
    }
  };

  if (cfg.serial) {
    worker();
  } else {
    const unsigned workers =
        std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Pure min aggregation; ties go to the lowest restart index.
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i) {
    const bool better =
        outcomes[i].best_count < outcomes[best_i].best_count ||
        (outcomes[i].best_count == outcomes[best_i].best_count &&
         outcomes[i].stats.restart_index <
             outcomes[best_i].stats.restart_index);
    if (better) best_i = i;
  }

  SearchResult result;
  result.best = make_integer_drawing(g, outcomes[best_i].best_points);
  result.best_count = outcomes[best_i].best_count;
  for (const auto& o : outcomes) result.trajectories.push_back(o.stats);
  if (result.best_count != count_crossings(result.best))
    throw Error("optimizer: best count failed final re-verification");
  return result;
}

bool record_best(const SearchResult& result, const SearchConfig& cfg,
                 const std::string& store_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(store_dir, ec);
  if (ec) throw IOError("cannot create store directory: " + store_dir);

  const std::string slug = result.best.graph.slug();
  const fs::path drawing_path = fs::path(store_dir) / (slug + ".json");
  const fs::path meta_path = fs::path(store_dir) / (slug + ".meta.json");

  if (fs::exists(meta_path)) {
    std::ifstream in(meta_path);
    nlohmann::json meta;
    try {
      in >> meta;
      if (meta.at("count").get<long long>() <= result.best_count)
        return false;  // kept existing
    } catch (...) {
      throw IOError("corrupt metadata record: " + meta_path.string());
    }
  }

  save_drawing(drawing_path.string(), result.best);
  nlohmann::json meta;
  meta["graph"] = result.best.graph.slug();
  meta["count"] = result.best_count;
  meta["seed"] = cfg.rng_seed;
  meta["config_hash"] = config_hash(cfg);
  meta["timestamp"] = static_cast<long long>(
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count());
  std::ofstream out(meta_path);
  if (!out) throw IOError("cannot write metadata: " + meta_path.string());
  out << meta.dump(2) << "\n";
  return true;
}

}  // namespace rcn
