#ifndef RCN_OPTIMIZER_HPP_
#define RCN_OPTIMIZER_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcn/drawing.hpp"
#include "rcn/graph_model.hpp"

namespace rcn {

// Randomized vertex-move local search: hill climbing with tie acceptance
// and step-size annealing over integer coordinates.
struct SearchConfig {
  // Minimum number of restart legs; more are scheduled while the time
  // budget lasts and the target has not been reached.
  int restarts = 32;
  int max_stale_moves = 400;
  long long initial_step = 1LL << 20;
  // step <- step * decay_num / decay_den after max_stale_moves
  // non-improving moves; restart leg ends when step reaches 0.
  long long decay_num = 1;
  long long decay_den = 2;
  long long box_half_width = 1LL << 20;
  std::uint64_t rng_seed = 1;
  double time_budget_secs = 10.0;
  // Stop all restarts early once a count <= target is found (-1: disabled).
  long long target = -1;
  bool serial = false;
};

struct RestartStats {
  int restart_index = 0;
  long long moves = 0;
  long long accepted = 0;
  long long final_count = 0;
};

struct SearchResult {
  Drawing best;
  long long best_count = 0;
  std::vector<RestartStats> trajectories;
};

using ProgressFn = std::function<void(const RestartStats&)>;

SearchResult optimize(const GraphSpec& g, const SearchConfig& cfg,
                      const ProgressFn& progress = nullptr);

// Persists the best drawing plus a metadata sidecar under store_dir,
// keyed by the graph slug. An existing record with an equal or better
// count is kept. Returns true if the store was updated.
bool record_best(const SearchResult& result, const SearchConfig& cfg,
                 const std::string& store_dir);

}  // namespace rcn

#endif  // RCN_OPTIMIZER_HPP_
