#ifndef RCN_EMBED_HPP_
#define RCN_EMBED_HPP_

#include <cstdint>
#include <vector>

#include "rcn/drawing.hpp"
#include "rcn/graph_model.hpp"
#include "rcn/hill.hpp"
#include "rcn/rational.hpp"

namespace rcn {

// Queryable crossing relation over the edge pairs of a host drawing of
// K_n. Symmetric; pairs sharing a vertex report false.
class HostOracle {
 public:
  static HostOracle from_hill(const HillModel& model);
  // Brute-forces the full crossing matrix of a rectilinear drawing; the
  // drawing must be of a complete graph.
  static HostOracle from_drawing(const Drawing& d);

  int n() const { return n_; }
  long long total_crossings() const { return total_; }
  bool crosses(int u1, int v1, int u2, int v2) const;

 private:
  std::size_t edge_index(int u, int v) const;
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<bool> matrix_;
  long long total_ = 0;
};

// Counts the guest's independent edge pairs that a uniform random
// bijection (Fisher-Yates over SplitMix64) maps onto crossing host pairs.
// Deterministic given rng_seed.
long long embed_once(const GraphSpec& g, const HostOracle& host,
                     std::uint64_t rng_seed);

struct McStats {
  long long samples = 0;
  double mean = 0;
  double variance = 0;  // population variance of the sample
  long long min = 0;
  long long max = 0;
};

McStats embed_mc(const GraphSpec& g, const HostOracle& host, long long samples,
                 std::uint64_t rng_seed);

// Exact mean over all n! bijections; n <= 8 enforced.
Rat embed_exhaustive_mean(const GraphSpec& g, const HostOracle& host);

}  // namespace rcn

#endif  // RCN_EMBED_HPP_
