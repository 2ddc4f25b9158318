#include "rcn/embed.hpp"

#include <algorithm>
#include <numeric>

#include "rcn/crossing.hpp"
#include "rcn/rng.hpp"

namespace rcn {
namespace {

// Unordered pairs of independent guest edges.
std::vector<std::pair<Edge, Edge>> independent_edge_pairs(const GraphSpec& g) {
  const auto edges = g.edges();
  std::vector<std::pair<Edge, Edge>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) pairs.push_back({edges[i], edges[j]});
    }
  return pairs;
}

long long count_for_permutation(
    const std::vector<std::pair<Edge, Edge>>& pairs, const HostOracle& host,
    const std::vector<int>& perm) {
  long long c = 0;
  for (const auto& [e, f] : pairs)
    if (host.crosses(perm[e.first], perm[e.second], perm[f.first],
                     perm[f.second]))
      ++c;
  return c;
}

}  // namespace

HostOracle HostOracle::from_hill(const HillModel& model) {
  HostOracle h;
  h.n_ = model.n();
  const auto& edges = model.edges();
  h.m_ = edges.size();
  h.matrix_.assign(h.m_ * h.m_, false);
  for (std::size_t i = 0; i < h.m_; ++i)
    for (std::size_t j = i + 1; j < h.m_; ++j)
      if (model.crosses(edges[i], edges[j])) {
        h.matrix_[i * h.m_ + j] = h.matrix_[j * h.m_ + i] = true;
        ++h.total_;
      }
  return h;
}

HostOracle HostOracle::from_drawing(const Drawing& d) {
  if (d.graph.family() != Family::kComplete)
    throw SizeMismatch("host drawing must be of a complete graph");
  HostOracle h;
  h.n_ = d.n();
  const auto edges = d.graph.edges();
  h.m_ = edges.size();
  h.matrix_.assign(h.m_ * h.m_, false);
  for (std::size_t i = 0; i < h.m_; ++i)
    for (std::size_t j = i + 1; j < h.m_; ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d2] = edges[j];
      if (a == c || a == d2 || b == c || b == d2) continue;
      if (segments_cross(d.points[a], d.points[b], d.points[c],
                         d.points[d2])) {
        h.matrix_[i * h.m_ + j] = h.matrix_[j * h.m_ + i] = true;
        ++h.total_;
      }
    }
  return h;
}

std::size_t HostOracle::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const long long n = n_;
  return static_cast<std::size_t>(u * n - static_cast<long long>(u) * (u + 1) / 2 +
                                  (v - u - 1));
}

bool HostOracle::crosses(int u1, int v1, int u2, int v2) const {
  if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return false;
  return matrix_[edge_index(u1, v1) * m_ + edge_index(u2, v2)];
}

long long embed_once(const GraphSpec& g, const HostOracle& host,
                     std::uint64_t rng_seed) {
  if (g.vertex_count() != host.n())
    throw SizeMismatch("guest and host vertex counts differ");
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(rng_seed);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return count_for_permutation(independent_edge_pairs(g), host, perm);
}

McStats embed_mc(const GraphSpec& g, const HostOracle& host, long long samples,
                 std::uint64_t rng_seed) {
  if (g.vertex_count() != host.n())
    throw SizeMismatch("guest and host vertex counts differ");
  if (samples < 1) throw Error("embed_mc: samples >= 1 required");
  const int n = g.vertex_count();
  const auto pairs = independent_edge_pairs(g);
  std::vector<int> perm(n);
  McStats st;
  st.samples = samples;
  long long sum = 0;
  long long sum_sq = 0;
  for (long long s = 0; s < samples; ++s) {
    // Per-sample derived seed keeps aggregation order-independent.
    SplitMix64 rng(rng_seed + static_cast<std::uint64_t>(s));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    const long long c = count_for_permutation(pairs, host, perm);
    sum += c;
    sum_sq += c * c;
    if (s == 0) {
      st.min = st.max = c;
    } else {
      st.min = std::min(st.min, c);
      st.max = std::max(st.max, c);
    }
  }
  st.mean = static_cast<double>(sum) / static_cast<double>(samples);
  st.variance = static_cast<double>(sum_sq) / static_cast<double>(samples) -
                st.mean * st.mean;
  return st;
}

Rat embed_exhaustive_mean(const GraphSpec& g, const HostOracle& host) {
  if (g.vertex_count() != host.n())
    throw SizeMismatch("guest and host vertex counts differ");
  const int n = g.vertex_count();
  if (n > 8) throw Error("exhaustive mode supports n <= 8");
  const auto pairs = independent_edge_pairs(g);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Int sum = 0;
  Int count = 0;
  do {
    sum += static_cast<long>(count_for_permutation(pairs, host, perm));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rat(sum) / Rat(count);
}

}  // namespace rcn
