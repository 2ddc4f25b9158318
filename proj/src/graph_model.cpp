#include "rcn/graph_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rcn {

GraphSpec GraphSpec::complete(int n) {
  GraphSpec g;
  g.family_ = Family::kComplete;
  g.n_ = n;
  return g;
}

GraphSpec GraphSpec::complete_bipartite(int m, int n) {
  GraphSpec g;
  g.family_ = Family::kCompleteBipartite;
  g.n_ = m + n;
  g.class_sizes_ = {m, n};
  return g;
}

GraphSpec GraphSpec::balanced_multipartite(int n, int r) {
  if (r < 1 || n % r != 0)
    throw DivisibilityError("balanced_multipartite: r must divide n");
  return multipartite(std::vector<int>(r, n / r));
}

GraphSpec GraphSpec::multipartite(std::vector<int> sizes) {
  GraphSpec g;
  g.family_ = Family::kMultipartite;
  g.n_ = std::accumulate(sizes.begin(), sizes.end(), 0);
  g.class_sizes_ = std::move(sizes);
  return g;
}

GraphSpec GraphSpec::layered(int n, int r) {
  if (r < 1 || n % r != 0) throw DivisibilityError("layered: r must divide n");
  GraphSpec g;
  g.family_ = Family::kLayered;
  g.n_ = n;
  g.class_sizes_ = std::vector<int>(r, n / r);
  return g;
}

GraphSpec GraphSpec::explicit_graph(int n, std::vector<Edge> edge_list) {
  GraphSpec g;
  g.family_ = Family::kExplicit;
  g.n_ = n;
  for (auto& [u, v] : edge_list)
    if (u > v) std::swap(u, v);
  std::sort(edge_list.begin(), edge_list.end());
  g.explicit_edges_ = std::move(edge_list);
  return g;
}

int GraphSpec::class_of(int v) const {
  if (family_ == Family::kComplete) return v;
  if (family_ == Family::kExplicit) return 0;
  int c = 0, acc = 0;
  for (int s : class_sizes_) {
    acc += s;
    if (v < acc) return c;
    ++c;
  }
  return c;
}

std::vector<Edge> GraphSpec::edges() const {
  std::vector<Edge> e;
  switch (family_) {
    case Family::kComplete:
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) e.emplace_back(i, j);
      break;
    case Family::kCompleteBipartite:
    case Family::kMultipartite:
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
          if (class_of(i) != class_of(j)) e.emplace_back(i, j);
      break;
    case Family::kLayered:
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
          if (class_of(j) - class_of(i) == 1) e.emplace_back(i, j);
      break;
    case Family::kExplicit:
      e = explicit_edges_;
      break;
  }
  return e;
}

std::vector<int> GraphSpec::degrees() const {
  std::vector<int> d(n_, 0);
  for (const auto& [u, v] : edges()) {
    ++d[u];
    ++d[v];
  }
  return d;
}

long long GraphSpec::edge_count() const {
  return static_cast<long long>(edges().size());
}

Int GraphSpec::independent_pairs() const {
  Int total = binom(edge_count(), 2);
  for (int d : degrees()) total -= binom(static_cast<long>(d), 2);
  return total;
}

std::string GraphSpec::slug() const {
  std::ostringstream os;
  switch (family_) {
    case Family::kComplete:
      os << "k" << n_;
      break;
    case Family::kCompleteBipartite:
      os << "k" << class_sizes_[0] << "_" << class_sizes_[1];
      break;
    case Family::kMultipartite: {
      os << "kpart";
      for (int s : class_sizes_) os << "_" << s;
      break;
    }
    case Family::kLayered:
      os << "l" << n_ << "_" << class_sizes_.size();
      break;
    case Family::kExplicit:
      os << "explicit" << n_ << "_" << explicit_edges_.size();
      break;
  }
  return os.str();
}

}  // namespace rcn
