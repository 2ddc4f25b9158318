#ifndef RCN_GRAPH_MODEL_HPP_
#define RCN_GRAPH_MODEL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "rcn/errors.hpp"
#include "rcn/rational.hpp"

namespace rcn {

enum class Family {
  kComplete,
  kCompleteBipartite,
  kMultipartite,
  kLayered,
  kExplicit,
};

using Edge = std::pair<int, int>;

// A symbolic graph family together with its exact combinatorics.
// Classes / layers occupy contiguous vertex-index ranges in declaration
// order; this fixes the meaning of the class arrays in drawing files.
class GraphSpec {
 public:
  static GraphSpec complete(int n);
  static GraphSpec complete_bipartite(int m, int n);
  // K_n^r with r | n; throws DivisibilityError otherwise. Unbalanced
  // variants (e.g. K_9^4 = sizes 3,2,2,2) go through multipartite().
  static GraphSpec balanced_multipartite(int n, int r);
  static GraphSpec multipartite(std::vector<int> sizes);
  // L_n^r: r layers of n/r vertices, complete bipartite between
  // consecutive layers. Throws DivisibilityError if r does not divide n.
  static GraphSpec layered(int n, int r);
  static GraphSpec explicit_graph(int n, std::vector<Edge> edge_list);

  Family family() const { return family_; }
  int vertex_count() const { return n_; }
  // Class sizes (empty for complete and explicit graphs).
  const std::vector<int>& class_sizes() const { return class_sizes_; }
  // Class index of a vertex; for complete graphs every vertex is its own
  // class, for explicit graphs there is a single class.
  int class_of(int v) const;

  // Deterministic sorted edge list.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  long long edge_count() const;

  // C(||G||, 2) - sum_v C(d(v), 2): unordered pairs of edges sharing no
  // endpoint, the quantity entering the random-embedding expectation.
  Int independent_pairs() const;

  // The vertex-count parameters used by family formulas.
  int param_r() const { return static_cast<int>(class_sizes_.size()); }

  // Human-readable tag, also used for store file names.
  std::string slug() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;

 private:
  GraphSpec() = default;
  Family family_ = Family::kComplete;
  int n_ = 0;
  std::vector<int> class_sizes_;
  std::vector<Edge> explicit_edges_;
};

}  // namespace rcn

#endif  // RCN_GRAPH_MODEL_HPP_
