#ifndef RCN_HILL_HPP_
#define RCN_HILL_HPP_

#include <vector>

#include "rcn/graph_model.hpp"
#include "rcn/rational.hpp"

namespace rcn {

// Combinatorial model of Hill's cylindrical drawing of K_n: ceil(n/2)
// vertices equidistant on the top circle, floor(n/2) on the bottom circle
// shifted by half a step. Cap edges are chords on their cap; top-bottom
// edges take the shorter way around the lateral surface. Crossings are
// decided with exact rational angle arithmetic (angles as fractions of a
// full turn); construction self-checks the total against H(n).
class HillModel {
 public:
  explicit HillModel(int n);  // throws ModelInconsistent if total != H(n)

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // True iff the drawn curves of two independent edges cross. Edges are
  // given as vertex pairs (u < v); vertices 0..ceil(n/2)-1 are on the top
  // circle, the rest on the bottom.
  bool crosses(const Edge& e1, const Edge& e2) const;

  long long total() const { return total_; }

 private:
  std::size_t edge_index(const Edge& e) const;

  int n_;
  int top_count_;
  std::vector<Edge> edges_;
  std::vector<bool> matrix_;  // flattened upper triangle over edge pairs
  long long total_ = 0;
};

}  // namespace rcn

#endif  // RCN_HILL_HPP_
