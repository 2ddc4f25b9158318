#ifndef RCN_CROSSING_HPP_
#define RCN_CROSSING_HPP_

#include <string>
#include <vector>

#include "rcn/drawing.hpp"
#include "rcn/exact_geom.hpp"
#include "rcn/graph_model.hpp"
#include "rcn/rational.hpp"

namespace rcn {

// Number of unordered pairs of independent edges whose straight segments
// properly cross. O(||G||^2) segment tests.
long long count_crossings(const std::vector<PtQ>& pts,
                          const std::vector<Edge>& edges);
long long count_crossings(const std::vector<PtI>& pts,
                          const std::vector<Edge>& edges);
long long count_crossings(const Drawing& d);

// Counts e_j of ordered j-edges of a point set: (p,q) is a j-edge when
// exactly j points lie strictly left of the directed line p -> q.
struct KEdgeVector {
  int n = 0;
  std::vector<long long> e;  // e[j], j = 0 .. n-2

  long long prefix(int k) const {  // E_k
    long long s = 0;
    for (int j = 0; j <= k && j < static_cast<int>(e.size()); ++j) s += e[j];
    return s;
  }
};

// Rotational sweep, O(n^2 log n). Requires general position and n >= 3.
KEdgeVector k_edge_vector(const std::vector<PtQ>& pts);
KEdgeVector k_edge_vector(const std::vector<PtI>& pts);

// The k-edge crossing identity for complete-graph drawings:
//   sum_{k < (n-2)/2} (n-2k-3) E_k - (3/4) C(n,3) + c_n,
// with c_n = E_{(n-3)/2} / 4 for odd n and 0 otherwise. Evaluated in exact
// rationals; throws IdentityViolation if the result is not a nonnegative
// integer.
long long crossings_from_kedges(const KEdgeVector& v);

// Lower bound on the rectilinear crossing number of K_n obtained by
// plugging E_k >= 3 C(k+2,2) + sum_{j=floor(n/3)}^{k} (3j-n+3) into the
// identity above and taking the ceiling.
//
// Note: the bound is usually quoted with a bare 3 C(k,2) term, which does
// not reproduce the published table (it would give a negative bound at
// n = 10); the C(k+2,2) form reproduces every row.
long long lower_bound_crn(int n);

struct Table1Row {
  int n;
  long long hill;
  long long lower_bound;
};

// Rows (n, H(n), lower_bound_crn(n)) for n in [from, to].
std::vector<Table1Row> table1(int from = 10, int to = 161);
std::string table1_csv(int from = 10, int to = 161);

struct Prop1Report {
  std::vector<int> violations;  // rows where lower bound <= H(n); expect none
  Rat constant;                 // lower_bound(158) / (158*157*156*155)
  bool constant_exceeds_1_64 = false;
  bool ok = false;
};

// Checks lower_bound_crn(n) > H(n) for 10 <= n <= 161 and the inductive
// constant lower_bound(158)/(158*157*156*155) > 1/64.
Prop1Report verify_proposition1();

}  // namespace rcn

#endif  // RCN_CROSSING_HPP_
