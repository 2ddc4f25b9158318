#ifndef RCN_CLOSED_FORMS_HPP_
#define RCN_CLOSED_FORMS_HPP_

#include <map>
#include <string>
#include <vector>

#include "rcn/graph_model.hpp"
#include "rcn/rational.hpp"

namespace rcn {

// Exact value with a display-only decimal rendering.
struct FormulaValue {
  Rat exact;
  std::string as_float() const { return rat_to_decimal(exact); }
};

// Known bounds on the rectilinear crossing constant q-bar.
extern const Rat kQBarLow;   // 0.379972
extern const Rat kQBarHigh;  // 0.380445

// H(n) = (1/4) floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).
long long hill_number(int n);

// Z(m,n) = floor(n/2) floor((n-1)/2) floor(m/2) floor((m-1)/2).
long long zarankiewicz_number(int m, int n);
inline long long zarankiewicz_number(int n) {
  return zarankiewicz_number(n, n);
}

// Crossing count of Harborth's drawing of K_n^r, evaluated as the exact
// rational of the displayed three-term expression (the unspecified O(n^2)
// remainder is omitted, so treat the value as approximate). Requires r | n.
Rat harborth_upper(int n, int r);

// E(cr(D)) = host_cr / (3 C(host_n, 4)) * independent_pairs(g).
FormulaValue expected_crossings_random_embedding(const GraphSpec& g,
                                                 long long host_cr,
                                                 int host_n);

// cr(D^s) for a planted drawing with the given seed statistics:
//   cr(D) s^4 + sum_v (C(floor(d/2),2)+C(ceil(d/2),2)) s^3(s-1)/2
//             + ||G|| s^2(s-1)^2 / 4.
long long planted_crossings(long long seed_cr, const std::vector<int>& degrees,
                            long long edge_count, int s);

// Leading n^4 coefficient of the planted drawing of K_n^r obtained from a
// K_{tr}^r seed with seed_cr crossings.
FormulaValue planted_coefficient(long long seed_cr, int r, int t);

// Leading-term evaluators for the upper/lower bound expressions; each
// entry is the coefficient expression evaluated at (n, r) as an exact
// rational. q_bar-dependent entries take the bound to use as a parameter.
std::map<std::string, FormulaValue> bound_evaluators(int n, int r,
                                                     const Rat& q_bar,
                                                     const Rat& cr_kr = 0);

}  // namespace rcn

#endif  // RCN_CLOSED_FORMS_HPP_
