#include "rcn/hill.hpp"

#include <algorithm>

#include "rcn/closed_forms.hpp"
#include "rcn/errors.hpp"

namespace rcn {
namespace {

struct Lateral {
  Rat top;   // angular fraction of the top endpoint
  Rat disp;  // angular displacement in (-1/2, 1/2], ties toward +
};

// Number of integers strictly between a and b (endpoints excluded).
bool integer_strictly_between(const Rat& a, const Rat& b) {
  const Rat lo = std::min(a, b), hi = std::max(a, b);
  return rat_floor(hi) - rat_ceil(lo) + 1 - (is_integral(lo) ? 1 : 0) -
             (is_integral(hi) ? 1 : 0) >
         0;
}

}  // namespace

HillModel::HillModel(int n) : n_(n), top_count_((n + 1) / 2) {
  if (n < 1) throw Error("HillModel: n >= 1 required");
  const int a = top_count_;
  const int b = n - a;

  std::vector<Rat> frac(n);
  for (int i = 0; i < a; ++i) frac[i] = Rat(i, a);
  for (int j = 0; j < b; ++j) frac[a + j] = Rat(2 * j + 1, 2 * b);

  edges_ = GraphSpec::complete(n).edges();
  const std::size_t m = edges_.size();
  matrix_.assign(m * m, false);

  auto on_top = [a](int v) { return v < a; };
  auto lateral_of = [&](const Edge& e) {
    const int tv = on_top(e.first) ? e.first : e.second;
    const int bv = on_top(e.first) ? e.second : e.first;
    Rat d = frac[bv] - frac[tv];
    while (d > Rat(1, 2)) d -= 1;
    while (d <= Rat(-1, 2)) d += 1;
    return Lateral{frac[tv], d};
  };

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& e = edges_[i];
      const Edge& f = edges_[j];
      if (e.first == f.first || e.first == f.second || e.second == f.first ||
          e.second == f.second)
        continue;
      const int te = on_top(e.first) + on_top(e.second);
      const int tf = on_top(f.first) + on_top(f.second);
      bool cross = false;
      if (te != 1 || tf != 1) {
        // Cap chords: two chords on the same cap cross iff their endpoints
        // interleave; a cap chord never meets the lateral surface or the
        // other cap.
        if (te == tf && te != 1) {
          Rat a1 = std::min(frac[e.first], frac[e.second]);
          Rat a2 = std::max(frac[e.first], frac[e.second]);
          Rat b1 = std::min(frac[f.first], frac[f.second]);
          Rat b2 = std::max(frac[f.first], frac[f.second]);
          cross = (a1 < b1 && b1 < a2 && a2 < b2) ||
                  (b1 < a1 && a1 < b2 && b2 < a2);
        }
      } else {
        // Two lateral geodesics, compared in the universal cover. The
        // horizontal gap x_e(y) - x_f(y) is linear in the height y; the
        // curves cross iff it passes an integer strictly between the two
        // rim values.
        const Lateral le = lateral_of(e), lf = lateral_of(f);
        const Rat at_top = le.top - lf.top;
        const Rat at_bottom = at_top + le.disp - lf.disp;
        if (is_integral(at_top) || is_integral(at_bottom))
          throw DegenerateGeodesic("lateral edges meet at a rim point");
        cross = integer_strictly_between(at_top, at_bottom);
      }
      if (cross) {
        matrix_[i * m + j] = matrix_[j * m + i] = true;
        ++total_;
      }
    }
  }

  if (total_ != hill_number(n))
    throw ModelInconsistent("hill model total does not equal H(n)");
}

std::size_t HillModel::edge_index(const Edge& e) const {
  Edge key = e;
  if (key.first > key.second) std::swap(key.first, key.second);
  // Edges are sorted lexicographically; closed-form triangular index.
  const long long u = key.first, v = key.second, n = n_;
  return static_cast<std::size_t>(u * n - u * (u + 1) / 2 + (v - u - 1));
}

bool HillModel::crosses(const Edge& e1, const Edge& e2) const {
  return matrix_[edge_index(e1) * edges_.size() + edge_index(e2)];
}

}  // namespace rcn
