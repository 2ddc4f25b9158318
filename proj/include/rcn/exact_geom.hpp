#ifndef RCN_EXACT_GEOM_HPP_
#define RCN_EXACT_GEOM_HPP_

#include <cstdint>
#include <vector>

#include "rcn/errors.hpp"
#include "rcn/rational.hpp"

namespace rcn {

// Integer coordinates must satisfy |x|, |y| <= kMaxIntCoord so that the
// orientation determinant fits in a signed 128-bit intermediate.
inline constexpr long long kMaxIntCoord = 1LL << 30;

template <typename T>
struct Pt {
  T x{};
  T y{};

  friend bool operator==(const Pt& a, const Pt& b) {
    return a.x == b.x && a.y == b.y;
  }
};

using PtI = Pt<long long>;
using PtQ = Pt<Rat>;

// Sign of the cross product (b-a) x (c-a): +1 iff c is strictly left of the
// directed line a -> b.
inline int orient(const PtI& a, const PtI& b, const PtI& c) {
  using W = __int128;
  W det = W(b.x - a.x) * W(c.y - a.y) - W(b.y - a.y) * W(c.x - a.x);
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

inline int orient(const PtQ& a, const PtQ& b, const PtQ& c) {
  Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

// True iff the open segments (p1,p2) and (q1,q2) share exactly one interior
// point. Requires the four endpoints pairwise distinct. Throws
// DegenerateConfiguration if any three of the four points are collinear;
// callers must guarantee general position.
template <typename P>
bool segments_cross(const P& p1, const P& p2, const P& q1, const P& q2) {
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
    throw DegenerateConfiguration(
        "segments_cross: three of the four endpoints are collinear");
  }
  return o1 != o2 && o3 != o4;
}

// True iff all points are distinct and no three are collinear. O(n^3).
template <typename P>
bool in_general_position(const std::vector<P>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (pts[i] == pts[j]) return false;
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0) return false;
    }
  return true;
}

}  // namespace rcn

#endif  // RCN_EXACT_GEOM_HPP_
