#include "rcn/crossing.hpp"

#include <algorithm>
#include <sstream>

namespace rcn {
namespace {

template <typename P>
long long count_crossings_impl(const std::vector<P>& pts,
                               const std::vector<Edge>& edges) {
  long long total = 0;
  const std::size_t m = edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross(pts[a], pts[b], pts[c], pts[d])) ++total;
    }
  }
  return total;
}

int cross_sign(const PtI& a, const PtI& b) {
  __int128 v = static_cast<__int128>(a.x) * b.y -
               static_cast<__int128>(a.y) * b.x;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int cross_sign(const PtQ& a, const PtQ& b) {
  return sgn(Rat(a.x * b.y - a.y * b.x));
}

template <typename T>
bool upper_half(const Pt<T>& d) {
  return d.y > 0 || (d.y == 0 && d.x > 0);
}

// Rotational sweep: around each point, sort the others by direction and
// slide the open half-plane (theta, theta + pi) with a second pointer.
// General position guarantees all directions around a point are distinct
// and non-antipodal.
template <typename P>
KEdgeVector k_edge_vector_impl(const std::vector<P>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw DegenerateConfiguration("k_edge_vector: need n >= 3");
  KEdgeVector kv;
  kv.n = n;
  kv.e.assign(n - 1, 0);

  std::vector<P> dirs;
  for (int ip = 0; ip < n; ++ip) {
    dirs.clear();
    for (int j = 0; j < n; ++j) {
      if (j == ip) continue;
      dirs.push_back({pts[j].x - pts[ip].x, pts[j].y - pts[ip].y});
    }
    const int m = n - 1;
    std::sort(dirs.begin(), dirs.end(), [](const P& a, const P& b) {
      const bool ha = upper_half(a), hb = upper_half(b);
      if (ha != hb) return ha;
      const int c = cross_sign(a, b);
      if (c == 0)
        throw DegenerateConfiguration("k_edge_vector: collinear points");
      return c > 0;
    });
    std::size_t k = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      if (k < i + 1) k = i + 1;
      while (k < i + m && cross_sign(dirs[i], dirs[k % m]) > 0) ++k;
      kv.e[k - i - 1] += 1;
    }
  }
  return kv;
}

Rat ek_identity(int n, const std::vector<Rat>& prefix) {
  Rat total = 0;
  for (int k = 0; 2 * k < n - 2; ++k)
    total += Rat(static_cast<long>(n - 2 * k - 3)) * prefix[k];
  total -= Rat(3) / 4 * Rat(binom(static_cast<long>(n), 3));
  if (n % 2 == 1) total += prefix[(n - 3) / 2] / 4;
  return total;
}

// E_k >= 3 C(k+2,2) + sum_{j=floor(n/3)}^{k} (3j - n + 3).
Rat ek_lower_bound(int n, int k) {
  Int b = 3 * binom(static_cast<long>(k) + 2, 2);
  for (int j = n / 3; j <= k; ++j) b += 3 * j - n + 3;
  return Rat(b);
}

}  // namespace

long long count_crossings(const std::vector<PtQ>& pts,
                          const std::vector<Edge>& edges) {
  return count_crossings_impl(pts, edges);
}

long long count_crossings(const std::vector<PtI>& pts,
                          const std::vector<Edge>& edges) {
  return count_crossings_impl(pts, edges);
}

long long count_crossings(const Drawing& d) {
  return count_crossings_impl(d.points, d.graph.edges());
}

KEdgeVector k_edge_vector(const std::vector<PtQ>& pts) {
  return k_edge_vector_impl(pts);
}

KEdgeVector k_edge_vector(const std::vector<PtI>& pts) {
  return k_edge_vector_impl(pts);
}

long long crossings_from_kedges(const KEdgeVector& v) {
  const int n = v.n;
  std::vector<Rat> prefix(n - 1);
  Rat acc = 0;
  for (int j = 0; j <= n - 2; ++j) {
    acc += Rat(static_cast<long>(v.e[j]));
    prefix[j] = acc;
  }
  const Rat total = ek_identity(n, prefix);
  if (!is_integral(total) || total < 0)
    throw IdentityViolation("k-edge identity gave a non-integral value");
  return to_ll(total.get_num());
}

long long lower_bound_crn(int n) {
  std::vector<Rat> prefix(n - 1);
  for (int k = 0; k <= n - 2; ++k) prefix[k] = ek_lower_bound(n, k);
  return to_ll(rat_ceil(ek_identity(n, prefix)));
}

std::vector<Table1Row> table1(int from, int to) {
  std::vector<Table1Row> rows;
  for (int n = from; n <= to; ++n) {
    long long h = static_cast<long long>(n / 2) * ((n - 1) / 2) *
                  ((n - 2) / 2) * ((n - 3) / 2) / 4;
    rows.push_back({n, h, lower_bound_crn(n)});
  }
  return rows;
}

std::string table1_csv(int from, int to) {
  std::ostringstream os;
  os << "n,H,lower_bound\n";
  for (const auto& row : table1(from, to))
    os << row.n << "," << row.hill << "," << row.lower_bound << "\n";
  return os.str();
}

Prop1Report verify_proposition1() {
  Prop1Report rep;
  for (const auto& row : table1(10, 161))
    if (row.lower_bound <= row.hill) rep.violations.push_back(row.n);
  rep.constant = Rat(static_cast<long>(lower_bound_crn(158))) /
                 Rat(Int(158) * 157 * 156 * 155);
  rep.constant_exceeds_1_64 = rep.constant > Rat(1, 64);
  rep.ok = rep.violations.empty() && rep.constant_exceeds_1_64;
  return rep;
}

}  // namespace rcn
