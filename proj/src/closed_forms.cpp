#include "rcn/closed_forms.hpp"

#include <sstream>

namespace rcn {

const Rat kQBarLow = Rat(379972, 1000000);
const Rat kQBarHigh = Rat(380445, 1000000);

std::string rat_to_decimal(const Rat& q, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int num = q.get_num() * scale;
  Int whole;
  mpz_tdiv_q(whole.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
  bool neg = whole < 0;
  Int a = abs(whole);
  Int ip = a / scale;
  Int fp = a % scale;
  std::ostringstream os;
  if (neg) os << "-";
  os << ip.get_str();
  std::string frac = fp.get_str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  os << "." << frac;
  return os.str();
}

long long hill_number(int n) {
  if (n < 0) throw Error("hill_number: n must be nonnegative");
  return static_cast<long long>(n / 2) * ((n - 1) / 2) * ((n - 2) / 2) *
         ((n - 3) / 2) / 4;
}

long long zarankiewicz_number(int m, int n) {
  if (m < 0 || n < 0) throw Error("zarankiewicz_number: m, n nonnegative");
  return static_cast<long long>(n / 2) * ((n - 1) / 2) * (m / 2) *
         ((m - 1) / 2);
}

Rat harborth_upper(int n, int r) {
  if (r < 2 || n % r != 0) throw DivisibilityError("harborth_upper: r | n required");
  const long c = n / r;
  const Rat a = Rat(3, 8) * Rat(binom(static_cast<long>(r), 4)) *
                Rat(Int(n) * n * n * n) / Rat(Int(r) * r * r * r);
  const Rat b = Rat(static_cast<long>(r)) * (c / 2) * ((c - 1) / 2) *
                ((static_cast<long>(n) - c) / 2) *
                ((static_cast<long>(n) - c - 1) / 2);
  const Rat cc = Rat(binom(static_cast<long>(r), 2)) * (c / 2) * (c / 2) *
                 ((c - 1) / 2) * ((c - 1) / 2);
  return a + b - cc;
}

FormulaValue expected_crossings_random_embedding(const GraphSpec& g,
                                                 long long host_cr,
                                                 int host_n) {
  if (g.vertex_count() != host_n)
    throw SizeMismatch("guest vertex count must equal host vertex count");
  Rat p = Rat(static_cast<long>(host_cr)) /
          (3 * Rat(binom(static_cast<long>(host_n), 4)));
  return {p * Rat(g.independent_pairs())};
}

long long planted_crossings(long long seed_cr, const std::vector<int>& degrees,
                            long long edge_count, int s) {
  if (s < 1) throw Error("planted_crossings: s >= 1 required");
  const long long s2 = static_cast<long long>(s) * s;
  long long total = seed_cr * s2 * s2;
  Int vertex_term = 0;
  for (int d : degrees)
    vertex_term += binom(static_cast<long>(d / 2), 2) +
                   binom(static_cast<long>((d + 1) / 2), 2);
  total += to_ll(vertex_term) * s2 * s * (s - 1) / 2;
  total += edge_count * s2 * (s - 1) * (s - 1) / 4;
  return total;
}

FormulaValue planted_coefficient(long long seed_cr, int r, int t) {
  const long half_lo = static_cast<long>(r - 1) * t / 2;
  const long half_hi = (static_cast<long>(r - 1) * t + 1) / 2;
  Rat num = Rat(static_cast<long>(seed_cr));
  num += Rat(static_cast<long>(r) * t, 2) *
         Rat(binom(half_lo, 2) + binom(half_hi, 2));
  num += Rat(Int(r) * (r - 1) * t * t, 8);
  const Int rt = Int(r) * t;
  return {num / Rat(rt * rt * rt * rt)};
}

std::map<std::string, FormulaValue> bound_evaluators(int n, int r,
                                                     const Rat& q_bar,
                                                     const Rat& cr_kr) {
  const Rat N(static_cast<long>(n));
  const Rat ratio = Rat(static_cast<long>(r - 1), static_cast<long>(r));
  const Rat n2 = N * N, n3 = n2 * N, n4 = n3 * N;
  const Rat r4 = Rat(Int(r) * r * r * r);
  std::map<std::string, FormulaValue> out;
  // Hill random embedding of K_n^r (requires r | n for the exact statement).
  out["knr_hill_embedding"] = {Rat(1, 16) * ratio * ratio *
                               (n4 / 4 - 3 * n3 / 2)};
  out["knr_harborth_approx"] = {Rat(1, 16) * ratio * ratio * (n4 / 4 - 2 * n3)};
  out["knr_rectilinear_upper"] = {q_bar / 24 * ratio * ratio * n4};
  out["knr_lower_from_kr"] = {cr_kr * (N / r) * (N / r) * (N / r) * (N / r)};
  out["layered_random_embedding"] = {ratio * ratio / 16 * n4 / (r * Rat(static_cast<long>(r)))};
  out["layered_planted"] = {Rat(3L * r - 5) / (16 * r4) * n4};
  out["layered_conditional_lower"] = {Rat(2L * r - 4) / (16 * r4) * n4};
  return out;
}

}  // namespace rcn
