#ifndef RCN_RATIONAL_HPP_
#define RCN_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rcn {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which the JSON schema relies on.
using Rat = mpq_class;
using Int = mpz_class;

inline Int binom(const Int& n, unsigned k) {
  if (n < 0 || Int(k) > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= n - static_cast<long>(i);
    r /= static_cast<long>(i) + 1;
  }
  return r;
}

inline Int binom(long n, unsigned k) { return binom(Int(n), k); }

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

// Ceiling of an exact rational.
inline Int rat_ceil(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

inline Int rat_floor(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

// Decimal rendering with the given number of fractional digits (truncated).
// Display only; the rational is the source of truth.
std::string rat_to_decimal(const Rat& q, int digits = 9);

inline long long to_ll(const Int& v) {
  return mpz_get_si(v.get_mpz_t());
}

}  // namespace rcn

#endif  // RCN_RATIONAL_HPP_
