#ifndef RINGFORMS_INTEGERS_HPP_
#define RINGFORMS_INTEGERS_HPP_

/* Exact integer and rational scalars plus elementary number theory.
 *
 * All scalars are GMP classes: bigint = mpz_class, bigrat = mpq_class.
 * mpq_class canonicalizes automatically, so a bigrat is always in lowest
 * terms with positive denominator.  Nothing in this library ever touches
 * floating point; every comparison and every root count is exact.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringforms {

using bigint = mpz_class;
using bigrat = mpq_class;

inline void throw_if(bool cond, const std::string &msg) {
  if (cond)
    throw std::invalid_argument(msg);
}

inline bigint gcd(const bigint &a, const bigint &b) {
  bigint g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bigint lcm(const bigint &a, const bigint &b) {
  bigint m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

/* g = gcd(a,b) together with u,v such that u*a + v*b = g. */
inline bigint gcdext(const bigint &a, const bigint &b, bigint &u, bigint &v) {
  bigint g;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

inline bigint abs(const bigint &a) {
  bigint r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline int sgn(const bigint &a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const bigrat &a) { return mpq_sgn(a.get_mpq_t()); }

inline bigint pow(const bigint &a, unsigned long e) {
  bigint r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

/* Floor of the square root; n must be >= 0. */
inline bigint isqrt(const bigint &n) {
  throw_if(sgn(n) < 0, "isqrt of negative integer");
  bigint r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const bigint &n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

/* Exact quotient; asserts divisibility in debug builds. */
inline bigint divexact(const bigint &a, const bigint &b) {
  bigint q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const bigint &d, const bigint &a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/* Round to nearest integer, ties toward +infinity (used when centering
 * polynomial shifts; any fixed tie rule would do, it only has to be
 * deterministic). */
inline bigint round_nearest(const bigrat &q) {
  bigint num = q.get_num(), den = q.get_den();
  bigint twice = 2 * num + den;          /* 2*q + 1 */
  bigint f;                              /* floor(twice / (2*den)) */
  mpz_fdiv_q(f.get_mpz_t(), twice.get_mpz_t(), bigint(2 * den).get_mpz_t());
  return f;
}

/* Prime factorization with sign flag.  primes is sorted ascending and
 * repeats according to multiplicity, so n == sign * prod(primes).
 * Trial division below 10^6, then Pollard rho with Brent cycling; inputs
 * in this library stay far below the regime where rho struggles. */
struct factorization {
  int sign = 1;                 /* +1 or -1 */
  std::vector<bigint> primes;   /* ascending, with multiplicity */
};

namespace detail {

inline bigint pollard_rho(const bigint &n) {
  /* Brent's variant; n must be odd, composite, not a prime power handled
   * elsewhere.  Deterministic constant increments keep the whole library
   * reproducible. */
  for (unsigned long c = 1; c < 64; c++) {
    bigint x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(ringforms::abs(x - y), n);
    }
    if (d != n)
      return d;
  }
  throw std::runtime_error("pollard rho failed to split composite");
}

inline void factor_into(bigint n, std::vector<bigint> &out) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.push_back(n);
    return;
  }
  bigint d = pollard_rho(n);
  factor_into(d, out);
  factor_into(divexact(n, d), out);
}

} /* namespace detail */

inline factorization factor_integer(const bigint &n_in) {
  throw_if(n_in == 0, "factor_integer: zero has no factorization");
  factorization f;
  bigint n = n_in;
  if (sgn(n) < 0) {
    f.sign = -1;
    n = -n;
  }
  for (bigint p = 2; p < 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
    while (divides(p, n)) {
      f.primes.push_back(p);
      n = divexact(n, p);
    }
  }
  if (n > 1)
    detail::factor_into(n, f.primes);
  std::sort(f.primes.begin(), f.primes.end());
  return f;
}

/* Distinct prime divisors of |n|, ascending. */
inline std::vector<bigint> prime_divisors(const bigint &n) {
  factorization f = factor_integer(n);
  std::vector<bigint> ps;
  for (const bigint &p : f.primes)
    if (ps.empty() || ps.back() != p)
      ps.push_back(p);
  return ps;
}

inline bool is_squarefree(const bigint &n) {
  if (n == 0)
    return false;
  factorization f = factor_integer(n);
  for (size_t i = 0; i + 1 < f.primes.size(); i++)
    if (f.primes[i] == f.primes[i + 1])
      return false;
  return true;
}

inline int kronecker_symbol(const bigint &a, const bigint &n) {
  throw_if(n == 0, "kronecker_symbol: modulus must be nonzero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/* A fundamental discriminant is the discriminant of a quadratic field:
 * either n = 1 mod 4 squarefree with n != 1, or n = 4m with m = 2,3 mod 4
 * squarefree.  In particular 1 itself is excluded. */
inline bool is_fundamental_discriminant(const bigint &n) {
  if (n == 0 || n == 1)
    return false;
  bigint r4;
  mpz_fdiv_r_ui(r4.get_mpz_t(), n.get_mpz_t(), 4);
  if (r4 == 1)
    return is_squarefree(n);
  if (r4 == 0) {
    bigint m = divexact(n, 4);
    bigint m4;
    mpz_fdiv_r_ui(m4.get_mpz_t(), m.get_mpz_t(), 4);
    return (m4 == 2 || m4 == 3) && is_squarefree(m);
  }
  return false;
}

/* String helpers: rationals print as "p/q" (or "p" when q = 1), the format
 * used by the CSV emitters. */
inline std::string to_string(const bigint &a) { return a.get_str(); }

inline std::string to_string(const bigrat &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} /* namespace ringforms */

#endif /* RINGFORMS_INTEGERS_HPP_ */
