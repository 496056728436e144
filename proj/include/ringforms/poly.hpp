#ifndef RINGFORMS_POLY_HPP_
#define RINGFORMS_POLY_HPP_

/* Dense univariate polynomials with exact coefficients.
 *
 * intpoly: coefficients in Z, index = degree of the monomial, normalized so
 * the leading coefficient is nonzero (the zero polynomial is the empty
 * vector, degree -1).  ratpoly: same layout over Q.
 *
 * The library keeps degrees small (<= 16: Trager norms of quartics over
 * quartic fields are the worst case), so quadratic-time algorithms are fine
 * throughout.  Resultants use the subresultant PRS to avoid coefficient
 * explosion; no floating point anywhere.
 */

#include "ringforms/integers.hpp"

#include <cassert>
#include <vector>

namespace ringforms {

using intpoly = std::vector<bigint>;
using ratpoly = std::vector<bigrat>;

template <typename P> P &poly_normalize(P &p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
  return p;
}

template <typename P> int poly_degree(const P &p) {
  return static_cast<int>(p.size()) - 1;
}

template <typename P> bool poly_is_zero(const P &p) { return p.empty(); }

template <typename P> P poly_add(const P &a, const P &b) {
  P c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.size())
      c[i] += a[i];
    if (i < b.size())
      c[i] += b[i];
  }
  return poly_normalize(c);
}

template <typename P> P poly_sub(const P &a, const P &b) {
  P c(std::max(a.size(), b.size()));
  for (size_t i = 0; i < c.size(); i++) {
    if (i < a.size())
      c[i] += a[i];
    if (i < b.size())
      c[i] -= b[i];
  }
  return poly_normalize(c);
}

template <typename P> P poly_mul(const P &a, const P &b) {
  if (a.empty() || b.empty())
    return P{};
  P c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      c[i + j] += a[i] * b[j];
  return poly_normalize(c);
}

template <typename P, typename S> P poly_scale(const P &a, const S &s) {
  if (s == 0)
    return P{};
  P c = a;
  for (auto &x : c)
    x *= s;
  return c;
}

template <typename P> P poly_neg(const P &a) {
  P c = a;
  for (auto &x : c)
    x = -x;
  return c;
}

template <typename P> P poly_derivative(const P &a) {
  if (a.size() <= 1)
    return P{};
  P d(a.size() - 1);
  for (size_t i = 1; i < a.size(); i++)
    d[i - 1] = a[i] * static_cast<long>(i);
  return poly_normalize(d);
}

template <typename P, typename S> auto poly_eval(const P &a, const S &x) {
  typename P::value_type r(0);
  for (size_t i = a.size(); i-- > 0;)
    r = r * x + a[i];
  return r;
}

inline bigrat poly_eval_rat(const intpoly &a, const bigrat &x) {
  bigrat r(0);
  for (size_t i = a.size(); i-- > 0;)
    r = r * x + bigrat(a[i]);
  return r;
}

/* Composition a(b(x)); degrees stay small so the naive Horner loop is fine. */
template <typename P> P poly_compose(const P &a, const P &b) {
  P r{};
  for (size_t i = a.size(); i-- > 0;) {
    r = poly_mul(r, b);
    if (a[i] != 0) {
      if (r.empty())
        r.resize(1);
      r[0] += a[i];
    }
  }
  return poly_normalize(r);
}

/* a(x + c) */
inline intpoly poly_shift(const intpoly &a, const bigint &c) {
  return poly_compose(a, intpoly{c, 1});
}

inline bigint poly_content(const intpoly &a) {
  bigint g = 0;
  for (const bigint &x : a)
    g = gcd(g, x);
  return g;
}

inline intpoly poly_primitive_part(const intpoly &a) {
  if (a.empty())
    return a;
  bigint g = poly_content(a);
  if (sgn(a.back()) < 0)
    g = -g;
  intpoly c = a;
  for (bigint &x : c)
    x = divexact(x, g);
  return c;
}

/* Clear denominators: smallest integer multiple of a rational polynomial. */
inline intpoly poly_clear_denominators(const ratpoly &a) {
  bigint l = 1;
  for (const bigrat &x : a)
    l = lcm(l, x.get_den());
  intpoly c(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    bigrat v = a[i] * bigrat(l);
    assert(v.get_den() == 1);
    c[i] = v.get_num();
  }
  return poly_normalize(c);
}

inline ratpoly to_ratpoly(const intpoly &a) {
  ratpoly r(a.size());
  for (size_t i = 0; i < a.size(); i++)
    r[i] = bigrat(a[i]);
  return r;
}

/* Euclidean division over Q: a = q*b + r with deg r < deg b. */
inline void poly_divmod(const ratpoly &a, const ratpoly &b, ratpoly &q,
                        ratpoly &r) {
  throw_if(b.empty(), "polynomial division by zero");
  q.assign(a.size(), bigrat(0));
  r = a;
  while (!r.empty() && r.size() >= b.size()) {
    bigrat f = r.back() / b.back();
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); i++)
      r[i + shift] -= f * b[i];
    poly_normalize(r);
  }
  poly_normalize(q);
}

inline ratpoly poly_mod(const ratpoly &a, const ratpoly &b) {
  ratpoly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

/* Monic gcd over Q. */
inline ratpoly poly_gcd(ratpoly a, ratpoly b) {
  poly_normalize(a);
  poly_normalize(b);
  while (!b.empty()) {
    ratpoly r = poly_mod(a, b);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    bigrat lead = a.back();
    for (auto &x : a)
      x /= lead;
  }
  return a;
}

/* Extended gcd over Q: returns monic g and cofactors u, v with
 * u*a + v*b = g.  Standard iterative extended Euclid. */
inline ratpoly poly_xgcd(ratpoly a, ratpoly b, ratpoly &u, ratpoly &v) {
  poly_normalize(a);
  poly_normalize(b);
  ratpoly u0 = {bigrat(1)}, v0 = {};
  ratpoly u1 = {}, v1 = {bigrat(1)};
  while (!b.empty()) {
    ratpoly q, r;
    poly_divmod(a, b, q, r);
    a = b;
    b = r;
    ratpoly u2 = poly_sub(u0, poly_mul(q, u1));
    ratpoly v2 = poly_sub(v0, poly_mul(q, v1));
    u0 = u1;
    v0 = v1;
    u1 = u2;
    v1 = v2;
  }
  if (!a.empty()) {
    bigrat lead = a.back();
    for (auto &x : a)
      x /= lead;
    for (auto &x : u0)
      x /= lead;
    for (auto &x : v0)
      x /= lead;
  }
  u = u0;
  v = v0;
  return a;
}

/* Exact division over Z; the caller guarantees divisibility (asserted). */
inline intpoly poly_divexact(const intpoly &a, const intpoly &b) {
  ratpoly q, r;
  poly_divmod(to_ratpoly(a), to_ratpoly(b), q, r);
  assert(r.empty());
  intpoly qi(q.size());
  for (size_t i = 0; i < q.size(); i++) {
    assert(q[i].get_den() == 1);
    qi[i] = q[i].get_num();
  }
  return qi;
}

inline bool poly_divides(const intpoly &b, const intpoly &a) {
  if (b.empty())
    return a.empty();
  ratpoly q, r;
  poly_divmod(to_ratpoly(a), to_ratpoly(b), q, r);
  if (!r.empty())
    return false;
  for (const bigrat &x : q)
    if (x.get_den() != 1)
      return false;
  return true;
}

/* Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced by b; all the
 * intermediate divisions are then exact over Z. */
inline intpoly poly_prem(const intpoly &a, const intpoly &b) {
  assert(!b.empty() && a.size() >= b.size());
  int delta = poly_degree(a) - poly_degree(b);
  intpoly r = poly_scale(a, pow(b.back(), static_cast<unsigned long>(delta + 1)));
  ratpoly q, rem;
  poly_divmod(to_ratpoly(r), to_ratpoly(b), q, rem);
  intpoly ri(rem.size());
  for (size_t i = 0; i < rem.size(); i++) {
    assert(rem[i].get_den() == 1);
    ri[i] = rem[i].get_num();
  }
  return ri;
}

/* Resultant over Z by the subresultant polynomial remainder sequence
 * (Collins; see Cohen, "A Course in Computational Algebraic Number
 * Theory", Algorithm 3.3.7).  Returns 0 iff the inputs share a
 * nonconstant factor. */
inline bigint poly_resultant(intpoly a, intpoly b) {
  poly_normalize(a);
  poly_normalize(b);
  if (a.empty() || b.empty())
    return 0;
  bigint s = 1;
  if (poly_degree(a) < poly_degree(b)) {
    if ((poly_degree(a) & 1) && (poly_degree(b) & 1))
      s = -s;
    std::swap(a, b);
  }
  if (poly_degree(b) == 0)
    return s * pow(b[0], static_cast<unsigned long>(poly_degree(a)));

  bigint g = 1, h = 1;
  for (;;) {
    int da = poly_degree(a), db = poly_degree(b);
    int delta = da - db;
    if ((da & 1) && (db & 1))
      s = -s;
    intpoly r = poly_prem(a, b);
    if (r.empty())
      return 0; /* common nonconstant factor */
    a = b;
    bigint divisor = g * pow(h, static_cast<unsigned long>(delta));
    for (bigint &x : r)
      x = divexact(x, divisor);
    b = r;
    g = a.back();
    if (delta >= 1) { /* h <- g^delta * h^(1-delta), exact */
      bigint num = pow(g, static_cast<unsigned long>(delta));
      for (int i = 1; i < delta; i++)
        num = divexact(num, h);
      h = num;
    }
    if (poly_degree(b) == 0) {
      int dA = poly_degree(a);
      /* res = s * h^(1-dA) * b0^dA */
      bigint res = pow(b[0], static_cast<unsigned long>(dA));
      for (int i = 1; i < dA; i++)
        res = divexact(res, h);
      return s * res;
    }
  }
}

/* Discriminant via the resultant with the derivative:
 * disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p). */
inline bigint poly_discriminant(const intpoly &p_in) {
  intpoly p = p_in;
  poly_normalize(p);
  throw_if(poly_degree(p) < 1, "discriminant needs degree >= 1");
  int n = poly_degree(p);
  bigint r = poly_resultant(p, poly_derivative(p));
  bigint d = divexact(r, p.back());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1)
    d = -d;
  return d;
}

inline bool poly_is_squarefree(const intpoly &p) {
  if (poly_degree(p) <= 1)
    return poly_degree(p) >= 0;
  ratpoly g = poly_gcd(to_ratpoly(p), to_ratpoly(poly_derivative(p)));
  return poly_degree(g) == 0;
}

inline std::string poly_to_string(const intpoly &p) {
  if (p.empty())
    return "0";
  std::string s;
  for (size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0)
      continue;
    if (!s.empty())
      s += sgn(p[i]) > 0 ? " + " : " - ";
    else if (sgn(p[i]) < 0)
      s += "-";
    bigint c = ringforms::abs(p[i]);
    if (i == 0)
      s += c.get_str();
    else {
      if (c != 1)
        s += c.get_str() + "*";
      s += "x";
      if (i > 1)
        s += "^" + std::to_string(i);
    }
  }
  return s;
}

} /* namespace ringforms */

#endif /* RINGFORMS_POLY_HPP_ */
