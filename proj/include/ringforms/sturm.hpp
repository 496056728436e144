#ifndef RINGFORMS_STURM_HPP_
#define RINGFORMS_STURM_HPP_

/* Sturm sequences and exact real root machinery.
 *
 * Everything is exact rational arithmetic: root counts come from sign
 * variation differences of the Sturm chain, roots themselves are
 * represented by isolating intervals (lo, hi) with rational endpoints that
 * are certified to contain exactly one root and to have nonvanishing
 * endpoint values.  Signs of other polynomials at such a root are decided
 * by interval refinement, never by floating point.
 */

#include "ringforms/poly.hpp"

namespace ringforms {

struct sturm_chain {
  std::vector<ratpoly> seq; /* p0 = p squarefree, p1 = p', then -rem chain */
};

inline intpoly poly_squarefree_part(const intpoly &p) {
  if (poly_degree(p) <= 1)
    return p;
  ratpoly g = poly_gcd(to_ratpoly(p), to_ratpoly(poly_derivative(p)));
  if (poly_degree(g) == 0)
    return p;
  ratpoly q, r;
  poly_divmod(to_ratpoly(p), g, q, r);
  assert(r.empty());
  return poly_primitive_part(poly_clear_denominators(q));
}

inline sturm_chain build_sturm(const intpoly &p_in) {
  throw_if(poly_is_zero(p_in), "undefined root count");
  sturm_chain c;
  intpoly p = poly_squarefree_part(p_in);
  c.seq.push_back(to_ratpoly(p));
  if (poly_degree(p) == 0)
    return c;
  c.seq.push_back(to_ratpoly(poly_derivative(p)));
  while (poly_degree(c.seq.back()) > 0) {
    ratpoly r = poly_mod(c.seq[c.seq.size() - 2], c.seq.back());
    if (r.empty())
      break; /* cannot happen for squarefree p, but stay safe */
    c.seq.push_back(poly_neg(r));
  }
  return c;
}

namespace detail {

/* Sign variations of the chain at x; at +-infinity when which = +-1. */
inline int variations(const sturm_chain &c, const bigrat &x, int which) {
  int var = 0, prev = 0;
  for (const ratpoly &f : c.seq) {
    int s;
    if (which == 0)
      s = sgn(poly_eval(f, x));
    else {
      if (f.empty())
        s = 0;
      else {
        s = sgn(f.back());
        if (which < 0 && (poly_degree(f) & 1))
          s = -s;
      }
    }
    if (s == 0)
      continue;
    if (prev != 0 && s != prev)
      var++;
    prev = s;
  }
  return var;
}

} /* namespace detail */

/* Number of distinct real roots of p (multiplicities ignored). */
inline int sturm_real_roots(const intpoly &p) {
  throw_if(poly_is_zero(p), "undefined root count");
  if (poly_degree(p) == 0)
    return 0;
  sturm_chain c = build_sturm(p);
  return detail::variations(c, bigrat(0), -1) -
         detail::variations(c, bigrat(0), +1);
}

/* Number of distinct real roots in the half-open interval (lo, hi]. */
inline int sturm_count(const sturm_chain &c, const bigrat &lo,
                       const bigrat &hi) {
  assert(lo <= hi);
  return detail::variations(c, lo, 0) - detail::variations(c, hi, 0);
}

/* Cauchy bound: all real roots lie in (-B, B). */
inline bigrat root_bound(const intpoly &p) {
  assert(!p.empty());
  bigint m = 0;
  for (size_t i = 0; i + 1 < p.size(); i++)
    m = std::max(m, ringforms::abs(p[i]));
  return bigrat(m) / bigrat(ringforms::abs(p.back())) + 1;
}

/* A real algebraic number: the squarefree minimal-vanishing polynomial
 * together with an isolating interval.  Invariants: p(lo) != 0, p(hi) != 0,
 * exactly one root of p inside (lo, hi). */
struct real_root {
  intpoly p;      /* squarefree */
  bigrat lo, hi;  /* open isolating interval */
};

inline void refine(real_root &r) {
  bigrat mid = (r.lo + r.hi) / 2;
  int s = sgn(poly_eval_rat(r.p, mid));
  if (s == 0) {
    /* the root is rational = mid; shrink to a tiny interval around it */
    bigrat w = (r.hi - r.lo) / 4;
    r.lo = mid - w;
    r.hi = mid + w;
    /* perturb endpoints off other roots if needed; the interval already
     * isolates, so only mid itself can be a root */
    return;
  }
  int slo = sgn(poly_eval_rat(r.p, r.lo));
  if (slo != 0 && s != slo)
    r.hi = mid;
  else
    r.lo = mid;
}

inline void refine(real_root &r, int steps) {
  for (int i = 0; i < steps; i++)
    refine(r);
}

/* Isolating intervals for all distinct real roots of p, sorted ascending. */
inline std::vector<real_root> isolate_real_roots(const intpoly &p_in) {
  throw_if(poly_is_zero(p_in), "undefined root count");
  std::vector<real_root> out;
  intpoly p = poly_squarefree_part(p_in);
  if (poly_degree(p) <= 0)
    return out;
  sturm_chain c = build_sturm(p);
  bigrat b = root_bound(p);
  struct seg {
    bigrat lo, hi;
    int n;
  };
  std::vector<seg> work;
  int total = sturm_count(c, -b, b);
  if (total > 0)
    work.push_back({-b, b, total});
  while (!work.empty()) {
    seg s = work.back();
    work.pop_back();
    if (s.n == 1) {
      /* make sure endpoints are not roots (the bound endpoints are not;
       * midpoints that are roots get nudged below) */
      out.push_back({p, s.lo, s.hi});
      continue;
    }
    bigrat mid = (s.lo + s.hi) / 2;
    if (sgn(poly_eval_rat(p, mid)) == 0) {
      /* shift the cut point off the root: the gap to the nearest other
       * root is positive, so a small offset works; halve until it does */
      bigrat off = (s.hi - s.lo) / 16;
      while (sgn(poly_eval_rat(p, mid + off)) == 0)
        off /= 2;
      mid += off;
    }
    int left = sturm_count(c, s.lo, mid);
    if (left > 0)
      work.push_back({s.lo, mid, left});
    if (s.n - left > 0)
      work.push_back({mid, s.hi, s.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const real_root &a, const real_root &b2) { return a.lo < b2.lo; });
  return out;
}

/* Exact sign of g at the algebraic number alpha.  If g(alpha) = 0 the
 * result is 0 (detected through a common factor, not by luck). */
inline int sign_at(const intpoly &g_in, real_root alpha) {
  intpoly g = g_in;
  poly_normalize(g);
  if (g.empty())
    return 0;
  if (poly_degree(g) == 0)
    return sgn(g[0]);
  /* does alpha vanish on g?  check whether gcd(p, g) has a root in the
   * isolating interval */
  ratpoly gc = poly_gcd(to_ratpoly(alpha.p), to_ratpoly(g));
  if (poly_degree(gc) > 0) {
    intpoly gci = poly_clear_denominators(gc);
    sturm_chain cg = build_sturm(gci);
    if (sturm_count(cg, alpha.lo, alpha.hi) > 0)
      return 0;
  }
  /* refine the interval until it is free of roots of g, then the sign at
   * the midpoint is the sign at alpha */
  sturm_chain cgf = build_sturm(g);
  for (int iter = 0;; iter++) {
    assert(iter < 20000);
    if (sturm_count(cgf, alpha.lo, alpha.hi) == 0) {
      int s1 = sgn(poly_eval_rat(g, alpha.lo));
      int s2 = sgn(poly_eval_rat(g, alpha.hi));
      /* endpoints could still be roots of g; nudge by refining */
      if (s1 != 0 && s1 == s2)
        return s1;
    }
    refine(alpha);
  }
}

} /* namespace ringforms */

#endif /* RINGFORMS_STURM_HPP_ */
