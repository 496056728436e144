#ifndef RINGFORMS_BINARY_CUBIC_HPP_
#define RINGFORMS_BINARY_CUBIC_HPP_

/* Integral binary cubic forms F(u) = a u1^3 + b u1^2 u2 + c u1 u2^2 + d u2^3
 * and the rank-3 rings they parametrize.
 *
 * Conventions, fixed throughout the library:
 *  - GL2(Z) acts on forms by the twisted substitution
 *        (g F)(u) = (det g)^{-1} F(u g),          u = (u1, u2) a row vector,
 *    which preserves integrality and the discriminant for |det g| = 1.
 *  - The ring R(F) attached to F has Z-basis {1, w, t} multiplying as
 *        w^2 = -ac + b w - a t,
 *        t^2 = -bd + d w - c t,
 *        w t = -a d,
 *    and disc(R(F)) = disc(F) where disc(R) is the determinant of the
 *    trace form det(trace(e_i e_j)).
 *  - The Hessian covariant (P, Q, R) = (b^2 - 3ac, bc - 9ad, c^2 - 3bd)
 *    satisfies disc_quadratic(P, Q, R) = Q^2 - 4PR = -3 disc(F) and
 *    intertwines the twisted cubic action with the plain substitution
 *    action on quadratic forms.
 */

#include "ringforms/integers.hpp"
#include "ringforms/matrix.hpp"
#include "ringforms/poly.hpp"

#include <array>
#include <tuple>

namespace ringforms {

struct binary_cubic {
  bigint a, b, c, d;

  bool operator==(const binary_cubic &o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator!=(const binary_cubic &o) const { return !(*this == o); }
  bool operator<(const binary_cubic &o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
};

inline binary_cubic operator-(const binary_cubic &f) {
  return {-f.a, -f.b, -f.c, -f.d};
}

inline bigint disc_form(const binary_cubic &f) {
  const bigint &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  return 18 * a * b * c * d + b * b * c * c - 4 * a * c * c * c -
         4 * b * b * b * d - 27 * a * a * d * d;
}

inline bigint eval_form(const binary_cubic &f, const bigint &u1,
                        const bigint &u2) {
  return f.a * u1 * u1 * u1 + f.b * u1 * u1 * u2 + f.c * u1 * u2 * u2 +
         f.d * u2 * u2 * u2;
}

inline bigint height_form(const binary_cubic &f) {
  return std::max(std::max(abs(f.a), abs(f.b)), std::max(abs(f.c), abs(f.d)));
}

/* (g F)(u) = (det g)^{-1} F(u g).  For g = [[p, q], [r, s]] the substitution
 * is (u1, u2) -> (p u1 + r u2, q u1 + s u2); coefficients are produced by
 * expanding the powers of the two linear forms rather than by hand-derived
 * formulas. */
inline binary_cubic act_gl2(const mat2 &g, const binary_cubic &f) {
  throw_if(!is_unimodular(g), "act_gl2: matrix must be unimodular");
  /* linear forms s = (p, r), t = (q, s) as coefficient arrays in (u1, u2) */
  std::array<bigint, 2> s{g(0, 0), g(1, 0)}, t{g(0, 1), g(1, 1)};
  /* powers s^(3-k) t^k as binary forms of degree 3 */
  std::array<bigint, 4> out{0, 0, 0, 0};
  const std::array<const bigint *, 4> coeff{&f.a, &f.b, &f.c, &f.d};
  for (int k = 0; k <= 3; k++) {
    std::array<bigint, 4> pw{1, 0, 0, 0};
    int deg = 0;
    for (int i = 0; i < 3 - k; i++) {
      std::array<bigint, 4> nx{0, 0, 0, 0};
      for (int j = 0; j <= deg; j++) {
        nx[j] += pw[j] * s[0];
        nx[j + 1] += pw[j] * s[1];
      }
      pw = nx;
      deg++;
    }
    for (int i = 0; i < k; i++) {
      std::array<bigint, 4> nx{0, 0, 0, 0};
      for (int j = 0; j <= deg; j++) {
        nx[j] += pw[j] * t[0];
        nx[j + 1] += pw[j] * t[1];
      }
      pw = nx;
      deg++;
    }
    for (int j = 0; j <= 3; j++)
      out[j] += *coeff[k] * pw[j];
  }
  bigint dg = g.det();
  binary_cubic r{divexact(out[0], dg), divexact(out[1], dg),
                 divexact(out[2], dg), divexact(out[3], dg)};
  assert(disc_form(r) == disc_form(f));
  return r;
}

inline std::pair<bigint, binary_cubic> content_form(const binary_cubic &f) {
  throw_if(f.a == 0 && f.b == 0 && f.c == 0 && f.d == 0,
           "content of the zero form");
  bigint m = gcd(gcd(abs(f.a), abs(f.b)), gcd(abs(f.c), abs(f.d)));
  return {m, {divexact(f.a, m), divexact(f.b, m), divexact(f.c, m),
              divexact(f.d, m)}};
}

/* Hessian covariant (P, Q, R); Q^2 - 4PR = -3 disc(F). */
inline std::array<bigint, 3> hessian(const binary_cubic &f) {
  return {f.b * f.b - 3 * f.a * f.c, f.b * f.c - 9 * f.a * f.d,
          f.c * f.c - 3 * f.b * f.d};
}

/* ------------------------------------------------------------------ */
/* The cubic ring R(F) on the basis {1, w, t}.                         */

struct cubic_ring {
  binary_cubic f;
};

inline cubic_ring delone_faddeev(const binary_cubic &f) { return {f}; }

/* Elements are coordinate triples (x0, x1, x2) = x0 + x1 w + x2 t. */
using cubic_elt = std::array<bigint, 3>;

inline cubic_elt cubic_add(const cubic_elt &x, const cubic_elt &y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

inline cubic_elt cubic_sub(const cubic_elt &x, const cubic_elt &y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
}

inline cubic_elt cubic_scale(const bigint &m, const cubic_elt &x) {
  return {m * x[0], m * x[1], m * x[2]};
}

inline cubic_elt cubic_mul(const cubic_ring &r, const cubic_elt &x,
                           const cubic_elt &y) {
  const bigint &a = r.f.a, &b = r.f.b, &c = r.f.c, &d = r.f.d;
  /* w^2 = (-ac, b, -a); t^2 = (-bd, d, -c); w t = (-ad, 0, 0) */
  bigint ww = x[1] * y[1], tt = x[2] * y[2], wt = x[1] * y[2] + x[2] * y[1];
  return {x[0] * y[0] - a * c * ww - b * d * tt - a * d * wt,
          x[0] * y[1] + x[1] * y[0] + b * ww + d * tt,
          x[0] * y[2] + x[2] * y[0] - a * ww - c * tt};
}

/* Trace of the multiplication-by-x endomorphism. */
inline bigint cubic_trace(const cubic_ring &r, const cubic_elt &x) {
  return 3 * x[0] + r.f.b * x[1] - r.f.c * x[2];
}

/* Determinant of the matrix (trace(e_i e_j)) over the basis {1, w, t}. */
inline bigint ring_disc_traceform(const cubic_ring &r) {
  const std::array<cubic_elt, 3> basis{
      cubic_elt{1, 0, 0}, cubic_elt{0, 1, 0}, cubic_elt{0, 0, 1}};
  mat3 m;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      m(i, j) = cubic_trace(r, cubic_mul(r, basis[i], basis[j]));
  return m.det();
}

/* ------------------------------------------------------------------ */
/* Conductor of the order of squarefree index f inside R(F_k).
 *
 * For f | d the sublattice [1, f w, t] is an order with form
 * f^{-1} F_k(f u1, u2) = (a f^2, b f, c, d / f), and [f, f w, t] is its
 * conductor ideal, of index f^2. */

struct conductor_data {
  cubic_ring order;        /* the index-f order, on its own basis */
  binary_cubic order_form; /* the form attached to the order */
  bigint index;            /* = f, the index of the order in R(F_k) */
  /* conductor ideal inside R(F_k): the lattice {x0 + x1 w + x2 t :
   * f | x0, f | x1}, with Z-basis [f, f w, t] */
  std::array<cubic_elt, 3> ideal_basis;
  bigint ideal_index; /* = f^2, index of the ideal as a sublattice */
};

inline conductor_data conductor_squarefree_index(const binary_cubic &fk,
                                                 const bigint &f) {
  throw_if(disc_form(fk) == 0, "conductor of a degenerate form");
  throw_if(f <= 0 || !is_squarefree(f), "conductor index must be squarefree");
  throw_if(!divides(f, fk.d), "basis not adapted");
  binary_cubic of{fk.a * f * f, fk.b * f, fk.c, divexact(fk.d, f)};
  conductor_data out;
  out.order = delone_faddeev(of);
  out.order_form = of;
  out.index = f;
  out.ideal_basis = {cubic_elt{f, 0, 0}, cubic_elt{0, f, 0}, cubic_elt{0, 0, 1}};
  out.ideal_index = f * f;

  /* closure check: w * ideal and t * ideal stay in the ideal */
  cubic_ring rk = delone_faddeev(fk);
  auto in_ideal = [&](const cubic_elt &x) {
    return divides(f, x[0]) && divides(f, x[1]);
  };
  const cubic_elt w{0, 1, 0}, t{0, 0, 1};
  for (const cubic_elt &gen : out.ideal_basis) {
    throw_if(!in_ideal(cubic_mul(rk, w, gen)),
             "conductor closure failed (internal)");
    throw_if(!in_ideal(cubic_mul(rk, t, gen)),
             "conductor closure failed (internal)");
  }
  return out;
}

/* The dehomogenization F(x, 1) as an integer polynomial. */
inline intpoly dehomogenize(const binary_cubic &f) {
  intpoly p{f.d, f.c, f.b, f.a};
  return poly_normalize(p);
}

} /* namespace ringforms */

#endif /* RINGFORMS_BINARY_CUBIC_HPP_ */
