#ifndef RINGFORMS_TERNARY_HPP_
#define RINGFORMS_TERNARY_HPP_

/* Pairs of integral ternary quadratic forms and the Gamma = SL3(Z) x GL2(Z)
 * action on the two lattices in play:
 *
 *   lattice L    - all pairs (x1, x2) of integral ternary quadratic forms;
 *                  g2 = [[p,q],[r,s]] acts by the plain linear combination
 *                  (p x1 + q x2, r x1 + s x2).
 *
 *   lattice Lhat - pairs coming from integer symmetric matrices (A, B),
 *                  i.e. both forms have even off-diagonal coefficients;
 *                  g2 acts by the twisted combination
 *                  ((det g2)(p A - q B), (det g2)(-r A + s B)).
 *
 * In both cases g1 in SL3(Z) acts on a single form by the substitution
 * x(v g1), i.e. on the Gram matrix by M |-> g1 M {}^t g1.
 *
 * A pair determines a binary cubic resolvent,
 *
 *   lattice L    : F(u)    = P(u1 x1 - u2 x2),
 *   lattice Lhat : Fhat(u) = det(u1 A - u2 B),
 *
 * where P is the quadruple-determinant invariant (P of a form with integer
 * Gram matrix M equals 4 det M, so F = 4 Fhat on pairs lying in both
 * lattices, and their discriminants differ by the factor 2^8).  The
 * resolvent is covariant for the action:
 *
 *   resolvent(g . y) = act_gl2(resolvent_action_matrix(tag, g2), resolvent(y))
 *
 * where the induced matrix is g2 itself on Lhat and (det g2) D g2 D with
 * D = diag(1, -1) on L.  Both laws are exercised by the test suite.
 */

#include "ringforms/binary_cubic.hpp"
#include "ringforms/integers.hpp"
#include "ringforms/matrix.hpp"
#include "ringforms/poly.hpp"
#include "ringforms/sturm.hpp"

#include <array>
#include <cassert>
#include <random>
#include <vector>

namespace ringforms {

/* x(v) = x11 v1^2 + x12 v1 v2 + x13 v1 v3 + x22 v2^2 + x23 v2 v3 + x33 v3^2 */
struct ternary_form {
  bigint x11, x12, x13, x22, x23, x33;

  bool operator==(const ternary_form &o) const {
    return x11 == o.x11 && x12 == o.x12 && x13 == o.x13 && x22 == o.x22 &&
           x23 == o.x23 && x33 == o.x33;
  }
  bool operator!=(const ternary_form &o) const { return !(*this == o); }

  std::array<bigint, 6> coeffs() const { return {x11, x12, x13, x22, x23, x33}; }

  bool operator<(const ternary_form &o) const { return coeffs() < o.coeffs(); }
};

inline ternary_form form_from_coeffs(const std::array<bigint, 6> &c) {
  return ternary_form{c[0], c[1], c[2], c[3], c[4], c[5]};
}

inline bigint eval_form(const ternary_form &x, const bigint &v1,
                        const bigint &v2, const bigint &v3) {
  return x.x11 * v1 * v1 + x.x12 * v1 * v2 + x.x13 * v1 * v3 +
         x.x22 * v2 * v2 + x.x23 * v2 * v3 + x.x33 * v3 * v3;
}

inline bool form_is_zero(const ternary_form &x) {
  return x.x11 == 0 && x.x12 == 0 && x.x13 == 0 && x.x22 == 0 && x.x23 == 0 &&
         x.x33 == 0;
}

/* p*x + q*y, coefficientwise */
inline ternary_form form_combine(const bigint &p, const ternary_form &x,
                                 const bigint &q, const ternary_form &y) {
  return ternary_form{p * x.x11 + q * y.x11, p * x.x12 + q * y.x12,
                      p * x.x13 + q * y.x13, p * x.x22 + q * y.x22,
                      p * x.x23 + q * y.x23, p * x.x33 + q * y.x33};
}

/* Symmetric Gram matrix M with x(v) = v M {}^t v; off-diagonal entries are
 * half-integral. */
inline rat_matrix<3> gram(const ternary_form &x) {
  rat_matrix<3> m;
  m(0, 0) = bigrat(x.x11);
  m(1, 1) = bigrat(x.x22);
  m(2, 2) = bigrat(x.x33);
  m(0, 1) = m(1, 0) = bigrat(x.x12) / 2;
  m(0, 2) = m(2, 0) = bigrat(x.x13) / 2;
  m(1, 2) = m(2, 1) = bigrat(x.x23) / 2;
  return m;
}

inline bool even_off_diagonal(const ternary_form &x) {
  return divides(2, x.x12) && divides(2, x.x13) && divides(2, x.x23);
}

/* Integer Gram matrix of a form with even off-diagonal coefficients. */
inline mat3 integer_gram(const ternary_form &x) {
  throw_if(!even_off_diagonal(x),
           "integer Gram matrix needs even off-diagonal coefficients");
  mat3 m;
  m(0, 0) = x.x11;
  m(1, 1) = x.x22;
  m(2, 2) = x.x33;
  m(0, 1) = m(1, 0) = x.x12 / 2;
  m(0, 2) = m(2, 0) = x.x13 / 2;
  m(1, 2) = m(2, 1) = x.x23 / 2;
  return m;
}

inline ternary_form form_of_matrix(const mat3 &m) {
  throw_if(m != m.transpose(), "form of a matrix needs a symmetric matrix");
  return ternary_form{m(0, 0), 2 * m(0, 1), 2 * m(0, 2),
                      m(1, 1), 2 * m(1, 2), m(2, 2)};
}

/* P(x) = 4 x11 x22 x33 + x12 x13 x23 - x11 x23^2 - x22 x13^2 - x33 x12^2;
 * equals 4 det(Gram) and satisfies P(g1 x) = (det g1)^2 P(x). */
inline bigint p_invariant(const ternary_form &x) {
  return 4 * x.x11 * x.x22 * x.x33 + x.x12 * x.x13 * x.x23 -
         x.x11 * x.x23 * x.x23 - x.x22 * x.x13 * x.x13 -
         x.x33 * x.x12 * x.x12;
}

/* Substitution action x |-> x(v g); Gram matrix g M {}^t g.  Defined for an
 * arbitrary integer matrix g (used with non-unimodular matrices too, where
 * it realizes passage to sublattices). */
inline ternary_form act_g1(const mat3 &g, const ternary_form &x) {
  /* work with N = 2M, an integer symmetric matrix; g N {}^t g has even
   * diagonal, and the transformed coefficients read off exactly */
  mat3 n;
  n(0, 0) = 2 * x.x11;
  n(1, 1) = 2 * x.x22;
  n(2, 2) = 2 * x.x33;
  n(0, 1) = n(1, 0) = x.x12;
  n(0, 2) = n(2, 0) = x.x13;
  n(1, 2) = n(2, 1) = x.x23;
  mat3 t = g * n * g.transpose();
  assert(divides(2, t(0, 0)) && divides(2, t(1, 1)) && divides(2, t(2, 2)));
  return ternary_form{t(0, 0) / 2, t(0, 1), t(0, 2),
                      t(1, 1) / 2, t(1, 2), t(2, 2) / 2};
}

enum class lattice_tag { L, Lhat };

struct ternary_pair {
  ternary_form x1, x2;
  lattice_tag tag = lattice_tag::L;

  bool operator==(const ternary_pair &o) const {
    return x1 == o.x1 && x2 == o.x2 && tag == o.tag;
  }
  bool operator!=(const ternary_pair &o) const { return !(*this == o); }
};

/* The only sanctioned constructor: enforces the Lhat evenness invariant. */
inline ternary_pair make_ternary_pair(lattice_tag tag, const ternary_form &x1,
                                      const ternary_form &x2) {
  throw_if(tag == lattice_tag::Lhat &&
               (!even_off_diagonal(x1) || !even_off_diagonal(x2)),
           "Lhat pair needs even off-diagonal coefficients");
  return ternary_pair{x1, x2, tag};
}

inline ternary_pair pair_of_matrices(const mat3 &a, const mat3 &b) {
  return make_ternary_pair(lattice_tag::Lhat, form_of_matrix(a),
                           form_of_matrix(b));
}

/* Reinterpret a pair as a plain coefficient pair on L.  An Lhat pair is in
 * particular a pair of integral forms (with even off-diagonals); forgetting
 * the tag keeps the coefficients and switches the resolvent convention. */
inline ternary_pair embed_in_l(const ternary_pair &p) {
  return ternary_pair{p.x1, p.x2, lattice_tag::L};
}

/* One Gamma element; applying gamma then gamma' equals applying
 * gamma_compose(gamma', gamma) in one step (substitutions pull back, and the
 * combination parts are matrix representations in both lattices). */
struct gamma_element {
  mat3 g1 = mat3::identity();
  mat2 g2 = mat2::identity();

  bool operator==(const gamma_element &o) const {
    return g1 == o.g1 && g2 == o.g2;
  }
};

inline gamma_element gamma_compose(const gamma_element &later,
                                   const gamma_element &earlier) {
  return gamma_element{later.g1 * earlier.g1, later.g2 * earlier.g2};
}

inline ternary_pair act_gamma(const mat3 &g1, const mat2 &g2,
                              const ternary_pair &p) {
  throw_if(g1.det() != 1, "gamma_1 must have determinant 1");
  throw_if(!is_unimodular(g2), "gamma_2 must have determinant 1 or -1");
  ternary_form z1 = act_g1(g1, p.x1), z2 = act_g1(g1, p.x2);
  const bigint &pp = g2(0, 0), &qq = g2(0, 1), &rr = g2(1, 0), &ss = g2(1, 1);
  ternary_form y1, y2;
  if (p.tag == lattice_tag::L) {
    y1 = form_combine(pp, z1, qq, z2);
    y2 = form_combine(rr, z1, ss, z2);
  } else {
    bigint eps = g2.det();
    y1 = form_combine(eps * pp, z1, -eps * qq, z2);
    y2 = form_combine(-eps * rr, z1, eps * ss, z2);
  }
  return ternary_pair{y1, y2, p.tag};
}

inline ternary_pair act_gamma(const gamma_element &g, const ternary_pair &p) {
  return act_gamma(g.g1, g.g2, p);
}

/* The GL2(Z) matrix through which the resolvent of g.p is obtained from the
 * resolvent of p.  On Lhat the covariance is strict; on L the twist by
 * conjugation with D = diag(1,-1) and by det g2 appears. */
inline mat2 resolvent_action_matrix(lattice_tag tag, const mat2 &g2) {
  if (tag == lattice_tag::Lhat)
    return g2;
  bigint e = g2.det();
  return mat2{{e * g2(0, 0), -e * g2(0, 1), -e * g2(1, 0), e * g2(1, 1)}};
}

/* Binary cubic resolvent of a pair.  Both branches interpolate the cubic
 * u |-> invariant(u1 x1 - u2 x2) from its values at (1,0), (0,1), (1,1),
 * (1,-1); the divisions by 2 are exact. */
namespace detail {

template <typename EVAL>
binary_cubic interpolate_pencil_cubic(EVAL &&value) {
  bigint a = value(bigint(1), bigint(0));
  bigint d = value(bigint(0), bigint(1));
  bigint v11 = value(bigint(1), bigint(1)), v1m = value(bigint(1), bigint(-1));
  bigint c = divexact(v11 + v1m, 2) - a;
  bigint b = divexact(v11 - v1m, 2) - d;
  assert(value(bigint(2), bigint(1)) == 8 * a + 4 * b + 2 * c + d);
  return binary_cubic{a, b, c, d};
}

} /* namespace detail */

inline binary_cubic resolvent_form(const ternary_pair &p) {
  if (p.tag == lattice_tag::L)
    return detail::interpolate_pencil_cubic(
        [&](const bigint &u1, const bigint &u2) {
          return p_invariant(form_combine(u1, p.x1, -u2, p.x2));
        });
  mat3 a = integer_gram(p.x1), b = integer_gram(p.x2);
  return detail::interpolate_pencil_cubic(
      [&](const bigint &u1, const bigint &u2) {
        return (u1 * a - u2 * b).det();
      });
}

/* Discriminant of the pair's own resolvent.  For an Lhat pair this is the
 * starred normalization: embedding the same two forms into L multiplies the
 * resolvent by 4 and hence the discriminant by 2^8. */
inline bigint disc_pair(const ternary_pair &p) {
  return disc_form(resolvent_form(p));
}

/* Real orbit classes: the intersection Zero(x1) and Zero(x2) in the real
 * projective plane has 4, 2 or 0 points. */
enum class real_type { V1, V2, V3 };

namespace detail {

/* Eliminate v3 from the two quadratics (viewed over Z[v1] at v2 = 1): the
 * resultant of A1 t^2 + B1 t + C1 and A2 t^2 + B2 t + C2 in t is
 * (A1 C2 - A2 C1)^2 - (A1 B2 - A2 B1)(B1 C2 - B2 C1), a quartic in v1. */
inline intpoly eliminate_v3(const ternary_form &x, const ternary_form &y) {
  auto quadratic = [](const ternary_form &f) {
    /* coefficients of f as A t^2 + B(v1) t + C(v1), t = v3, v2 = 1 */
    intpoly a{f.x33};
    intpoly b{f.x23, f.x13};
    intpoly c{f.x22, f.x12, f.x11};
    poly_normalize(a);
    poly_normalize(b);
    poly_normalize(c);
    return std::array<intpoly, 3>{a, b, c};
  };
  auto [a1, b1, c1] = quadratic(x);
  auto [a2, b2, c2] = quadratic(y);
  intpoly ac = poly_sub(poly_mul(a1, c2), poly_mul(a2, c1));
  intpoly ab = poly_sub(poly_mul(a1, b2), poly_mul(a2, b1));
  intpoly bc = poly_sub(poly_mul(b1, c2), poly_mul(b2, c1));
  return poly_sub(poly_mul(ac, ac), poly_mul(ab, bc));
}

inline mat3 random_sl3(std::mt19937_64 &rng, int steps) {
  std::uniform_int_distribution<int> idx(0, 2), coin(0, 1);
  mat3 g = mat3::identity();
  for (int k = 0; k < steps; k++) {
    int i = idx(rng), j = idx(rng);
    if (i == j)
      continue;
    mat3 e = mat3::identity();
    e(i, j) = coin(rng) ? 1 : -1;
    g = g * e;
  }
  assert(g.det() == 1);
  return g;
}

} /* namespace detail */

inline real_type real_orbit_type(const ternary_pair &p) {
  bigint disc = disc_pair(p);
  throw_if(disc == 0, "real orbit type of a degenerate pair");
  if (disc < 0)
    return real_type::V2;
  /* disc > 0: the four intersection points are distinct and either all real
   * or none real.  Project them to the v3-resultant's roots; in generic
   * position the projections are distinct, the eliminated quartic is
   * squarefree of degree 4, and its Sturm count is the number of real
   * points.  Otherwise retry after a deterministic pseudo-random unimodular
   * change of variables. */
  std::mt19937_64 rng(0x7e5137a1);
  ternary_form x1 = p.x1, x2 = p.x2;
  for (int attempt = 0; attempt < 32; attempt++) {
    if (attempt > 0) {
      mat3 g = detail::random_sl3(rng, 4 + attempt);
      x1 = act_g1(g, p.x1);
      x2 = act_g1(g, p.x2);
    }
    intpoly q = detail::eliminate_v3(x1, x2);
    if (poly_degree(q) != 4 || !poly_is_squarefree(q))
      continue;
    int n = sturm_real_roots(q);
    if (n == 4)
      return real_type::V1;
    if (n == 0)
      return real_type::V3;
    /* 1..3 real roots: conjugate points sharing a projection; not generic */
  }
  throw_if(true, "generic position not reached");
  return real_type::V2; /* unreachable */
}

/* Completion of a primitive integer row vector to an SL3(Z) matrix having it
 * as first row. */
inline mat3 complete_first_row(const bigint &p, const bigint &q,
                               const bigint &r) {
  throw_if(gcd(gcd(p, q), r) != 1, "row completion needs a primitive vector");
  if (p == 0 && q == 0) {
    /* r = +-1 */
    mat3 m;
    m(0, 2) = r;
    m(1, 1) = 1;
    m(2, 0) = -r;
    return m;
  }
  bigint u, v, s, t;
  bigint g = gcdext(p, q, u, v);       /* u p + v q = g */
  bigint one = gcdext(g, r, s, t);     /* s g + t r = 1 */
  assert(one == 1);
  mat3 m;
  m(0, 0) = p;
  m(0, 1) = q;
  m(0, 2) = r;
  m(1, 0) = -v;
  m(1, 1) = u;
  m(1, 2) = 0;
  m(2, 0) = -t * divexact(p, g);
  m(2, 1) = -t * divexact(q, g);
  m(2, 2) = s;
  assert(m.det() == 1);
  return m;
}

/* Normalization towards a'11 = a'12 = 0, b'11 != 0 for a nondegenerate pair
 * on lattice L, by the three constructive stages: a substitution moving a
 * vector with x2 != 0 into first position, a Bezout rotation in the pencil,
 * and a Bezout rotation of the last two variables. */
struct normalization_result {
  gamma_element gamma;
  ternary_pair pair;
};

inline normalization_result normalize_a11_a12(const ternary_pair &p) {
  throw_if(p.tag != lattice_tag::L, "normalization is defined on lattice L");
  throw_if(form_is_zero(p.x1) && form_is_zero(p.x2),
           "normalization of a degenerate pair");
  gamma_element acc;
  ternary_pair cur = p;
  if (cur.x1.x11 == 0 && cur.x1.x12 == 0 && cur.x2.x11 != 0)
    return normalization_result{acc, cur};

  /* if the second form vanishes identically, rotate the pencil first */
  if (form_is_zero(cur.x2)) {
    gamma_element st{mat3::identity(), mat2{{0, -1, 1, 0}}};
    cur = act_gamma(st, cur);
    acc = gamma_compose(st, acc);
  }

  /* stage 1: make b11 nonzero.  x2 is now nonzero, hence nonzero at some
   * vector with entries in {0,1}. */
  if (cur.x2.x11 == 0) {
    bool found = false;
    for (int v1 = 0; v1 <= 1 && !found; v1++)
      for (int v2 = 0; v2 <= 1 && !found; v2++)
        for (int v3 = 0; v3 <= 1 && !found; v3++) {
          if (v1 + v2 + v3 == 0)
            continue;
          if (eval_form(cur.x2, v1, v2, v3) != 0) {
            gamma_element st{complete_first_row(v1, v2, v3), mat2::identity()};
            cur = act_gamma(st, cur);
            acc = gamma_compose(st, acc);
            found = true;
          }
        }
    assert(found);
  }
  assert(cur.x2.x11 != 0);

  /* stage 2: rotate the pencil so that a11 becomes 0 and b11 = gcd. */
  if (cur.x1.x11 != 0) {
    bigint u, v;
    bigint t = gcdext(cur.x1.x11, cur.x2.x11, u, v); /* u a11 + v b11 = t */
    bigint a1 = divexact(cur.x1.x11, t), b1 = divexact(cur.x2.x11, t);
    gamma_element st{mat3::identity(), mat2{{b1, -a1, u, v}}};
    assert(st.g2.det() == 1);
    cur = act_gamma(st, cur);
    acc = gamma_compose(st, acc);
    assert(cur.x1.x11 == 0 && cur.x2.x11 == t);
  }

  /* stage 3: rotate v2, v3 so that a12 becomes 0 as well. */
  if (cur.x1.x12 != 0) {
    bigint u, v;
    bigint t = gcdext(cur.x1.x12, cur.x1.x13, u, v);
    bigint a2 = divexact(cur.x1.x12, t), a3 = divexact(cur.x1.x13, t);
    mat3 g;
    g(0, 0) = 1;
    g(1, 1) = a3;
    g(1, 2) = -a2;
    g(2, 1) = u;
    g(2, 2) = v;
    assert(g.det() == 1);
    gamma_element st{g, mat2::identity()};
    cur = act_gamma(st, cur);
    acc = gamma_compose(st, acc);
  }

  assert(cur.x1.x11 == 0 && cur.x1.x12 == 0 && cur.x2.x11 != 0);
  assert(act_gamma(acc, p) == cur);
  return normalization_result{acc, cur};
}

/* --- the triple -> pair constructor ------------------------------------- */

/* Regular representation of w on the basis (1, omega, theta): the matrix
 * whose column j is w * e_j. */
inline mat3 regular_representation(const cubic_ring &r, const cubic_elt &w) {
  mat3 m;
  for (int j = 0; j < 3; j++) {
    cubic_elt e{0, 0, 0};
    e[static_cast<size_t>(j)] = 1;
    cubic_elt col = cubic_mul(r, w, e);
    for (int i = 0; i < 3; i++)
      m(i, j) = col[static_cast<size_t>(i)];
  }
  return m;
}

inline bigint cubic_norm(const cubic_ring &r, const cubic_elt &w) {
  return regular_representation(r, w).det();
}

/* Coefficient matrices of the products alpha_i alpha_j = delta (c_ij +
 * b_ij omega + a_ij theta): returns (C, B, A) in that order. */
inline std::array<mat3, 3> triple_products(const cubic_ring &ring,
                                           const std::array<cubic_elt, 3> &alpha,
                                           const cubic_elt &delta) {
  mat3 rho_delta = regular_representation(ring, delta);
  throw_if(rho_delta.det() == 0, "delta is not invertible");

  /* orientation: the coordinate matrix of the basis (rows = alpha_i) must
   * have positive determinant, i.e. the same orientation as (1, omega,
   * theta) itself */
  mat3 coords;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      coords(i, j) = alpha[static_cast<size_t>(i)][static_cast<size_t>(j)];
  bigint na = coords.det();
  throw_if(na == 0, "ideal basis is not a lattice basis");
  throw_if(na < 0, "ideal basis has negative orientation");

  /* delta^{-1} as a rational coordinate vector: solve rho(delta) z = 1 */
  std::array<bigrat, 3> one{bigrat(1), bigrat(0), bigrat(0)};
  std::array<bigrat, 3> z = solve(to_rational(rho_delta), one);

  mat3 cs[3]; /* C, B, A */
  for (int i = 0; i < 3; i++)
    for (int j = i; j < 3; j++) {
      cubic_elt w = cubic_mul(ring, alpha[static_cast<size_t>(i)],
                              alpha[static_cast<size_t>(j)]);
      /* delta^{-1} * w = rho(w) z, exactly */
      mat3 rho_w = regular_representation(ring, w);
      for (int k = 0; k < 3; k++) {
        bigrat s(0);
        for (int l = 0; l < 3; l++)
          s += bigrat(rho_w(k, l)) * z[static_cast<size_t>(l)];
        throw_if(s.get_den() != 1, "𝔞² ⊄ δ𝒪");
        cs[k](i, j) = cs[k](j, i) = s.get_num();
      }
    }

  /* norm condition: N(delta) = N(ideal)^2 */
  throw_if(rho_delta.det() != na * na,
           "norm of delta does not equal the ideal norm squared");
  return {cs[0], cs[1], cs[2]};
}

inline ternary_pair pair_from_triple(const cubic_ring &ring,
                                     const std::array<cubic_elt, 3> &alpha,
                                     const cubic_elt &delta) {
  std::array<mat3, 3> cba = triple_products(ring, alpha, delta);
  ternary_pair p = pair_of_matrices(cba[2], cba[1]);
  assert(resolvent_form(p) == ring.f);
  return p;
}

/* --- cofactor identity for singular symmetric matrices ------------------ */

/* The cofactor matrix of a singular symmetric matrix is symmetric of rank at
 * most one, so t_ii t_jj = t_ij^2 throughout; returns the cofactor matrix. */
inline rat_matrix<3> cofactor_check(const rat_matrix<3> &s) {
  throw_if(s != s.transpose(), "cofactor identity needs a symmetric matrix");
  throw_if(s.det() != 0, "cofactor identity needs a singular matrix");
  rat_matrix<3> t;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) {
      /* cofactor of entry (i, j): signed 2x2 minor of the complement */
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      /* rows r0 < r1 and columns c0 < c1 with the sign folded in by the
       * cyclic choice: det of [[s(r0,c0), s(r0,c1)], [s(r1,c0), s(r1,c1)]]
       * is the cofactor when rows and columns are taken cyclically */
      t(i, j) = s(r0, c0) * s(r1, c1) - s(r0, c1) * s(r1, c0);
    }
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++)
      assert(t(i, i) * t(j, j) == t(i, j) * t(i, j));
  return t;
}

inline rat_matrix<3> cofactor_check(const mat3 &s) {
  return cofactor_check(to_rational(s));
}

} /* namespace ringforms */

#endif /* RINGFORMS_TERNARY_HPP_ */
