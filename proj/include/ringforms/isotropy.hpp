#ifndef RINGFORMS_ISOTROPY_HPP_
#define RINGFORMS_ISOTROPY_HPP_

/* Transporters and isotropy groups of nondegenerate pairs of integral
 * ternary quadratic forms under Gamma = SL3(Z) x GL2(Z), together with the
 * etale classification of the attached quartic rings.
 *
 * On lattice L the engine is the ring parametrization: a transporter
 * gamma . p = q induces a ring isomorphism Q(q) -> Q(p) whose basis matrix
 * is (det gamma_2) gamma_1, and conversely the matrix of any isomorphism
 * determines the only candidate gamma inducing it (gamma_1 up to the forced
 * sign, gamma_2 by solving a linear combination).  Walking the complete
 * isomorphism list and keeping the candidates that verify therefore yields
 * the complete transporter set; emptiness certifies inequivalence.  For a
 * primitive pair the correspondence is one-to-one on the isotropy group,
 * whose order then equals |Aut(Q(A,B))|.
 *
 * On lattice Lhat the combination part of a transporter must carry the
 * det-pencil resolvent of p to that of q, which confines gamma_2 to a
 * finite computable transporter set in GL2(Z).  For fixed gamma_2 the
 * substitution part solves the pair of congruences
 *     gamma_1 A gamma_1^T = C,   gamma_1 B gamma_1^T = D
 * whose rational solutions, once det B and det D are nonzero (a small
 * pencil move arranges this), form a torsor: fixing one rational conjugator
 * gamma_c taking A B^{-1} to M' = C D^{-1}, every solution is
 * e(M') gamma_c with e ranging over the square roots of one explicit
 * element of the rank-3 algebra E = Q[M'].  Square roots in E are computed
 * exactly through characteristic polynomials and factorization, so the
 * returned transporter sets are complete on both lattices — no bounded
 * search is involved. */

#include "ringforms/cubic_classes.hpp"
#include "ringforms/etale.hpp"
#include "ringforms/matrix.hpp"
#include "ringforms/poly.hpp"
#include "ringforms/quartic.hpp"
#include "ringforms/ternary.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace ringforms {

/* ---------------- quartic rings as rational algebras ---------------- */

/* Structure-constant algebra of a quartic ring on the basis
 * (1, alpha_1, alpha_2, alpha_3). */
inline qalgebra quartic_algebra(const quartic_ring &q) {
  qalgebra al;
  al.n = 4;
  al.table.assign(4, std::vector<qvec>(4, qvec(4, bigrat(0))));
  for (int j = 0; j < 4; j++) {
    al.table[0][static_cast<size_t>(j)][static_cast<size_t>(j)] = 1;
    al.table[static_cast<size_t>(j)][0][static_cast<size_t>(j)] = 1;
  }
  for (int i = 1; i < 4; i++)
    for (int j = 1; j < 4; j++)
      for (int k = 0; k < 4; k++)
        al.table[static_cast<size_t>(i)][static_cast<size_t>(j)]
                [static_cast<size_t>(k)] = bigrat(q.c(k, i, j));
  assert(alg_well_formed(al));
  return al;
}

inline etale_type classify_algebra(const quartic_ring &q) {
  throw_if(disc_pair(q.pair) == 0, "classification of a degenerate ring");
  return classify_algebra(quartic_algebra(q));
}

inline aut_group automorphism_group(const quartic_ring &q) {
  throw_if(disc_pair(q.pair) == 0, "automorphisms of a degenerate ring");
  return automorphism_group(quartic_algebra(q));
}

/* ---------------- square roots in rank <= 3 algebras ---------------- */

namespace detail {

/* Square roots of a rational number: {}, {0} or {r, -r}. */
inline std::vector<bigrat> rational_square_roots(const bigrat &v) {
  std::vector<bigrat> out;
  if (sgn(v) < 0)
    return out;
  if (v == 0) {
    out.push_back(bigrat(0));
    return out;
  }
  const bigint &n = v.get_num(), &d = v.get_den();
  if (!is_perfect_square(n) || !is_perfect_square(d))
    return out;
  bigrat r = bigrat(isqrt(n)) / bigrat(isqrt(d));
  out.push_back(r);
  out.push_back(-r);
  return out;
}

inline ratpoly const_poly(const bigrat &v) {
  ratpoly p{v};
  poly_normalize(p);
  return p;
}

inline ratpoly poly_mulmod(const ratpoly &a, const ratpoly &b,
                           const ratpoly &g) {
  return poly_mod(poly_mul(a, b), g);
}

/* Inverse of a nonzero element in Q[X]/(g) when it is coprime to g. */
inline ratpoly poly_invmod(const ratpoly &a, const ratpoly &g) {
  ratpoly u, v;
  ratpoly d = poly_xgcd(poly_mod(a, g), g, u, v);
  assert(poly_degree(d) == 0 && d[0] == 1);
  return poly_mod(u, g);
}

/* Rational roots of a rational-coefficient polynomial, found by clearing
 * denominators and reading off the linear factors. */
inline std::vector<bigrat> rational_roots(const ratpoly &f) {
  std::vector<bigrat> out;
  intpoly fi = poly_clear_denominators(f);
  if (poly_degree(fi) < 1)
    return out;
  poly_factorization fac = poly_factor(fi);
  for (const auto &[h, mult] : fac.factors)
    if (poly_degree(h) == 1)
      out.push_back(bigrat(-h[0]) / bigrat(h[1]));
  return out;
}

inline ratpoly charpoly3(const rat_matrix<3> &m) {
  bigrat tr = m(0, 0) + m(1, 1) + m(2, 2);
  bigrat s2(0);
  for (int i = 0; i < 3; i++) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    s2 += m(j, j) * m(k, k) - m(j, k) * m(k, j);
  }
  ratpoly g{-m.det(), s2, -tr, bigrat(1)};
  return g;
}

/* All square roots of c in the field Q[X]/(g), g monic irreducible of
 * degree 1, 2 or 3.  A root e is pinned down by the characteristic
 * polynomial chi_e of multiplication by e, which satisfies
 * chi_c(Y^2) = (-1)^deg chi_e(Y) chi_e(-Y); matching coefficients leaves a
 * rational-square test per candidate and an explicit recovery of e from
 * chi_e(e) = 0.  Constant c is special-cased (a cubic field has no
 * quadratic subfield; a quadratic field adjoins at most its own
 * discriminant). */
inline std::vector<ratpoly> field_square_roots(const ratpoly &g,
                                               const ratpoly &c_in) {
  int deg = poly_degree(g);
  assert(deg >= 1 && deg <= 3 && g.back() == 1);
  ratpoly c = poly_mod(c_in, g);
  std::vector<ratpoly> out;
  auto push_unique = [&](const ratpoly &e) {
    assert(poly_mulmod(e, e, g) == c);
    if (std::find(out.begin(), out.end(), e) == out.end())
      out.push_back(e);
  };

  if (poly_degree(c) <= 0) {
    bigrat v = c.empty() ? bigrat(0) : c[0];
    for (const bigrat &r : rational_square_roots(v))
      push_unique(const_poly(r));
    if (out.empty() && deg == 2 && v != 0) {
      /* e = beta (x + g1/2) with (x + g1/2)^2 = g1^2/4 - g0 rational */
      bigrat w0 = g[1] * g[1] / 4 - g[0];
      for (const bigrat &beta : rational_square_roots(v / w0)) {
        if (beta == 0)
          continue;
        push_unique(ratpoly{beta * g[1] / 2, beta});
      }
    }
    return out;
  }

  if (deg == 2) {
    /* chi_c(Y) = Y^2 + u1 Y + u0 for multiplication by c = c0 + c1 x */
    bigrat m00 = c[0], m10 = c[1];
    bigrat m01 = -c[1] * g[0], m11 = c[0] - c[1] * g[1];
    bigrat u1 = -(m00 + m11), u0 = m00 * m11 - m01 * m10;
    for (const bigrat &p0 : rational_square_roots(u0))
      for (const bigrat &p1 : rational_square_roots(2 * p0 - u1)) {
        if (p1 == 0)
          continue; /* would force c rational */
        ratpoly e = poly_scale(poly_add(c, const_poly(p0)), bigrat(-1) / p1);
        push_unique(e);
      }
    return out;
  }

  assert(deg == 3);
  /* chi_c(Y) = Y^3 + u2 Y^2 + u1 Y + u0 via the multiplication matrix */
  rat_matrix<3> m;
  for (int j = 0; j < 3; j++) {
    ratpoly xj(static_cast<size_t>(j) + 1, bigrat(0));
    xj[static_cast<size_t>(j)] = 1;
    ratpoly col = poly_mulmod(c, xj, g);
    for (size_t i = 0; i < col.size(); i++)
      m(static_cast<int>(i), j) = col[i];
  }
  ratpoly chi = charpoly3(m);
  const bigrat &u0 = chi[0], &u1 = chi[1], &u2 = chi[2];
  for (const bigrat &q0 : rational_square_roots(-u0)) {
    ratpoly quart{u2 * u2 - 4 * u1, -8 * q0, 2 * u2, bigrat(0), bigrat(1)};
    for (const bigrat &q2 : rational_roots(quart)) {
      bigrat q1 = (u2 + q2 * q2) / 2;
      /* chi_e(e) = 0 gives e (c + q1) = -(q2 c + q0); c + q1 is a unit
       * because c is not rational */
      ratpoly num = poly_neg(poly_add(poly_scale(c, q2), const_poly(q0)));
      ratpoly den = poly_add(c, const_poly(q1));
      ratpoly e = poly_mulmod(num, poly_invmod(den, g), g);
      if (poly_mulmod(e, e, g) == c)
        push_unique(e);
    }
  }
  return out;
}

/* All square roots of u in Q[X]/(g) for monic squarefree g of degree <= 3:
 * factor g over Q, solve in each field component, and reassemble every
 * combination through the primitive idempotents. */
inline std::vector<ratpoly> algebra_square_roots(const ratpoly &g,
                                                 const ratpoly &u_in) {
  int deg = poly_degree(g);
  assert(deg >= 1 && deg <= 3 && g.back() == 1);
  assert(poly_degree(poly_gcd(g, poly_derivative(g))) == 0);
  ratpoly u = poly_mod(u_in, g);

  /* integral rescaling h(Y) = den^deg g(Y/den) for the factoring engine */
  bigint den(1);
  for (const bigrat &x : g)
    den = lcm(den, x.get_den());
  intpoly h(static_cast<size_t>(deg) + 1);
  for (int i = 0; i <= deg; i++) {
    bigrat scaled = g[static_cast<size_t>(i)] *
                    bigrat(pow(den, static_cast<unsigned long>(deg - i)));
    assert(scaled.get_den() == 1);
    h[static_cast<size_t>(i)] = scaled.get_num();
  }
  std::vector<ratpoly> comps;
  for (const intpoly &hf : factor_low_degree(h)) {
    int k = poly_degree(hf);
    ratpoly gf(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; i++)
      gf[static_cast<size_t>(i)] =
          bigrat(hf[static_cast<size_t>(i)]) *
          bigrat(pow(den, static_cast<unsigned long>(i))) /
          bigrat(pow(den, static_cast<unsigned long>(k)));
    assert(gf.back() == 1);
    comps.push_back(gf);
  }
  if (comps.size() == 1)
    return field_square_roots(g, u);

  std::vector<ratpoly> idem, roots_flat;
  std::vector<size_t> counts;
  for (const ratpoly &gf : comps) {
    ratpoly quot, rem;
    poly_divmod(g, gf, quot, rem);
    assert(rem.empty());
    ratpoly s, t;
    ratpoly d = poly_xgcd(quot, gf, s, t);
    assert(poly_degree(d) == 0 && d[0] == 1);
    idem.push_back(poly_mulmod(quot, s, g));
    std::vector<ratpoly> rs = field_square_roots(gf, poly_mod(u, gf));
    if (rs.empty())
      return {};
    counts.push_back(rs.size());
    for (const ratpoly &r : rs)
      roots_flat.push_back(r);
  }

  std::vector<ratpoly> out;
  std::vector<size_t> idx(comps.size(), 0);
  for (;;) {
    ratpoly e;
    size_t off = 0;
    for (size_t i = 0; i < comps.size(); i++) {
      e = poly_add(e, poly_mul(roots_flat[off + idx[i]], idem[i]));
      off += counts[i];
    }
    e = poly_mod(e, g);
    assert(poly_mulmod(e, e, g) == u);
    out.push_back(e);
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == counts[i]) {
      idx[i] = 0;
      i++;
    }
    if (i == idx.size())
      break;
  }
  return out;
}

/* ---------------- the Lhat congruence solver ---------------- */

inline rat_matrix<3> eval_at_matrix(const ratpoly &e, const rat_matrix<3> &m) {
  rat_matrix<3> acc;
  for (size_t i = e.size(); i-- > 0;) {
    acc = acc * m;
    for (int j = 0; j < 3; j++)
      acc(j, j) += e[i];
  }
  return acc;
}

/* Columns v, m v, m^2 v for the first small integer vector that is cyclic;
 * a matrix with squarefree characteristic polynomial always has one. */
inline rat_matrix<3> cyclic_basis(const rat_matrix<3> &m) {
  for (long h = 1;; h++)
    for (long x = -h; x <= h; x++)
      for (long y = -h; y <= h; y++)
        for (long z = -h; z <= h; z++) {
          if (std::max({labs(x), labs(y), labs(z)}) != h)
            continue;
          std::array<bigrat, 3> v{bigrat(x), bigrat(y), bigrat(z)}, w;
          rat_matrix<3> basis;
          for (int j = 0; j < 3; j++) {
            for (int i = 0; i < 3; i++)
              basis(i, j) = v[static_cast<size_t>(i)];
            for (int i = 0; i < 3; i++) {
              w[static_cast<size_t>(i)] = bigrat(0);
              for (int k = 0; k < 3; k++)
                w[static_cast<size_t>(i)] += m(i, k) * v[static_cast<size_t>(k)];
            }
            v = w;
          }
          if (basis.det() != 0)
            return basis;
        }
}

/* All gamma_1 in SL3(Z) with gamma_1 a gamma_1^T = c and
 * gamma_1 b gamma_1^T = d, for integer symmetric matrices with
 * det b != 0, det d != 0 and separable pencil.  Rational solutions are the
 * torsor e(M') gamma_c described in the header comment; integrality and
 * det 1 are imposed at the end, and every survivor is re-checked against
 * both congruences. */
inline std::vector<mat3> matched_substitutions(const mat3 &a, const mat3 &b,
                                               const mat3 &c, const mat3 &d) {
  std::vector<mat3> out;
  assert(b.det() != 0 && d.det() != 0);
  rat_matrix<3> m = to_rational(a) * inverse(to_rational(b));
  rat_matrix<3> mp = to_rational(c) * inverse(to_rational(d));
  ratpoly g = charpoly3(m);
  if (charpoly3(mp) != g)
    return out; /* no conjugation can exist */
  assert(poly_degree(poly_gcd(g, poly_derivative(g))) == 0);

  rat_matrix<3> vb = cyclic_basis(m), wb = cyclic_basis(mp);
  rat_matrix<3> gc = wb * inverse(vb);
  assert(gc * m == mp * gc);

  /* d (gc b gc^T)^{-1} lies in Q[M']: read its coordinates off the cyclic
   * basis and re-verify as a full matrix identity */
  rat_matrix<3> d0 = gc * to_rational(b) * gc.transpose();
  rat_matrix<3> uq = to_rational(d) * inverse(d0);
  std::array<bigrat, 3> rhs;
  for (int i = 0; i < 3; i++) {
    rhs[static_cast<size_t>(i)] = bigrat(0);
    for (int k = 0; k < 3; k++)
      rhs[static_cast<size_t>(i)] += uq(i, k) * wb(k, 0);
  }
  std::array<bigrat, 3> x = solve(wb, rhs);
  ratpoly u{x[0], x[1], x[2]};
  poly_normalize(u);
  assert(eval_at_matrix(u, mp) == uq);

  for (const ratpoly &e : algebra_square_roots(g, u)) {
    rat_matrix<3> cand = eval_at_matrix(e, mp) * gc;
    mat3 g1;
    if (!integral_entries(cand, g1))
      continue;
    if (g1.det() != 1)
      continue;
    assert(g1 * a * g1.transpose() == c);
    assert(g1 * b * g1.transpose() == d);
    out.push_back(g1);
  }
  return out;
}

inline mat2 unimodular_inverse(const mat2 &m) {
  bigint e = m.det();
  assert(e == 1 || e == -1);
  return mat2{{e * m(1, 1), -e * m(0, 1), -e * m(1, 0), e * m(0, 0)}};
}

} /* namespace detail */

/* ---------------- transporters ---------------- */

/* The complete set {gamma : gamma . p = q} for nondegenerate pairs on a
 * common lattice.  Every returned element is re-verified by applying the
 * action; an empty result certifies that p and q are inequivalent. */
inline std::vector<gamma_element> pair_transporters(const ternary_pair &p,
                                                    const ternary_pair &q) {
  throw_if(p.tag != q.tag, "transporters need pairs on the same lattice");
  throw_if(disc_pair(p) == 0 || disc_pair(q) == 0,
           "transporters of a degenerate pair");
  std::vector<gamma_element> out;
  if (disc_pair(p) != disc_pair(q))
    return out;

  if (p.tag == lattice_tag::L) {
    if (content_pair(p) != content_pair(q))
      return out;
    quartic_ring rp = structure_constants(p), rq = structure_constants(q);
    for (const qmat &phi :
         ring_isomorphisms(quartic_algebra(rq), quartic_algebra(rp))) {
      /* basis matrix of the induced Q(q) -> Q(p), row convention */
      mat3 m;
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
          const bigrat &x = phi[static_cast<size_t>(j) + 1]
                               [static_cast<size_t>(i) + 1];
          assert(x.get_den() == 1);
          m(i, j) = x.get_num();
        }
      bigint eps = m.det();
      assert(eps == 1 || eps == -1);
      mat3 g1 = eps * m;
      ternary_pair sub = make_ternary_pair(lattice_tag::L, act_g1(g1, p.x1),
                                           act_g1(g1, p.x2));
      std::optional<mat2> g2 = detail::solve_combination(sub, q);
      if (!g2 || g2->det() != eps)
        continue;
      if (act_gamma(g1, *g2, p) != q)
        continue;
      out.push_back(gamma_element{g1, *g2});
    }
    return out;
  }

  /* Lhat: move p until its second Gram matrix is invertible (some shear
   * B - kA with 0 <= k <= 3 works because the pencil has at most three
   * roots), solve per stabilizing gamma_2, then undo the move. */
  gamma_element move;
  ternary_pair pm = p;
  for (bigint k(0);; k++) {
    assert(k <= 3);
    move.g2 = mat2{{bigint(1), bigint(0), k, bigint(1)}};
    pm = act_gamma(move, p);
    if (integer_gram(pm.x2).det() != 0)
      break;
  }
  mat3 a = integer_gram(pm.x1), b = integer_gram(pm.x2);
  for (const mat2 &g2 :
       cubic_form_transporters(resolvent_form(pm), resolvent_form(q))) {
    ternary_pair target =
        act_gamma(mat3::identity(), detail::unimodular_inverse(g2), q);
    mat3 c = integer_gram(target.x1), d = integer_gram(target.x2);
    if (d.det() == 0)
      continue; /* gamma_1 b gamma_1^T = d is unsolvable */
    for (const mat3 &g1 : detail::matched_substitutions(a, b, c, d)) {
      gamma_element cand{g1, g2};
      assert(act_gamma(cand, pm) == q);
      gamma_element full = gamma_compose(cand, move);
      assert(act_gamma(full, p) == q);
      out.push_back(full);
    }
  }
  return out;
}

inline bool pairs_equivalent(const ternary_pair &p, const ternary_pair &q) {
  return !pair_transporters(p, q).empty();
}

/* ---------------- isotropy groups ---------------- */

struct isotropy_group {
  std::vector<gamma_element> elements;
  long order = 0;
};

namespace detail {

/* Identity, closure and point stabilization, all checked exactly. */
inline isotropy_group as_isotropy_group(std::vector<gamma_element> els,
                                        const ternary_pair &p) {
  isotropy_group g;
  g.elements = std::move(els);
  g.order = static_cast<long>(g.elements.size());
  gamma_element id;
  bool has_id = false;
  for (const gamma_element &e : g.elements) {
    assert(act_gamma(e, p) == p);
    if (e == id)
      has_id = true;
  }
  assert(has_id);
  for (const gamma_element &e1 : g.elements)
    for (const gamma_element &e2 : g.elements) {
      gamma_element prod = gamma_compose(e1, e2);
      bool found = false;
      for (const gamma_element &e : g.elements)
        if (e == prod)
          found = true;
      assert(found);
    }
  return g;
}

} /* namespace detail */

/* Isotropy of a primitive nondegenerate pair on L.  The pullback of the
 * automorphism list is one-to-one here, so the order equals
 * |Aut(Q(A,B))| (asserted). */
inline isotropy_group isotropy_L(const ternary_pair &p) {
  throw_if(p.tag != lattice_tag::L, "isotropy on L needs a pair on lattice L");
  throw_if(disc_pair(p) == 0, "isotropy of a degenerate pair");
  throw_if(content_pair(p) != 1, "isotropy on L needs a primitive pair");
  isotropy_group g = detail::as_isotropy_group(pair_transporters(p, p), p);
  assert(g.order == automorphism_group(structure_constants(p)).order);
  return g;
}

/* Isotropy of a nondegenerate pair on Lhat; complete for every such pair. */
inline isotropy_group isotropy_Lhat(const ternary_pair &p) {
  throw_if(p.tag != lattice_tag::Lhat,
           "isotropy on Lhat needs a pair on lattice Lhat");
  throw_if(disc_pair(p) == 0, "isotropy of a degenerate pair");
  return detail::as_isotropy_group(pair_transporters(p, p), p);
}

} /* namespace ringforms */

#endif
