#ifndef RINGFORMS_QUARTIC_HPP_
#define RINGFORMS_QUARTIC_HPP_

/* Quartic rings attached to pairs of integral ternary quadratic forms on
 * the lattice L.
 *
 * Conventions, fixed throughout the library:
 *  - A pair (A, B) on L is written with plain coefficients
 *        A(v) = sum_{i <= j} a_ij v_i v_j,   B(v) = sum_{i <= j} b_ij v_i v_j,
 *    and a_ji = a_ij, b_ji = b_ij.  The fifteen pair determinants
 *        lambda^{ij}_{kl} = a_ij b_kl - b_ij a_kl
 *    are antisymmetric in the two coefficient slots, SL2-invariant in the
 *    (A, B)-combination sense, and their gcd is the content of the pair.
 *  - The quartic ring Q(A, B) is the free module on {1, alpha_1, alpha_2,
 *    alpha_3} with alpha_i alpha_j = c^0_ij + sum_k c^k_ij alpha_k, where
 *    the c^k_ij (k >= 1) are signed lambda-expressions attached to the six
 *    permutations of (1, 2, 3) and the constants
 *        C_1 = lambda^{23}_{11}, C_2 = -lambda^{13}_{22},
 *        C_3 = lambda^{12}_{33},
 *    and the c^0_ij are the degree-two expressions forced by associativity,
 *    independent of an auxiliary index choice.  The basis is normalized:
 *    c^1_12 = c^2_12 = c^1_13 = 0.
 *  - disc(Q(A, B)), the determinant of the 4x4 trace form, equals the
 *    discriminant of the resolvent binary cubic F_{(A,B)}(u) = P(u1 A - u2 B),
 *    and the cubic ring R(F_{(A,B)}) is the resolvent ring of Q(A, B).
 *  - (delta_1, delta_2) in M_3 x M_2 acts by substitution in the first slot
 *    and combination in the second:  (delta . x)_1 = p x1' + q x2', with
 *    x_i' = x_i(v delta_1) and delta_2 = [[p, q], [r, s]].  For invertible
 *    delta the ring Q(delta . x) embeds into Q(x) with matrix part
 *    (det delta_1)(det delta_2) delta_1 and a unique integral shift.
 */

#include "ringforms/binary_cubic.hpp"
#include "ringforms/integers.hpp"
#include "ringforms/matrix.hpp"
#include "ringforms/poly.hpp"
#include "ringforms/ternary.hpp"

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ringforms {

/* Slot of the unordered coefficient pair (i, j), 1 <= i, j <= 3, in the
 * fixed order 11, 12, 13, 22, 23, 33. */
inline int coeff_pair_index(int i, int j) {
  if (i > j)
    std::swap(i, j);
  assert(1 <= i && i <= j && j <= 3);
  static const int slot[3][3] = {{0, 1, 2}, {-1, 3, 4}, {-1, -1, 5}};
  return slot[i - 1][j - 1];
}

/* ------------------------------------------------------------------ */
/* The fifteen lambda invariants.                                      */

/* Stored for ij < kl in the lexicographic order of coefficient pairs:
 * (11,12), (11,13), (11,22), (11,23), (11,33), (12,13), (12,22), (12,23),
 * (12,33), (13,22), (13,23), (13,33), (22,23), (22,33), (23,33).  The rest
 * of the table follows from lambda^{ij}_{kl} = -lambda^{kl}_{ij} and
 * lambda^{ij}_{ij} = 0. */
struct lambda_table {
  std::array<bigint, 15> v;

  /* storage slot for pair indices p < q in 0..5 */
  static int slot(int p, int q) {
    assert(0 <= p && p < q && q <= 5);
    return p * 5 - p * (p - 1) / 2 + (q - p - 1);
  }

  bigint get(int i, int j, int k, int l) const {
    int p = coeff_pair_index(i, j), q = coeff_pair_index(k, l);
    if (p == q)
      return 0;
    return p < q ? v[static_cast<size_t>(slot(p, q))]
                 : -v[static_cast<size_t>(slot(q, p))];
  }
};

namespace detail {

inline void require_lattice_l(const ternary_pair &p) {
  throw_if(p.tag != lattice_tag::L,
           "quartic ring construction needs a pair on lattice L");
}

} /* namespace detail */

inline lambda_table lambda_invariants(const ternary_pair &p) {
  detail::require_lattice_l(p);
  std::array<bigint, 6> a = p.x1.coeffs(), b = p.x2.coeffs();
  lambda_table t;
  int n = 0;
  for (int s = 0; s < 6; s++)
    for (int u = s + 1; u < 6; u++) {
      assert(n == lambda_table::slot(s, u));
      t.v[static_cast<size_t>(n++)] =
          a[static_cast<size_t>(s)] * b[static_cast<size_t>(u)] -
          b[static_cast<size_t>(s)] * a[static_cast<size_t>(u)];
    }
  assert(n == 15);
  return t;
}

/* gcd of the fifteen lambda invariants. */
inline bigint content_pair(const ternary_pair &p) {
  lambda_table t = lambda_invariants(p);
  bigint g(0);
  for (const bigint &x : t.v)
    g = gcd(g, x);
  throw_if(g == 0, "degenerate (content undefined)");
  return g;
}

/* ------------------------------------------------------------------ */
/* The quartic ring Q(A, B) on its normalized basis.                   */

struct quartic_ring {
  ternary_pair pair;          /* source pair, lattice L */
  std::array<bigint, 24> cst; /* c^k_ij at slot k * 6 + coeff_pair_index(i, j) */

  const bigint &c(int k, int i, int j) const {
    assert(0 <= k && k <= 3);
    return cst[static_cast<size_t>(k * 6 + coeff_pair_index(i, j))];
  }
};

inline quartic_ring structure_constants(const ternary_pair &p) {
  detail::require_lattice_l(p);
  lambda_table lam = lambda_invariants(p);
  const std::array<bigint, 3> big_c{lam.get(2, 3, 1, 1), -lam.get(1, 3, 2, 2),
                                    lam.get(1, 2, 3, 3)};

  std::array<bigint, 24> cst{};
  std::array<bool, 24> seen{};
  auto set_c = [&](int k, int i, int j, const bigint &val) {
    size_t s = static_cast<size_t>(k * 6 + coeff_pair_index(i, j));
    /* the permutation formulas agree wherever they define a constant twice */
    assert(!seen[s] || cst[s] == val);
    cst[s] = val;
    seen[s] = true;
  };

  /* the six permutations (i, j, k) of (1, 2, 3) with their signs */
  static const int perm[6][4] = {{1, 2, 3, 1},  {1, 3, 2, -1}, {2, 1, 3, -1},
                                 {2, 3, 1, 1},  {3, 1, 2, 1},  {3, 2, 1, -1}};
  for (const auto &pr : perm) {
    int i = pr[0], j = pr[1], k = pr[2];
    bigint s(pr[3]);
    /* c^i_ii = s lambda^{ik}_{ij} + C_i,    c^j_ii = s lambda^{ii}_{ik},
     * 2 c^i_ij = s lambda^{ik}_{jj} + C_j,  c^k_ij = s lambda^{jj}_{ii} */
    set_c(i, i, i, s * lam.get(i, k, i, j) + big_c[static_cast<size_t>(i - 1)]);
    set_c(j, i, i, s * lam.get(i, i, i, k));
    bigint twice = s * lam.get(i, k, j, j) + big_c[static_cast<size_t>(j - 1)];
    assert(divides(2, twice));
    set_c(i, i, j, divexact(twice, bigint(2)));
    set_c(k, i, j, s * lam.get(j, j, i, i));
  }
  for (int k = 1; k <= 3; k++)
    for (int i = 1; i <= 3; i++)
      for (int j = i; j <= 3; j++)
        assert(seen[static_cast<size_t>(k * 6 + coeff_pair_index(i, j))]);

  /* c^0_ij = sum_r (c^r_jk c^k_ri - c^r_ij c^k_rk) for any auxiliary
   * k != i; evaluated for every admissible k and for both orders of the
   * pair (i, j), all of which must agree */
  auto c_at = [&](int k, int i, int j) -> const bigint & {
    return cst[static_cast<size_t>(k * 6 + coeff_pair_index(i, j))];
  };
  for (int i = 1; i <= 3; i++)
    for (int j = i; j <= 3; j++) {
      bool have = false;
      bigint value;
      auto accumulate = [&](int ii, int jj) {
        for (int k = 1; k <= 3; k++) {
          if (k == ii)
            continue;
          bigint s(0);
          for (int r = 1; r <= 3; r++)
            s += c_at(r, jj, k) * c_at(k, r, ii) -
                 c_at(r, ii, jj) * c_at(k, r, k);
          assert(!have || s == value);
          value = s;
          have = true;
        }
      };
      accumulate(i, j);
      accumulate(j, i);
      set_c(0, i, j, value);
    }

  return quartic_ring{p, cst};
}

/* Elements are coordinate 4-tuples (x0, x1, x2, x3) = x0 + sum x_i alpha_i. */
using quartic_elt = std::array<bigint, 4>;

inline quartic_elt quartic_add(const quartic_elt &x, const quartic_elt &y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

inline quartic_elt quartic_sub(const quartic_elt &x, const quartic_elt &y) {
  return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

inline quartic_elt quartic_scale(const bigint &m, const quartic_elt &x) {
  return {m * x[0], m * x[1], m * x[2], m * x[3]};
}

inline quartic_elt quartic_mul(const quartic_ring &q, const quartic_elt &x,
                               const quartic_elt &y) {
  quartic_elt z{x[0] * y[0], x[0] * y[1] + x[1] * y[0],
                x[0] * y[2] + x[2] * y[0], x[0] * y[3] + x[3] * y[0]};
  for (int i = 1; i <= 3; i++)
    for (int j = 1; j <= 3; j++) {
      bigint s = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      if (s == 0)
        continue;
      z[0] += s * q.c(0, i, j);
      for (int k = 1; k <= 3; k++)
        z[static_cast<size_t>(k)] += s * q.c(k, i, j);
    }
  return z;
}

/* Trace of the multiplication-by-x endomorphism. */
inline bigint quartic_trace(const quartic_ring &q, const quartic_elt &x) {
  bigint t = 4 * x[0];
  for (int i = 1; i <= 3; i++) {
    bigint ti(0);
    for (int j = 1; j <= 3; j++)
      ti += q.c(j, i, j);
    t += x[static_cast<size_t>(i)] * ti;
  }
  return t;
}

/* Determinant of the matrix (trace(e_i e_j)) over the basis {1, alpha_1,
 * alpha_2, alpha_3}; always equal to the resolvent discriminant. */
inline bigint quartic_disc_traceform(const quartic_ring &q) {
  const std::array<quartic_elt, 4> basis{
      quartic_elt{1, 0, 0, 0}, quartic_elt{0, 1, 0, 0},
      quartic_elt{0, 0, 1, 0}, quartic_elt{0, 0, 0, 1}};
  mat4 m;
  for (int i = 0; i < 4; i++)
    for (int j = 0; j < 4; j++)
      m(i, j) = quartic_trace(
          q, quartic_mul(q, basis[static_cast<size_t>(i)],
                         basis[static_cast<size_t>(j)]));
  bigint d = m.det();
  assert(d == disc_form(resolvent_form(q.pair)));
  return d;
}

/* The cubic ring of the resolvent form of the pair. */
inline cubic_ring resolvent_ring(const ternary_pair &p) {
  detail::require_lattice_l(p);
  return delone_faddeev(resolvent_form(p));
}

/* ------------------------------------------------------------------ */
/* Transformation of pairs and the induced ring homomorphisms.         */

namespace detail {

/* rational coefficient vector (x11, x12, x13, x22, x23, x33) of x(v g) */
inline std::array<bigrat, 6> substitute_rational(const rat_matrix<3> &g,
                                                 const ternary_form &x) {
  rat_matrix<3> t = g * gram(x) * g.transpose();
  return {t(0, 0), 2 * t(0, 1), 2 * t(0, 2), t(1, 1), 2 * t(1, 2), t(2, 2)};
}

} /* namespace detail */

/* (delta_1, delta_2) . (x1, x2); defined for rational matrices as long as
 * the result has integer coefficients. */
inline ternary_pair transform_pair(const rat_matrix<3> &d1,
                                   const rat_matrix<2> &d2,
                                   const ternary_pair &p) {
  detail::require_lattice_l(p);
  throw_if(d1.det() == 0, "delta_1 must be invertible");
  throw_if(d2.det() == 0, "delta_2 must be invertible");
  std::array<bigrat, 6> y1 = detail::substitute_rational(d1, p.x1);
  std::array<bigrat, 6> y2 = detail::substitute_rational(d1, p.x2);
  std::array<bigint, 6> z1, z2;
  for (size_t s = 0; s < 6; s++) {
    bigrat u = d2(0, 0) * y1[s] + d2(0, 1) * y2[s];
    bigrat w = d2(1, 0) * y1[s] + d2(1, 1) * y2[s];
    throw_if(u.get_den() != 1 || w.get_den() != 1,
             "transformed pair is not integral");
    z1[s] = u.get_num();
    z2[s] = w.get_num();
  }
  return make_ternary_pair(lattice_tag::L, form_from_coeffs(z1),
                           form_from_coeffs(z2));
}

inline ternary_pair transform_pair(const int_matrix<3> &d1,
                                   const int_matrix<2> &d2,
                                   const ternary_pair &p) {
  return transform_pair(to_rational(d1), to_rational(d2), p);
}

/* A homomorphism between quartic rings in normalized coordinates:
 * beta_i |-> shift_i + sum_j matrix(i, j) alpha_j, beta_0 = 1 |-> 1. */
struct quartic_hom {
  int_matrix<3> matrix;
  std::array<bigint, 3> shift;
};

namespace detail {

inline quartic_elt hom_image(const quartic_hom &h, int i) {
  return {h.shift[static_cast<size_t>(i)], h.matrix(i, 0), h.matrix(i, 1),
          h.matrix(i, 2)};
}

/* full multiplicativity check, constant components included */
inline bool is_ring_hom(const quartic_ring &target, const quartic_ring &source,
                        const quartic_hom &h) {
  for (int i = 0; i < 3; i++)
    for (int j = i; j < 3; j++) {
      quartic_elt lhs =
          quartic_mul(target, hom_image(h, i), hom_image(h, j));
      quartic_elt rhs{source.c(0, i + 1, j + 1), 0, 0, 0};
      for (int k = 0; k < 3; k++)
        rhs = quartic_add(rhs, quartic_scale(source.c(k + 1, i + 1, j + 1),
                                             hom_image(h, k)));
      if (lhs != rhs)
        return false;
    }
  return true;
}

} /* namespace detail */

/* Solve for the constant shifts completing the given matrix part to a ring
 * homomorphism Q(source) -> Q(target); empty when no completion exists.
 * Needs a nonzero row of the matrix per basis vector (any invertible matrix
 * qualifies): the alpha_l component of psi(beta_i)^2 = psi(beta_i^2) pins
 * the shift, 2 m_il e_i = sum_k c~^k_ii m_kl - (m_i^2)_l, and the full
 * multiplicativity check validates the result. */
inline std::optional<quartic_hom> complete_hom(const quartic_ring &target,
                                               const quartic_ring &source,
                                               const int_matrix<3> &m) {
  quartic_hom h{m, {bigint(0), bigint(0), bigint(0)}};
  for (int i = 0; i < 3; i++) {
    int l0 = -1;
    for (int l = 0; l < 3; l++)
      if (m(i, l) != 0) {
        l0 = l;
        break;
      }
    if (l0 < 0)
      return std::nullopt;
    quartic_elt mi{0, m(i, 0), m(i, 1), m(i, 2)};
    quartic_elt sq = quartic_mul(target, mi, mi);
    bigint rhs(0);
    for (int k = 0; k < 3; k++)
      rhs += source.c(k + 1, i + 1, i + 1) * m(k, l0);
    rhs -= sq[static_cast<size_t>(l0 + 1)];
    if (!divides(2 * m(i, l0), rhs))
      return std::nullopt;
    h.shift[static_cast<size_t>(i)] = divexact(rhs, 2 * m(i, l0));
  }
  if (!detail::is_ring_hom(target, source, h))
    return std::nullopt;
  return h;
}

/* The embedding Q((delta_1, delta_2) . p) -> Q(p): matrix part
 * (det delta_1)(det delta_2) delta_1, shifts solved for and the whole map
 * verified to be multiplicative. */
inline quartic_hom transform_hom(const int_matrix<3> &d1,
                                 const int_matrix<2> &d2,
                                 const ternary_pair &p) {
  ternary_pair tp = transform_pair(d1, d2, p);
  quartic_ring target = structure_constants(p);
  quartic_ring source = structure_constants(tp);
  int_matrix<3> m = (d1.det() * d2.det()) * d1;
  std::optional<quartic_hom> h = complete_hom(target, source, m);
  throw_if(!h.has_value(),
           "transform homomorphism verification failed (internal)");
  return *h;
}

/* ------------------------------------------------------------------ */
/* Distinguished constructions.                                        */

struct monogenic_result {
  ternary_pair pair;               /* (A_1, B_1) on L */
  std::array<bigint, 3> resolvent; /* (b_1, b_2, b_3) with
                                    * F_{(A_1,B_1)}(u_1, 1) = g(-u_1) for
                                    * g = x^3 + b_1 x^2 + b_2 x + b_3 */
};

/* For a monic quartic phi = x^4 + a_1 x^3 + a_2 x^2 + a_3 x + a_4, the pair
 *   A_1 = -v_1 v_3 + v_2^2,
 *   B_1 = v_1^2 + a_1 v_1 v_2 + a_2 v_1 v_3 + a_3 v_2 v_3 + a_4 v_3^2
 * has Q(A_1, B_1) = Z[rho], rho a root of phi, on the normalized basis
 *   alpha_1 = rho,  alpha_2 = rho^2 + a_1 rho + a_2,
 *   alpha_3 = rho^3 + a_1 rho^2 + a_2 rho + a_3,
 * and lambda^{11}_{13} = 1, so the pair is primitive. */
inline monogenic_result monogenic_pair(const intpoly &phi) {
  throw_if(poly_degree(phi) != 4 || phi[4] != 1,
           "monogenic pair needs a monic quartic polynomial");
  const bigint &a1 = phi[3], &a2 = phi[2], &a3 = phi[1], &a4 = phi[0];
  ternary_pair p =
      make_ternary_pair(lattice_tag::L, ternary_form{0, 0, -1, 1, 0, 0},
                        ternary_form{1, a1, a2, 0, a3, a4});
  bigint b1 = -2 * a2;
  bigint b2 = a2 * a2 + a1 * a3 - 4 * a4;
  bigint b3 = a3 * a3 - a1 * a2 * a3 + a1 * a1 * a4;
  binary_cubic f = resolvent_form(p);
  assert(f.a == -1 && f.b == b1 && f.c == -b2 && f.d == b3);
  return {p, {b1, b2, b3}};
}

/* The pair with Q(A, B) = Z x R(f), f = (a, b, c, d), on the basis
 * {(1, 0), (0, -w), (0, -t)}:
 *   A = -v_1 v_3 - a v_2^2 - b v_2 v_3,   B = -v_1 v_2 + c v_2 v_3 + d v_3^2.
 * Its resolvent form is f itself. */
inline ternary_pair split_pair(const binary_cubic &f) {
  ternary_pair p =
      make_ternary_pair(lattice_tag::L, ternary_form{0, 0, -1, -f.a, -f.b, 0},
                        ternary_form{0, -1, 0, 0, f.c, f.d});
  assert(resolvent_form(p) == f);
  return p;
}

/* ------------------------------------------------------------------ */
/* Recovering a transporter from a finite-index embedding.             */

namespace detail {

/* delta_2 with delta_2 . from = to (combination only): two exact 2-unknown
 * linear systems over the six coefficient slots */
inline std::optional<int_matrix<2>> solve_combination(const ternary_pair &from,
                                                      const ternary_pair &to) {
  std::array<bigint, 6> f1 = from.x1.coeffs(), f2 = from.x2.coeffs();
  int u = -1, w = -1;
  bigint det;
  for (int s = 0; s < 6 && u < 0; s++)
    for (int t = s + 1; t < 6; t++) {
      det = f1[static_cast<size_t>(s)] * f2[static_cast<size_t>(t)] -
            f1[static_cast<size_t>(t)] * f2[static_cast<size_t>(s)];
      if (det != 0) {
        u = s;
        w = t;
        break;
      }
    }
  if (u < 0)
    return std::nullopt; /* forms linearly dependent */
  int_matrix<2> d2;
  const std::array<bigint, 6> targets[2] = {to.x1.coeffs(), to.x2.coeffs()};
  for (int row = 0; row < 2; row++) {
    const std::array<bigint, 6> &t = targets[row];
    bigint pn = t[static_cast<size_t>(u)] * f2[static_cast<size_t>(w)] -
                t[static_cast<size_t>(w)] * f2[static_cast<size_t>(u)];
    bigint qn = f1[static_cast<size_t>(u)] * t[static_cast<size_t>(w)] -
                f1[static_cast<size_t>(w)] * t[static_cast<size_t>(u)];
    if (!divides(det, pn) || !divides(det, qn))
      return std::nullopt;
    d2(row, 0) = divexact(pn, det);
    d2(row, 1) = divexact(qn, det);
    for (size_t s = 0; s < 6; s++)
      if (d2(row, 0) * f1[s] + d2(row, 1) * f2[s] != t[s])
        return std::nullopt;
  }
  return d2;
}

/* breadth-first words over the unimodular generators, deduplicated */
inline std::vector<mat3> unimodular_words(int height) {
  const mat3 s12{{0, 1, 0, 1, 0, 0, 0, 0, 1}};
  const mat3 s23{{1, 0, 0, 0, 0, 1, 0, 1, 0}};
  const mat3 t21{{1, 0, 0, 1, 1, 0, 0, 0, 1}};
  const mat3 t21i{{1, 0, 0, -1, 1, 0, 0, 0, 1}};
  const std::array<mat3, 4> gens{s12, s23, t21, t21i};

  std::set<mat3> known;
  std::vector<mat3> words{mat3::identity()};
  known.insert(words[0]);
  size_t layer_begin = 0;
  for (int len = 1; len <= height; len++) {
    size_t layer_end = words.size();
    for (size_t w = layer_begin; w < layer_end; w++)
      for (const mat3 &g : gens) {
        mat3 next = words[w] * g;
        if (known.insert(next).second)
          words.push_back(next);
      }
    layer_begin = layer_end;
  }
  return words;
}

/* divisor chains d1 | d2 | d3 with d1 d2 d3 = m, all positive */
inline std::vector<std::array<bigint, 3>> divisor_chains(const bigint &m) {
  std::vector<std::array<bigint, 3>> chains;
  for (bigint d1(1); d1 * d1 * d1 <= m; d1 = d1 + 1) {
    if (!divides(d1, m))
      continue;
    bigint rest = divexact(m, d1);
    for (bigint d2 = d1; d2 * d2 <= rest; d2 = d2 + 1) {
      if (!divides(d2, rest) || !divides(d1, d2))
        continue;
      bigint d3 = divexact(rest, d2);
      if (divides(d2, d3))
        chains.push_back({d1, d2, d3});
    }
  }
  return chains;
}

} /* namespace detail */

struct subring_result {
  int_matrix<3> delta1;
  int_matrix<2> delta2;
};

/* Given an embedding Q(sub) -> Q(p) of finite index m, find matrices with
 * sub = (delta_1, delta_2^{-1}) . p and |det delta_1| = |det delta_2| = m.
 * Candidates for delta_1 are the embedding's own matrix block, then left
 * unimodular words times that block, then elementary-divisor shapes
 * U diag(d_1, d_2, d_3) V with d_1 | d_2 | d_3 and d_1 d_2 d_3 = m over
 * bounded unimodular words U, V; for each candidate, delta_2 is solved
 * exactly from the linear condition delta_2 . sub = (delta_1, 1) . p.  The
 * search is bounded: failure reports the exhausted bound, not
 * nonexistence. */
inline subring_result subring_pair(const ternary_pair &p,
                                   const ternary_pair &sub,
                                   const quartic_hom &embedding,
                                   int height = 5) {
  detail::require_lattice_l(p);
  detail::require_lattice_l(sub);
  throw_if(disc_pair(p) == 0 || disc_pair(sub) == 0,
           "subring transporter needs nondegenerate pairs");
  quartic_ring target = structure_constants(p);
  quartic_ring source = structure_constants(sub);
  throw_if(embedding.matrix.det() == 0, "embedding is not injective");
  throw_if(!detail::is_ring_hom(target, source, embedding),
           "embedding is not a ring homomorphism");
  bigint m = abs(embedding.matrix.det());

  std::set<mat3> tried;
  auto try_delta1 = [&](const mat3 &d1) -> std::optional<subring_result> {
    if (abs(d1.det()) != m || !tried.insert(d1).second)
      return std::nullopt;
    ternary_pair image = make_ternary_pair(lattice_tag::L, act_g1(d1, p.x1),
                                           act_g1(d1, p.x2));
    std::optional<int_matrix<2>> d2 = detail::solve_combination(sub, image);
    if (!d2 || abs(d2->det()) != m)
      return std::nullopt;
    assert(transform_pair(to_rational(d1), inverse(to_rational(*d2)), p) ==
           sub);
    return subring_result{d1, *d2};
  };

  if (std::optional<subring_result> r = try_delta1(embedding.matrix))
    return *r;
  std::vector<mat3> words = detail::unimodular_words(height);
  for (const mat3 &u : words)
    if (std::optional<subring_result> r = try_delta1(u * embedding.matrix))
      return *r;
  for (const std::array<bigint, 3> &chain : detail::divisor_chains(m)) {
    mat3 d;
    for (int i = 0; i < 3; i++)
      d(i, i) = chain[static_cast<size_t>(i)];
    for (const mat3 &u : words)
      for (const mat3 &v : words)
        if (std::optional<subring_result> r = try_delta1(u * d * v))
          return *r;
  }
  throw_if(true, "no transporter found (unimodular word height " +
                     std::to_string(height) + " exhausted)");
  return {}; /* unreachable */
}

} /* namespace ringforms */

#endif /* RINGFORMS_QUARTIC_HPP_ */
