#ifndef RINGFORMS_ETALE_HPP_
#define RINGFORMS_ETALE_HPP_

/* Finite-dimensional commutative Q-algebras given by structure constants,
 * their decomposition into products of number fields, and exact enumeration
 * of algebra / ring isomorphisms between them.
 *
 * Conventions:
 *  - An algebra of rank n is presented by its multiplication table on a
 *    basis e_0, ..., e_{n-1} with e_0 = 1.  Elements are coordinate
 *    vectors over Q.
 *  - A decomposition writes the algebra as a product of fields
 *    K_i = Q[y]/(m_i), m_i monic irreducible in Z[y].  The change of basis
 *    to the concatenated power bases is kept with the decomposition so that
 *    maps can be assembled blockwise.
 *  - Isomorphisms are returned as n x n rational matrices acting on
 *    coordinate columns.  Enumeration is exhaustive: components are matched
 *    by exact root-finding in number fields (Trager's norm method), so the
 *    returned list is the complete set, and every matrix is re-verified to
 *    be a unital multiplicative map before it is returned.
 *  - Ring isomorphisms are the algebra isomorphisms that are integral with
 *    determinant +-1, i.e. those carrying the distinguished lattice
 *    Z e_0 + ... + Z e_{n-1} onto its counterpart.
 *
 * Degrees never exceed 4, so dense linear algebra and quadratic-time
 * polynomial arithmetic are used without apology.
 */

#include "ringforms/integers.hpp"
#include "ringforms/poly.hpp"
#include "ringforms/poly_factor.hpp"
#include "ringforms/sturm.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ringforms {

/* ---------------- dense rational vectors and matrices ---------------- */

using qvec = std::vector<bigrat>;
using qmat = std::vector<std::vector<bigrat>>; /* row-major */

inline qmat qmat_identity(int n) {
  qmat m(n, qvec(n, bigrat(0)));
  for (int i = 0; i < n; i++)
    m[i][i] = 1;
  return m;
}

inline qvec qmat_apply(const qmat &m, const qvec &v) {
  qvec r(m.size(), bigrat(0));
  for (size_t i = 0; i < m.size(); i++) {
    assert(m[i].size() == v.size());
    for (size_t j = 0; j < v.size(); j++)
      r[i] += m[i][j] * v[j];
  }
  return r;
}

inline qmat qmat_mul(const qmat &a, const qmat &b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  qmat c(n, qvec(p, bigrat(0)));
  for (size_t i = 0; i < n; i++) {
    assert(a[i].size() == k);
    for (size_t t = 0; t < k; t++)
      if (a[i][t] != 0)
        for (size_t j = 0; j < p; j++)
          c[i][j] += a[i][t] * b[t][j];
  }
  return c;
}

inline bigrat qmat_det(qmat m) {
  size_t n = m.size();
  bigrat det(1);
  for (size_t c = 0; c < n; c++) {
    size_t p = n;
    for (size_t r = c; r < n; r++)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p == n)
      return bigrat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; r++) {
      if (m[r][c] == 0)
        continue;
      bigrat f = m[r][c] / m[c][c];
      for (size_t cc = c; cc < n; cc++)
        m[r][cc] -= f * m[c][cc];
    }
  }
  return det;
}

inline qmat qmat_inverse(const qmat &a) {
  size_t n = a.size();
  qmat m = a, inv = qmat_identity(static_cast<int>(n));
  for (size_t c = 0; c < n; c++) {
    size_t p = n;
    for (size_t r = c; r < n; r++)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    throw_if(p == n, "inverse of singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    bigrat piv = m[c][c];
    for (size_t cc = 0; cc < n; cc++) {
      m[c][cc] /= piv;
      inv[c][cc] /= piv;
    }
    for (size_t r = 0; r < n; r++) {
      if (r == c || m[r][c] == 0)
        continue;
      bigrat f = m[r][c];
      for (size_t cc = 0; cc < n; cc++) {
        m[r][cc] -= f * m[c][cc];
        inv[r][cc] -= f * inv[c][cc];
      }
    }
  }
  return inv;
}

inline bool qmat_is_integral(const qmat &m) {
  for (const auto &row : m)
    for (const auto &x : row)
      if (x.get_den() != 1)
        return false;
  return true;
}

/* ---------------- structure-constant algebras ---------------- */

/* table[i][j] = coordinates of e_i * e_j.  The basis must start with the
 * identity: e_0 = 1. */
struct qalgebra {
  int n = 0;
  std::vector<std::vector<qvec>> table;
};

inline qvec alg_zero(const qalgebra &a) { return qvec(a.n, bigrat(0)); }

inline qvec alg_one(const qalgebra &a) {
  qvec v = alg_zero(a);
  v[0] = 1;
  return v;
}

inline qvec alg_add(const qvec &x, const qvec &y) {
  qvec r = x;
  for (size_t i = 0; i < r.size(); i++)
    r[i] += y[i];
  return r;
}

inline qvec alg_sub(const qvec &x, const qvec &y) {
  qvec r = x;
  for (size_t i = 0; i < r.size(); i++)
    r[i] -= y[i];
  return r;
}

inline qvec alg_scale(const qvec &x, const bigrat &s) {
  qvec r = x;
  for (auto &c : r)
    c *= s;
  return r;
}

inline bool alg_is_zero(const qvec &x) {
  for (const auto &c : x)
    if (c != 0)
      return false;
  return true;
}

inline qvec alg_mul(const qalgebra &a, const qvec &x, const qvec &y) {
  qvec r = alg_zero(a);
  for (int i = 0; i < a.n; i++) {
    if (x[i] == 0)
      continue;
    for (int j = 0; j < a.n; j++) {
      if (y[j] == 0)
        continue;
      bigrat f = x[i] * y[j];
      const qvec &t = a.table[i][j];
      for (int k = 0; k < a.n; k++)
        r[k] += f * t[k];
    }
  }
  return r;
}

/* Structural sanity of a table: dimensions, e_0 = 1, commutativity,
 * associativity on basis triples. */
inline bool alg_well_formed(const qalgebra &a) {
  if (a.n < 1 || static_cast<int>(a.table.size()) != a.n)
    return false;
  for (const auto &row : a.table) {
    if (static_cast<int>(row.size()) != a.n)
      return false;
    for (const auto &v : row)
      if (static_cast<int>(v.size()) != a.n)
        return false;
  }
  for (int j = 0; j < a.n; j++) {
    for (int k = 0; k < a.n; k++) {
      if (a.table[0][j][k] != ((j == k) ? 1 : 0))
        return false;
      if (a.table[j][0][k] != ((j == k) ? 1 : 0))
        return false;
    }
  }
  for (int i = 0; i < a.n; i++)
    for (int j = 0; j < a.n; j++)
      if (a.table[i][j] != a.table[j][i])
        return false;
  for (int i = 0; i < a.n; i++)
    for (int j = 0; j < a.n; j++)
      for (int k = 0; k < a.n; k++) {
        qvec ei = alg_zero(a), ej = alg_zero(a), ek = alg_zero(a);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        qvec lhs = alg_mul(a, alg_mul(a, ei, ej), ek);
        qvec rhs = alg_mul(a, ei, alg_mul(a, ej, ek));
        if (lhs != rhs)
          return false;
      }
  return true;
}

/* Evaluate a rational polynomial at an algebra element (Horner). */
inline qvec alg_eval(const qalgebra &a, const ratpoly &p, const qvec &x) {
  qvec r = alg_zero(a);
  for (size_t i = p.size(); i-- > 0;) {
    r = alg_mul(a, r, x);
    r[0] += p[i];
  }
  return r;
}

/* The algebra Q[x]/(f) on the power basis 1, x, ..., x^{n-1}, for monic
 * integral f. */
inline qalgebra power_basis_algebra(const intpoly &f) {
  throw_if(f.empty() || f.back() != 1, "power basis needs a monic polynomial");
  int n = poly_degree(f);
  throw_if(n < 1, "power basis needs positive degree");
  qalgebra a;
  a.n = n;
  a.table.assign(n, std::vector<qvec>(n, qvec(n, bigrat(0))));
  ratpoly fr = to_ratpoly(f);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      ratpoly xij(i + j + 1, bigrat(0));
      xij[i + j] = 1;
      ratpoly red = poly_mod(xij, fr);
      for (size_t k = 0; k < red.size(); k++)
        a.table[i][j][k] = red[k];
    }
  return a;
}

/* Monic minimal polynomial of an element: Gaussian elimination on the
 * sequence of powers 1, x, x^2, ...; the first linear relation gives the
 * minimal polynomial, with monicity automatic because reductions only
 * involve lower powers. */
inline ratpoly algebra_minpoly(const qalgebra &a, const qvec &x) {
  struct row {
    qvec v;
    ratpoly combo;
    int pivot;
  };
  std::vector<row> rows;
  qvec p = alg_one(a);
  for (int k = 0;; k++) {
    assert(k <= a.n);
    qvec v = p;
    ratpoly combo(k + 1, bigrat(0));
    combo[k] = 1;
    for (const row &r : rows) {
      const bigrat c = v[r.pivot];
      if (c != 0) {
        bigrat f = c / r.v[r.pivot];
        for (int i = 0; i < a.n; i++)
          v[i] -= f * r.v[i];
        combo = poly_sub(combo, poly_scale(r.combo, f));
      }
    }
    int piv = -1;
    for (int i = 0; i < a.n; i++)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0)
      return combo;
    rows.push_back({v, combo, piv});
    p = alg_mul(a, p, x);
  }
}

/* ---------------- number-field arithmetic: K = Q[y]/(m) ---------------- */

/* Elements are reduced rational polynomials of degree < deg m. */

inline ratpoly nf_reduce(const intpoly &m, const ratpoly &a) {
  return poly_mod(a, to_ratpoly(m));
}

inline ratpoly nf_mul(const intpoly &m, const ratpoly &a, const ratpoly &b) {
  return nf_reduce(m, poly_mul(a, b));
}

inline ratpoly nf_inv(const intpoly &m, const ratpoly &a) {
  throw_if(poly_is_zero(a), "inverse of zero in a number field");
  ratpoly u, v;
  ratpoly g = poly_xgcd(a, to_ratpoly(m), u, v);
  /* m irreducible and a nonzero of smaller degree, so gcd is 1 */
  assert(poly_degree(g) == 0 && g[0] == 1);
  return nf_reduce(m, u);
}

/* Polynomials over K, index = degree in x, each coefficient reduced. */
using kpoly = std::vector<ratpoly>;

inline kpoly &kpoly_normalize(kpoly &f) {
  while (!f.empty() && poly_is_zero(f.back()))
    f.pop_back();
  return f;
}

inline kpoly kpoly_mul(const intpoly &m, const kpoly &a, const kpoly &b) {
  if (a.empty() || b.empty())
    return kpoly{};
  kpoly c(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      c[i + j] = poly_add(c[i + j], poly_mul(a[i], b[j]));
  for (auto &x : c)
    x = nf_reduce(m, x);
  return kpoly_normalize(c);
}

inline kpoly kpoly_monic(const intpoly &m, kpoly f) {
  kpoly_normalize(f);
  if (f.empty())
    return f;
  ratpoly li = nf_inv(m, f.back());
  for (auto &x : f)
    x = nf_mul(m, x, li);
  return f;
}

/* Remainder of a by a monic divisor b. */
inline kpoly kpoly_rem(const intpoly &m, kpoly a, const kpoly &b) {
  assert(!b.empty() && poly_degree(b.back()) == 0 && b.back()[0] == 1);
  kpoly_normalize(a);
  while (a.size() >= b.size()) {
    ratpoly lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++)
      a[i + shift] = nf_reduce(
          m, poly_sub(a[i + shift], poly_mul(lead, b[i])));
    kpoly_normalize(a);
  }
  return a;
}

/* Monic gcd in K[x]. */
inline kpoly kpoly_gcd(const intpoly &m, kpoly a, kpoly b) {
  kpoly_normalize(a);
  kpoly_normalize(b);
  while (!b.empty()) {
    kpoly bm = kpoly_monic(m, b);
    kpoly r = kpoly_rem(m, a, bm);
    a = bm;
    b = r;
  }
  return kpoly_monic(m, a);
}

/* All roots in K = Q[y]/(m) of an integer polynomial f (m monic
 * irreducible).  Trager's method: with f_s(x) = f(x - s*zeta), the norm
 * N(x) = Res_y(m(y), f(x - s*y)) is computed for shifts s = 1, -1, 2, ...
 * until squarefree; each linear gcd of f_s with a rational irreducible
 * factor of N pulls back to a root.  The bivariate resultant is evaluated
 * at integer points and interpolated, keeping everything univariate. */
inline std::vector<ratpoly> roots_in_field(const intpoly &f0,
                                           const intpoly &m) {
  throw_if(m.empty() || m.back() != 1, "field modulus must be monic");
  std::vector<ratpoly> roots;
  if (poly_degree(f0) <= 0)
    return roots;

  /* squarefree part of f over Q, cleared to a primitive integer poly */
  ratpoly fr = to_ratpoly(f0);
  ratpoly g = poly_gcd(fr, to_ratpoly(poly_derivative(f0)));
  ratpoly fq, frem;
  poly_divmod(fr, g, fq, frem);
  assert(frem.empty());
  intpoly f = poly_primitive_part(poly_clear_denominators(fq));
  int df = poly_degree(f);
  if (df <= 0)
    return roots;
  int dm = poly_degree(m);

  if (dm == 1) {
    /* K = Q: rational roots come from the linear factors of f. */
    poly_factorization fac = poly_factor(f);
    for (const auto &[h, mult] : fac.factors) {
      (void)mult;
      if (poly_degree(h) == 1) {
        bigrat r = bigrat(-h[0]) / bigrat(h[1]);
        ratpoly root;
        if (r != 0)
          root = {r};
        roots.push_back(root);
      }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  for (int si = 1;; si++) {
    assert(si <= 64);
    bigint s = bigint((si + 1) / 2);
    if (si % 2 == 0)
      s = -s;

    /* N(x) by evaluation and Lagrange interpolation */
    int dn = df * dm;
    std::vector<bigrat> xs, vals;
    for (int t = 0; xs.size() < static_cast<size_t>(dn) + 1; t++) {
      bigint x0 = bigint((t + 1) / 2);
      if (t % 2 == 1)
        x0 = -x0;
      /* f(x0 - s*y) as a polynomial in y; its degree in y never drops */
      intpoly fy = poly_compose(f, intpoly{x0, -s});
      vals.push_back(bigrat(poly_resultant(m, fy)));
      xs.push_back(bigrat(x0));
    }
    ratpoly norm;
    for (size_t i = 0; i < xs.size(); i++) {
      ratpoly basis = {bigrat(1)};
      bigrat denom(1);
      for (size_t j = 0; j < xs.size(); j++) {
        if (j == i)
          continue;
        basis = poly_mul(basis, ratpoly{-xs[j], bigrat(1)});
        denom *= xs[i] - xs[j];
      }
      norm = poly_add(norm, poly_scale(basis, vals[i] / denom));
    }
    intpoly np(norm.size());
    for (size_t i = 0; i < norm.size(); i++) {
      assert(norm[i].get_den() == 1);
      np[i] = norm[i].get_num();
    }
    poly_normalize(np);
    assert(poly_degree(np) == dn);

    if (!poly_is_squarefree(np))
      continue;

    /* f_s(x) = f(x - s*zeta) in K[x], by Horner */
    kpoly lin = {ratpoly{bigrat(0), bigrat(-s)}, ratpoly{bigrat(1)}};
    kpoly fs;
    for (int i = df; i >= 0; i--) {
      fs = kpoly_mul(m, fs, lin);
      if (f[i] != 0) {
        if (fs.empty())
          fs.resize(1);
        fs[0] = poly_add(fs[0], ratpoly{bigrat(f[i])});
      }
    }

    poly_factorization fac = poly_factor(np);
    for (const auto &[h, mult] : fac.factors) {
      (void)mult;
      if (poly_degree(h) < 1)
        continue;
      kpoly hk(h.size());
      for (size_t i = 0; i < h.size(); i++)
        if (h[i] != 0)
          hk[i] = ratpoly{bigrat(h[i])};
      kpoly_normalize(hk);
      kpoly gk = kpoly_gcd(m, fs, hk);
      if (poly_degree(gk) == 1) {
        /* gk = x + c, root of f_s is -c; root of f is -c - s*zeta */
        ratpoly root = poly_neg(gk[0]);
        root = nf_reduce(m, poly_sub(root, ratpoly{bigrat(0), bigrat(s)}));
        roots.push_back(root);
      }
    }

    /* verify each root exactly */
    for (const ratpoly &r : roots) {
      ratpoly acc;
      for (size_t i = f.size(); i-- > 0;) {
        acc = nf_mul(m, acc, r);
        acc = poly_add(acc, ratpoly{bigrat(f[i])});
        poly_normalize(acc);
      }
      assert(poly_is_zero(acc));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
}

/* ---------------- decomposition into fields ---------------- */

struct etale_component {
  intpoly m;                  /* monic irreducible minimal polynomial */
  std::vector<qvec> pow_basis; /* coords of e, z*e, ..., z^{deg-1}*e */
};

struct etale_split {
  std::vector<etale_component> comps;
  qvec zeta;       /* the generating element used */
  intpoly minpoly; /* its minimal polynomial, = product of the comp moduli */
  qmat basis;      /* columns = concatenated power bases (component-major) */
  qmat basis_inv;
};

namespace detail {

/* Deterministic candidate generators: basis sums first, then a height-
 * ordered grid.  Candidates have first coordinate 0 (constant shifts do
 * not change whether an element generates). */
inline std::vector<std::vector<long>> generator_candidates(int n) {
  std::vector<std::vector<long>> out;
  int k = n - 1;
  auto push = [&](std::vector<long> v) {
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(std::move(v));
  };
  if (k == 0) {
    /* rank 1: the zero element already generates (minpoly x) */
    push({});
    return out;
  }
  for (int i = 0; i < k; i++) {
    std::vector<long> v(k, 0);
    v[i] = 1;
    push(v);
  }
  for (int i = 0; i < k; i++)
    for (int j = i + 1; j < k; j++) {
      std::vector<long> v(k, 0);
      v[i] = v[j] = 1;
      push(v);
    }
  if (k >= 3)
    push(std::vector<long>(k, 1));
  for (long h = 1; h <= 5 && out.size() < 100; h++) {
    std::vector<long> v(k, -h);
    for (;;) {
      long mx = 0;
      for (long c : v)
        mx = std::max(mx, std::abs(c));
      if (mx == h)
        push(v);
      if (out.size() >= 100)
        break;
      int i = k - 1;
      while (i >= 0 && v[i] == h)
        v[i--] = -h;
      if (i < 0)
        break;
      v[i]++;
    }
  }
  if (out.size() > 100)
    out.resize(100);
  return out;
}

} /* namespace detail */

/* Decompose a commutative algebra into a product of number fields.  Fails
 * with "algebra is not etale" when no generating element with squarefree
 * minimal polynomial exists among the deterministic candidates (in
 * particular whenever the algebra has nilpotents).  Only integral
 * multiplication tables are supported, which keeps every minimal
 * polynomial integral. */
inline etale_split etale_decompose(const qalgebra &a) {
  assert(alg_well_formed(a));
  etale_split sp;

  qvec zeta;
  intpoly mp;
  for (const auto &cand : detail::generator_candidates(a.n)) {
    qvec z = alg_zero(a);
    for (int i = 1; i < a.n; i++)
      z[i] = bigrat(cand[i - 1]);
    ratpoly p = algebra_minpoly(a, z);
    if (poly_degree(p) != a.n)
      continue;
    intpoly pi(p.size());
    bool integral = true;
    for (size_t i = 0; i < p.size(); i++) {
      if (p[i].get_den() != 1) {
        integral = false;
        break;
      }
      pi[i] = p[i].get_num();
    }
    throw_if(!integral, "multiplication table is not integral");
    if (!poly_is_squarefree(pi))
      continue;
    zeta = z;
    mp = pi;
    break;
  }
  throw_if(mp.empty(), "algebra is not etale");
  sp.zeta = zeta;
  sp.minpoly = mp;

  poly_factorization fac = poly_factor(mp);
  assert(fac.content == 1);
  std::vector<intpoly> mods;
  for (const auto &[h, mult] : fac.factors) {
    assert(mult == 1);
    assert(h.back() == 1);
    mods.push_back(h);
  }
  /* deterministic component order: by degree, then coefficient lex */
  std::sort(mods.begin(), mods.end(), [](const intpoly &x, const intpoly &y) {
    if (x.size() != y.size())
      return x.size() < y.size();
    for (size_t i = 0; i < x.size(); i++) {
      if (x[i] != y[i])
        return x[i] < y[i];
    }
    return false;
  });

  /* orthogonal idempotents by partial-fraction inverses */
  qvec esum = alg_zero(a);
  std::vector<qvec> idem;
  for (const intpoly &mi : mods) {
    intpoly cof = poly_divexact(mp, mi);
    ratpoly u, v;
    ratpoly g = poly_xgcd(to_ratpoly(cof), to_ratpoly(mi), u, v);
    assert(poly_degree(g) == 0 && g[0] == 1);
    ratpoly ei_poly = poly_mod(poly_mul(u, to_ratpoly(cof)), to_ratpoly(mp));
    qvec e = alg_eval(a, ei_poly, zeta);
    idem.push_back(e);
    esum = alg_add(esum, e);
  }
  assert(esum == alg_one(a));
  for (size_t i = 0; i < idem.size(); i++)
    for (size_t j = 0; j < idem.size(); j++) {
      qvec prod = alg_mul(a, idem[i], idem[j]);
      assert(prod == (i == j ? idem[i] : alg_zero(a)));
    }

  for (size_t i = 0; i < mods.size(); i++) {
    etale_component comp;
    comp.m = mods[i];
    qvec p = idem[i];
    for (int t = 0; t < poly_degree(mods[i]); t++) {
      comp.pow_basis.push_back(p);
      p = alg_mul(a, p, zeta);
    }
    sp.comps.push_back(std::move(comp));
  }

  sp.basis.assign(a.n, qvec(a.n, bigrat(0)));
  int col = 0;
  for (const auto &comp : sp.comps)
    for (const qvec &b : comp.pow_basis) {
      for (int r = 0; r < a.n; r++)
        sp.basis[r][col] = b[r];
      col++;
    }
  assert(col == a.n);
  sp.basis_inv = qmat_inverse(sp.basis);
  return sp;
}

/* Number of real embeddings (sum of real root counts of the component
 * minimal polynomials).  An independent handle on real invariants. */
inline int count_real_embeddings(const etale_split &sp) {
  int r = 0;
  for (const auto &c : sp.comps)
    r += sturm_real_roots(c.m);
  return r;
}

/* ---------------- isomorphism enumeration ---------------- */

namespace detail {

/* Assemble the matrix of the map determined by a component matching pi and
 * a choice of roots: the i-th component generator z*e_i of A is sent to the
 * chosen root r_i inside component pi(i) of B. */
inline qmat assemble_iso(const etale_split &sa, const etale_split &sb,
                         const std::vector<int> &pi,
                         const std::vector<ratpoly> &root_choice, int n) {
  qmat blk(n, qvec(n, bigrat(0)));
  /* row offsets of B's components in power coordinates */
  std::vector<int> boff(sb.comps.size() + 1, 0);
  for (size_t j = 0; j < sb.comps.size(); j++)
    boff[j + 1] = boff[j] + poly_degree(sb.comps[j].m);
  int col = 0;
  for (size_t i = 0; i < sa.comps.size(); i++) {
    int d = poly_degree(sa.comps[i].m);
    const intpoly &mb = sb.comps[pi[i]].m;
    ratpoly rpow = {bigrat(1)};
    for (int t = 0; t < d; t++) {
      for (size_t c = 0; c < rpow.size(); c++)
        blk[boff[pi[i]] + c][col] = rpow[c];
      col++;
      rpow = nf_mul(mb, rpow, root_choice[i]);
    }
  }
  assert(col == n);
  return qmat_mul(sb.basis, qmat_mul(blk, sa.basis_inv));
}

inline bool iso_is_multiplicative(const qalgebra &a, const qalgebra &b,
                                  const qmat &phi) {
  int n = a.n;
  qvec one_b = alg_one(b);
  std::vector<qvec> images(n);
  for (int i = 0; i < n; i++) {
    qvec ei = alg_zero(a);
    ei[i] = 1;
    images[i] = qmat_apply(phi, ei);
  }
  if (images[0] != one_b)
    return false;
  for (int i = 0; i < n; i++)
    for (int j = i; j < n; j++) {
      qvec lhs = qmat_apply(phi, a.table[i][j]);
      qvec rhs = alg_mul(b, images[i], images[j]);
      if (lhs != rhs)
        return false;
    }
  return true;
}

} /* namespace detail */

/* The complete set of unital Q-algebra isomorphisms A -> B, as coordinate
 * matrices.  Empty when the algebras are not isomorphic. */
inline std::vector<qmat> algebra_isomorphisms(const qalgebra &a,
                                              const qalgebra &b) {
  std::vector<qmat> result;
  if (a.n != b.n)
    return result;
  etale_split sa = etale_decompose(a);
  etale_split sb = etale_decompose(b);
  size_t k = sa.comps.size();
  if (sb.comps.size() != k)
    return result;

  /* roots of each A-modulus in each same-degree B-field */
  std::map<std::pair<size_t, size_t>, std::vector<ratpoly>> roots;
  for (size_t i = 0; i < k; i++)
    for (size_t j = 0; j < k; j++) {
      if (poly_degree(sa.comps[i].m) != poly_degree(sb.comps[j].m))
        continue;
      roots[{i, j}] = roots_in_field(sa.comps[i].m, sb.comps[j].m);
    }

  std::vector<int> pi(k, -1);
  std::vector<char> used(k, 0);
  std::vector<ratpoly> choice(k);
  auto rec = [&](auto &&self, size_t i) -> void {
    if (i == k) {
      qmat phi = detail::assemble_iso(sa, sb, pi, choice,  a.n);
      assert(detail::iso_is_multiplicative(a, b, phi));
      result.push_back(phi);
      return;
    }
    for (size_t j = 0; j < k; j++) {
      if (used[j])
        continue;
      auto it = roots.find({i, j});
      if (it == roots.end() || it->second.empty())
        continue;
      used[j] = 1;
      pi[i] = static_cast<int>(j);
      for (const ratpoly &r : it->second) {
        choice[i] = r;
        self(self, i + 1);
      }
      used[j] = 0;
      pi[i] = -1;
    }
  };
  rec(rec, 0);
  return result;
}

/* Isomorphisms carrying the distinguished lattice onto its counterpart:
 * integral matrices of determinant +-1. */
inline std::vector<qmat> ring_isomorphisms(const qalgebra &a,
                                           const qalgebra &b) {
  std::vector<qmat> result;
  for (qmat &phi : algebra_isomorphisms(a, b)) {
    if (!qmat_is_integral(phi))
      continue;
    bigrat d = qmat_det(phi);
    if (d == 1 || d == -1)
      result.push_back(std::move(phi));
  }
  return result;
}

inline std::vector<qmat> ring_automorphisms(const qalgebra &a) {
  return ring_isomorphisms(a, a);
}

/* ---------------- classification labels ---------------- */

namespace detail {

/* Classical cubic resolvent of a monic quartic x^4+p x^3+q x^2+r x+s:
 * y^3 - q y^2 + (pr - 4s) y - (p^2 s - 4 q s + r^2).  Its roots are
 * x1 x2 + x3 x4 and companions, and its discriminant equals that of the
 * quartic. */
inline intpoly cubic_resolvent(const intpoly &m) {
  assert(poly_degree(m) == 4 && m.back() == 1);
  const bigint &p = m[3], &q = m[2], &r = m[1], &s = m[0];
  intpoly rc = {-(p * p * s - 4 * q * s + r * r), p * r - 4 * s, -q,
                bigint(1)};
  poly_normalize(rc);
  assert(poly_discriminant(rc) == poly_discriminant(m));
  return rc;
}

} /* namespace detail */

/* Human-readable isomorphism type of an etale algebra of rank <= 4.
 * Quartic fields carry the Galois group of their splitting field, decided
 * by the factorization of the cubic resolvent, the square class of the
 * discriminant, and the automorphism count of the field itself. */
inline std::string etale_label(const etale_split &sp, int n) {
  std::vector<int> degs;
  for (const auto &c : sp.comps)
    degs.push_back(poly_degree(c.m));
  std::sort(degs.begin(), degs.end(), std::greater<int>());

  auto cubic_label = [&](const intpoly &m) {
    size_t nroots = roots_in_field(m, m).size();
    assert(nroots == 1 || nroots == 3);
    return nroots == 3 ? std::string("cubic field (Galois)")
                       : std::string("cubic field (non-Galois)");
  };

  if (n == 1)
    return "Q";
  if (n == 2)
    return degs == std::vector<int>{2} ? "quad" : "Q^2";
  if (n == 3) {
    if (degs == std::vector<int>{3})
      return cubic_label(sp.comps[0].m);
    if (degs == std::vector<int>{2, 1})
      return "Q + quad";
    return "Q^3";
  }
  assert(n == 4);
  if (degs == std::vector<int>{4}) {
    const intpoly &m = sp.comps[0].m;
    size_t naut = roots_in_field(m, m).size();
    intpoly rc = detail::cubic_resolvent(m);
    poly_factorization fac = poly_factor(rc);
    int linear = 0;
    for (const auto &[h, mult] : fac.factors) {
      assert(mult == 1);
      if (poly_degree(h) == 1)
        linear++;
    }
    if (linear == 0) {
      assert(naut == 1);
      bigint disc = poly_discriminant(m);
      bool square = sgn(disc) > 0 && is_perfect_square(disc);
      return square ? "quartic field (A4)" : "quartic field (S4)";
    }
    if (linear == 3) {
      assert(naut == 4);
      return "quartic field (V4)";
    }
    assert(linear == 1);
    if (naut == 4)
      return "quartic field (C4)";
    assert(naut == 2);
    return "quartic field (D4)";
  }
  if (degs == std::vector<int>{3, 1}) {
    for (const auto &c : sp.comps)
      if (poly_degree(c.m) == 3)
        return "Q + " + cubic_label(c.m);
  }
  if (degs == std::vector<int>{2, 2})
    return "quad + quad";
  if (degs == std::vector<int>{2, 1, 1})
    return "Q^2 + quad";
  return "Q^4";
}

inline std::string classify_etale(const qalgebra &a) {
  return etale_label(etale_decompose(a), a.n);
}

/* Isomorphism type of an etale algebra: the multiset of minimal polynomials
 * of its field components (monic, integral, sorted by degree then
 * coefficients) together with the human-readable label.  The polynomials
 * depend on the generators found during decomposition, so two isomorphic
 * algebras may report different (but componentwise root-sharing) factors;
 * the label and the degree multiset are canonical. */
struct etale_type {
  std::vector<intpoly> factors;
  std::string label;
};

inline etale_type classify_algebra(const qalgebra &a) {
  etale_split sp = etale_decompose(a);
  etale_type t;
  for (const auto &c : sp.comps)
    t.factors.push_back(c.m);
  t.label = etale_label(sp, a.n);
  int degsum = 0;
  for (const auto &m : t.factors)
    degsum += poly_degree(m);
  assert(degsum == a.n);
  return t;
}

/* Unit-preserving ring automorphisms of the underlying order, listed as
 * integer matrices in the given basis.  The identity is always present and
 * the list is closed under composition (both asserted), so `order` really
 * is the order of a finite group. */
struct aut_group {
  std::vector<qmat> elements;
  long order = 0;
};

inline aut_group automorphism_group(const qalgebra &a) {
  aut_group g;
  g.elements = ring_automorphisms(a);
  g.order = static_cast<long>(g.elements.size());
  bool has_id = false;
  for (const auto &m : g.elements)
    if (m == qmat_identity(a.n))
      has_id = true;
  assert(has_id);
  for (const auto &m1 : g.elements) {
    for (const auto &m2 : g.elements) {
      qmat prod = qmat_mul(m1, m2);
      bool found = false;
      for (const auto &m : g.elements)
        if (m == prod)
          found = true;
      assert(found);
    }
  }
  return g;
}

/* Factor a monic integer polynomial of degree 1..4 into monic irreducible
 * factors, repeated with multiplicity and sorted by degree then
 * coefficients.  The product of the returned factors equals the input. */
inline std::vector<intpoly> factor_low_degree(const intpoly &p) {
  throw_if(p.empty() || p.back() != bigint(1),
           "factor_low_degree needs a monic polynomial");
  int deg = poly_degree(p);
  throw_if(deg < 1 || deg > 4, "factor_low_degree handles degrees 1 through 4");
  poly_factorization fac = poly_factor(p);
  assert(fac.content == bigint(1));
  std::vector<intpoly> out;
  for (const auto &[h, mult] : fac.factors)
    for (int i = 0; i < mult; i++)
      out.push_back(h);
  std::sort(out.begin(), out.end(), [](const intpoly &x, const intpoly &y) {
    if (poly_degree(x) != poly_degree(y))
      return poly_degree(x) < poly_degree(y);
    for (size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i])
        return x[i] < y[i];
    return false;
  });
  intpoly prod{bigint(1)};
  for (const auto &h : out)
    prod = poly_mul(prod, h);
  assert(prod == p);
  return out;
}

} /* namespace ringforms */

#endif
