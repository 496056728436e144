#ifndef RINGFORMS_POLY_FACTOR_HPP_
#define RINGFORMS_POLY_FACTOR_HPP_

/* Factorization of integer polynomials (Zassenhaus).
 *
 * Pipeline for a primitive squarefree monic input: pick a prime p keeping
 * the polynomial squarefree mod p, factor mod p by Berlekamp's nullspace
 * method, Hensel-lift the modular factors past twice the Mignotte bound
 * (von zur Gathen & Gerhard, Algorithm 15.10 for the lifting step), then
 * recombine subsets.  Degrees in this library stay <= 16 (Trager norms of
 * quartics over quartic fields), where this classical pipeline is
 * effortless.  Non-monic input is monicized by x -> x/lc scaling first;
 * multiplicities come from Yun's squarefree decomposition.
 */

#include "ringforms/poly.hpp"

#include <cstdint>
#include <map>
#include <numeric>

namespace ringforms {

namespace fpoly {

/* Dense polynomials over F_p, p < 2^31, coefficients in [0, p). */
using fp = std::vector<int64_t>;

inline fp &norm(fp &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
  return a;
}

inline int64_t inv_mod(int64_t a, int64_t p) {
  int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  assert(r == 1);
  return ((t % p) + p) % p;
}

inline fp mul(const fp &a, const fp &b, int64_t p) {
  if (a.empty() || b.empty())
    return {};
  fp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return norm(c);
}

/* a mod b, b nonzero */
inline fp rem(fp a, const fp &b, int64_t p) {
  norm(a);
  int64_t binv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    int64_t f = a.back() * binv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); i++)
      a[i + shift] = ((a[i + shift] - f * b[i]) % p + p) % p;
    norm(a);
  }
  return a;
}

inline fp monic(fp a, int64_t p) {
  norm(a);
  if (a.empty())
    return a;
  int64_t f = inv_mod(a.back(), p);
  for (auto &x : a)
    x = x * f % p;
  return a;
}

inline fp gcd(fp a, fp b, int64_t p) {
  norm(a);
  norm(b);
  while (!b.empty()) {
    fp r = rem(a, b, p);
    a = b;
    b = r;
  }
  return monic(a, p);
}

inline fp deriv(const fp &a, int64_t p) {
  if (a.size() <= 1)
    return {};
  fp d(a.size() - 1);
  for (size_t i = 1; i < a.size(); i++)
    d[i - 1] = (int64_t)(i % p) * a[i] % p;
  return norm(d);
}

inline fp powmod_x(int64_t e_is_p, const fp &f, int64_t p) {
  /* x^p mod f by binary exponentiation */
  fp result{1}, base{0, 1};
  int64_t e = e_is_p;
  while (e > 0) {
    if (e & 1)
      result = rem(mul(result, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return result;
}

inline fp reduce(const intpoly &a, int64_t p) {
  fp r(a.size());
  for (size_t i = 0; i < a.size(); i++) {
    bigint m = a[i] % p; /* sign follows a[i] with GMP */
    long v = m.get_si();
    r[i] = ((v % p) + p) % p;
  }
  return norm(r);
}

/* Berlekamp factorization of a squarefree monic f mod p into monic
 * irreducible factors. */
inline std::vector<fp> berlekamp(const fp &f, int64_t p) {
  int n = (int)f.size() - 1;
  assert(n >= 1);
  if (n == 1)
    return {f};
  /* Q matrix: row i = coefficients of x^(p*i) mod f */
  std::vector<fp> rows(n);
  fp xp = powmod_x(p, f, p);
  fp cur{1};
  for (int i = 0; i < n; i++) {
    rows[i] = cur;
    rows[i].resize(n, 0);
    cur = rem(mul(cur, xp, p), f, p);
  }
  /* nullspace of (Q - I)^T acting on row vectors v: v Q = v.  Build the
   * matrix M with M[i][j] = rows[i][j] - delta_ij and find its left
   * nullspace == right nullspace of M^T; use plain Gaussian elimination
   * on M^T. */
  std::vector<std::vector<int64_t>> m(n, std::vector<int64_t>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      m[j][i] = ((rows[i][j] - (i == j ? 1 : 0)) % p + p) % p;
  /* columns of the kernel of m */
  std::vector<int> pivot_col_of_row(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; col++) {
    int piv = -1;
    for (int r = rank; r < n; r++)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(m[rank], m[piv]);
    int64_t inv = inv_mod(m[rank][col], p);
    for (int j = 0; j < n; j++)
      m[rank][j] = m[rank][j] * inv % p;
    for (int r = 0; r < n; r++)
      if (r != rank && m[r][col] != 0) {
        int64_t f2 = m[r][col];
        for (int j = 0; j < n; j++)
          m[r][j] = ((m[r][j] - f2 * m[rank][j]) % p + p) % p;
      }
    pivot_col_of_row[rank] = col;
    rank++;
  }
  std::vector<fp> basis; /* kernel vectors as polynomials */
  std::vector<bool> is_pivot(n, false);
  for (int r = 0; r < rank; r++)
    is_pivot[pivot_col_of_row[r]] = true;
  for (int col = 0; col < n; col++) {
    if (is_pivot[col])
      continue;
    fp v(n, 0);
    v[col] = 1;
    for (int r = 0; r < rank; r++) {
      int pc = pivot_col_of_row[r];
      v[pc] = ((-m[r][col]) % p + p) % p;
    }
    basis.push_back(norm(v));
  }
  size_t nfactors = basis.size();
  std::vector<fp> factors{f};
  if (nfactors == 1)
    return factors;
  for (const fp &v : basis) {
    if (factors.size() == nfactors)
      break;
    if (poly_degree(v) < 1)
      continue; /* the constant vector splits nothing */
    std::vector<fp> next;
    for (const fp &g : factors) {
      if ((int)g.size() - 1 <= 1) {
        next.push_back(g);
        continue;
      }
      fp remain = g;
      for (int64_t c = 0; c < p && (int)remain.size() - 1 > 0; c++) {
        fp vc = v;
        if (vc.empty())
          vc.resize(1, 0);
        vc[0] = ((vc[0] - c) % p + p) % p;
        fp d = gcd(remain, vc, p);
        if ((int)d.size() - 1 >= 1 && d.size() < remain.size()) {
          next.push_back(d);
          /* remain /= d */
          fp q;
          {
            /* exact division: remain = d * q */
            fp r2 = remain;
            q.assign(remain.size() - d.size() + 1, 0);
            int64_t dinv = inv_mod(d.back(), p);
            while (r2.size() >= d.size() && !r2.empty()) {
              int64_t fmul = r2.back() * dinv % p;
              size_t shift = r2.size() - d.size();
              q[shift] = fmul;
              for (size_t i = 0; i < d.size(); i++)
                r2[i + shift] = ((r2[i + shift] - fmul * d[i]) % p + p) % p;
              norm(r2);
            }
            assert(r2.empty());
          }
          remain = monic(q, p);
        }
      }
      if ((int)remain.size() - 1 >= 1)
        next.push_back(remain);
    }
    factors = next;
  }
  for (auto &g : factors)
    g = monic(g, p);
  return factors;
}

} /* namespace fpoly */

namespace detail {

/* Polynomial arithmetic mod m (m = p^k), coefficients centered into
 * (-m/2, m/2] at the end of each operation. */
inline intpoly center_mod(intpoly a, const bigint &m) {
  bigint half = m / 2;
  for (bigint &x : a) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (x > half)
      x -= m;
  }
  return poly_normalize(a);
}

inline intpoly mulmod(const intpoly &a, const intpoly &b, const bigint &m) {
  return center_mod(poly_mul(a, b), m);
}

/* Division with remainder mod m by a monic divisor. */
inline void divmod_monic_mod(const intpoly &a, const intpoly &b, const bigint &m,
                             intpoly &q, intpoly &r) {
  assert(!b.empty() && b.back() == 1);
  r = a;
  q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, bigint(0));
  while (r.size() >= b.size() && !r.empty()) {
    bigint f = r.back();
    size_t shift = r.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); i++)
      r[i + shift] -= f * b[i];
    poly_normalize(r);
  }
  q = center_mod(q, m);
  r = center_mod(r, m);
}

struct hensel_pair {
  intpoly g, h, s, t; /* f = g*h, s*g + t*h = 1 (mod m) */
};

/* One quadratic Hensel step: from validity mod m to validity mod m^2
 * (von zur Gathen & Gerhard, Algorithm 15.10; g, h monic). */
inline void hensel_step(const intpoly &f, hensel_pair &p, const bigint &m) {
  bigint m2 = m * m;
  intpoly e = center_mod(poly_sub(f, poly_mul(p.g, p.h)), m2);
  intpoly q, r;
  divmod_monic_mod(mulmod(p.s, e, m2), p.h, m2, q, r);
  intpoly g2 = center_mod(
      poly_add(p.g, poly_add(mulmod(p.t, e, m2), mulmod(q, p.g, m2))), m2);
  intpoly h2 = center_mod(poly_add(p.h, r), m2);
  intpoly b = center_mod(
      poly_sub(poly_add(poly_mul(p.s, g2), poly_mul(p.t, h2)), intpoly{1}), m2);
  intpoly c, d;
  divmod_monic_mod(mulmod(p.s, b, m2), h2, m2, c, d);
  intpoly s2 = center_mod(poly_sub(p.s, d), m2);
  intpoly t2 = center_mod(
      poly_sub(p.t, poly_add(mulmod(p.t, b, m2), mulmod(c, g2, m2))), m2);
  p = {g2, h2, s2, t2};
}

/* Lift the factorization f = prod(factors) from mod p to mod target
 * (target a power of p) along a balanced factor tree; f and all factors
 * monic. */
inline std::vector<intpoly> hensel_lift_tree(const intpoly &f,
                                             std::vector<intpoly> factors,
                                             const bigint &p,
                                             const bigint &target) {
  if (factors.size() == 1)
    return {f};
  size_t half = factors.size() / 2;
  intpoly g{1}, h{1};
  for (size_t i = 0; i < half; i++)
    g = center_mod(poly_mul(g, factors[i]), p);
  for (size_t i = half; i < factors.size(); i++)
    h = center_mod(poly_mul(h, factors[i]), p);
  /* Bezout s*g + t*h = 1 mod p via extended Euclid over F_p */
  long pl = p.get_si();
  fpoly::fp gp = fpoly::reduce(g, pl), hp = fpoly::reduce(h, pl);
  /* extended gcd over F_p */
  fpoly::fp r0 = gp, r1 = hp, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    /* q = r0 / r1 */
    fpoly::fp q;
    {
      fpoly::fp rr = r0;
      q.assign(rr.size() >= r1.size() ? rr.size() - r1.size() + 1 : 1, 0);
      int64_t inv = fpoly::inv_mod(r1.back(), pl);
      while (rr.size() >= r1.size() && !rr.empty()) {
        int64_t fm = rr.back() * inv % pl;
        size_t shift = rr.size() - r1.size();
        q[shift] = fm;
        for (size_t i = 0; i < r1.size(); i++)
          rr[i + shift] = ((rr[i + shift] - fm * r1[i]) % pl + pl) % pl;
        fpoly::norm(rr);
      }
      fpoly::norm(q);
      r0 = r1;
      r1 = rr;
    }
    auto step = [&](fpoly::fp &a0, fpoly::fp &a1) {
      fpoly::fp na = a0;
      fpoly::fp qb = fpoly::mul(q, a1, pl);
      /* na = a0 - q*a1 */
      na.resize(std::max(na.size(), qb.size()), 0);
      for (size_t i = 0; i < qb.size(); i++)
        na[i] = ((na[i] - qb[i]) % pl + pl) % pl;
      fpoly::norm(na);
      a0 = a1;
      a1 = na;
    };
    step(s0, s1);
    step(t0, t1);
  }
  /* r0 = gcd = constant (g,h coprime mod p); scale to 1 */
  assert((int)r0.size() == 1);
  int64_t c = fpoly::inv_mod(r0[0], pl);
  auto to_int = [&](const fpoly::fp &a) {
    intpoly r(a.size());
    for (size_t i = 0; i < a.size(); i++)
      r[i] = bigint((long)(a[i] * c % pl));
    return center_mod(r, p);
  };
  hensel_pair hp2{center_mod(g, p), center_mod(h, p), to_int(s0), to_int(t0)};

  bigint m = p;
  while (m < target) {
    hensel_step(f, hp2, m);
    m = m * m;
  }
  std::vector<intpoly> left(factors.begin(), factors.begin() + half);
  std::vector<intpoly> right(factors.begin() + half, factors.end());
  std::vector<intpoly> out = hensel_lift_tree(hp2.g, left, p, target);
  std::vector<intpoly> out2 = hensel_lift_tree(hp2.h, right, p, target);
  out.insert(out.end(), out2.begin(), out2.end());
  return out;
}

/* ||f||_2 rounded up, for the Mignotte bound. */
inline bigint l2_norm_ceil(const intpoly &f) {
  bigint s = 0;
  for (const bigint &x : f)
    s += x * x;
  bigint r = isqrt(s);
  if (r * r < s)
    r += 1;
  return r;
}

/* Factor a monic squarefree integer polynomial into monic irreducible
 * integer polynomials. */
inline std::vector<intpoly> factor_monic_squarefree(const intpoly &f) {
  int n = poly_degree(f);
  assert(n >= 1 && f.back() == 1);
  if (n == 1)
    return {f};
  /* choose p: f squarefree mod p */
  int64_t p = 0;
  for (int64_t cand = 3;; cand += 2) {
    /* cheap primality by trial division; cands stay tiny */
    bool prime = cand >= 2;
    for (int64_t d = 2; d * d <= cand; d++)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (!prime)
      continue;
    fpoly::fp fp2 = fpoly::reduce(f, cand);
    if ((int)fp2.size() - 1 != n)
      continue; /* cannot happen for monic f, but keep the guard */
    fpoly::fp g = fpoly::gcd(fp2, fpoly::deriv(fp2, cand), cand);
    if ((int)g.size() - 1 == 0) {
      p = cand;
      break;
    }
    throw_if(cand > 20000, "no squarefree prime found (input not squarefree?)");
  }
  std::vector<fpoly::fp> modular = fpoly::berlekamp(
      fpoly::monic(fpoly::reduce(f, p), p), p);
  if (modular.size() == 1)
    return {f};
  std::sort(modular.begin(), modular.end());
  /* Mignotte: coefficients of any monic factor are bounded by
   * 2^n * ||f||_2; lift beyond twice that. */
  bigint bound = (bigint(1) << (unsigned)(n + 1)) * l2_norm_ceil(f);
  bigint target = p;
  while (target <= 2 * bound)
    target = target * target;
  std::vector<intpoly> mf(modular.size());
  for (size_t i = 0; i < modular.size(); i++) {
    mf[i].resize(modular[i].size());
    for (size_t j = 0; j < modular[i].size(); j++)
      mf[i][j] = bigint((long)modular[i][j]);
    mf[i] = center_mod(mf[i], bigint(p));
  }
  std::vector<intpoly> lifted = hensel_lift_tree(f, mf, bigint(p), target);

  /* subset recombination */
  std::vector<intpoly> out;
  intpoly remaining = f;
  std::vector<int> live(lifted.size());
  std::iota(live.begin(), live.end(), 0);
  size_t take = 1;
  while (2 * take <= live.size()) {
    bool found = false;
    std::vector<int> idx(take);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      intpoly prod{1};
      for (int i : idx)
        prod = center_mod(poly_mul(prod, lifted[live[i]]), target);
      if (poly_divides(prod, remaining)) {
        out.push_back(prod);
        remaining = poly_divexact(remaining, prod);
        std::vector<int> nl;
        for (size_t i2 = 0; i2 < live.size(); i2++)
          if (std::find(idx.begin(), idx.end(), (int)i2) == idx.end())
            nl.push_back(live[i2]);
        live = nl;
        found = true;
        break;
      }
      /* next combination */
      int i = (int)take - 1;
      while (i >= 0 && idx[i] == (int)live.size() - (int)take + i)
        i--;
      if (i < 0)
        break;
      idx[i]++;
      for (int j = i + 1; j < (int)take; j++)
        idx[j] = idx[j - 1] + 1;
    }
    if (!found)
      take++;
  }
  if (poly_degree(remaining) >= 1)
    out.push_back(remaining);
  std::sort(out.begin(), out.end());
  return out;
}

} /* namespace detail */

/* Full factorization over Z.  Returns the integer content (with the sign
 * of the leading coefficient) and the monic-made-primitive irreducible
 * factors with multiplicities, sorted.  For non-monic input the factors
 * are primitive with positive leading coefficient. */
struct poly_factorization {
  bigint content = 1; /* signed: input = content * prod factor^mult */
  std::vector<std::pair<intpoly, int>> factors;
};

inline poly_factorization poly_factor(const intpoly &f_in) {
  intpoly f = f_in;
  poly_normalize(f);
  throw_if(f.empty(), "factoring the zero polynomial");
  poly_factorization out;
  bigint c = poly_content(f);
  if (sgn(f.back()) < 0)
    c = -c;
  out.content = c;
  for (bigint &x : f)
    x = divexact(x, c);
  if (poly_degree(f) == 0)
    return out;

  /* squarefree decomposition (Yun) */
  std::vector<std::pair<intpoly, int>> sqf; /* (squarefree primitive, mult) */
  {
    intpoly a = f;
    intpoly g = poly_primitive_part(
        poly_clear_denominators(poly_gcd(to_ratpoly(a), to_ratpoly(poly_derivative(a)))));
    if (poly_degree(g) == 0)
      sqf.push_back({a, 1});
    else {
      int mult = 1;
      intpoly c1 = poly_divexact(a, g);
      intpoly d = poly_sub(poly_divexact(poly_derivative(a), g), poly_derivative(c1));
      while (poly_degree(c1) > 0) {
        intpoly p2 = poly_primitive_part(
            poly_clear_denominators(poly_gcd(to_ratpoly(c1), to_ratpoly(d))));
        if (poly_degree(p2) > 0)
          sqf.push_back({p2, mult});
        intpoly c2 = poly_divexact(c1, p2);
        d = poly_sub(poly_divexact(d, p2), poly_derivative(c2));
        c1 = c2;
        mult++;
      }
    }
  }

  for (auto &[sq, mult] : sqf) {
    /* monicize: F(x) = lc^(n-1) * sq(x / lc) is monic integer */
    bigint lc = sq.back();
    std::vector<intpoly> irr;
    if (lc == 1) {
      irr = detail::factor_monic_squarefree(sq);
    } else {
      int n = poly_degree(sq);
      intpoly F(n + 1);
      /* y = lc*x turns sq into the monic lc^(n-1) * sq(y/lc) */
      for (int i = 0; i < n; i++)
        F[i] = sq[i] * pow(lc, static_cast<unsigned long>(n - 1 - i));
      F[n] = 1;
      std::vector<intpoly> firr = detail::factor_monic_squarefree(F);
      for (intpoly g : firr) {
        /* map back: primitive part of g(lc * x) */
        for (size_t i = 0; i < g.size(); i++)
          g[i] *= pow(lc, static_cast<unsigned long>(i));
        irr.push_back(poly_primitive_part(g));
      }
    }
    for (const intpoly &g : irr)
      out.factors.push_back({g, mult});
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

} /* namespace ringforms */

#endif /* RINGFORMS_POLY_FACTOR_HPP_ */
