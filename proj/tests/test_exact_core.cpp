#include <catch2/catch_amalgamated.hpp>

#include "ringforms/integers.hpp"
#include "ringforms/matrix.hpp"
#include "ringforms/poly.hpp"
#include "ringforms/poly_factor.hpp"
#include "ringforms/sturm.hpp"

#include <random>

using namespace ringforms;

namespace {

/* Oracle: recompose a factorization and compare with the input. */
bigint recompose(const factorization &f) {
  bigint n = f.sign;
  for (const bigint &p : f.primes)
    n *= p;
  return n;
}

/* Oracle: count real roots of a squarefree polynomial by dense sampling
 * plus sign changes, refined by interval arithmetic-free bisection on a
 * fine grid.  Only used on polynomials whose roots are known to be
 * separated by more than the grid step. */
int sign_change_root_count(const intpoly &p, long lo, long hi, long steps) {
  int count = 0;
  bigrat prev = poly_eval_rat(p, bigrat(lo));
  for (long i = 1; i <= steps; i++) {
    bigrat x = bigrat(lo) + bigrat(hi - lo) * bigrat(i) / bigrat(steps);
    bigrat cur = poly_eval_rat(p, x);
    if (sgn(prev.get_num()) * sgn(cur.get_num()) < 0)
      count++;
    if (sgn(cur.get_num()) != 0)
      prev = cur;
  }
  return count;
}

intpoly random_poly(std::mt19937_64 &rng, int deg, int coeff_bound) {
  std::uniform_int_distribution<long> d(-coeff_bound, coeff_bound);
  intpoly p(deg + 1);
  for (int i = 0; i <= deg; i++)
    p[i] = bigint(d(rng));
  while (p.back() == 0)
    p.back() = bigint(d(rng));
  return p;
}

} /* namespace */

TEST_CASE("integer factorization of pinned values", "[integers]") {
  factorization f1 = factor_integer(bigint(1));
  CHECK(f1.sign == 1);
  CHECK(f1.primes.empty());

  factorization f2 = factor_integer(bigint(26569));
  CHECK(f2.sign == 1);
  REQUIRE(f2.primes.size() == 2);
  CHECK(f2.primes[0] == 163);
  CHECK(f2.primes[1] == 163);

  factorization f3 = factor_integer(bigint(-2048));
  CHECK(f3.sign == -1);
  REQUIRE(f3.primes.size() == 11);
  for (const bigint &p : f3.primes)
    CHECK(p == 2);

  CHECK_THROWS_WITH(factor_integer(bigint(0)),
                    Catch::Matchers::ContainsSubstring("zero"));
}

TEST_CASE("integer factorization recomposes on random input", "[integers]") {
  std::mt19937_64 rng(20260822);
  std::uniform_int_distribution<long long> d(-1000000000000LL, 1000000000000LL);
  for (int i = 0; i < 10000; i++) {
    long n = (long)d(rng);
    if (n == 0)
      continue;
    factorization f = factor_integer(bigint(n));
    CHECK(recompose(f) == bigint(n));
    for (size_t j = 0; j + 1 < f.primes.size(); j++)
      CHECK(f.primes[j] <= f.primes[j + 1]);
    for (const bigint &p : f.primes)
      CHECK(mpz_probab_prime_p(p.get_mpz_t(), 30) != 0);
  }
}

TEST_CASE("kronecker symbol", "[integers]") {
  CHECK(kronecker_symbol(bigint(1), bigint(7)) == 1);
  CHECK(kronecker_symbol(bigint(5), bigint(3)) == -1);
  CHECK(kronecker_symbol(bigint(-4), bigint(5)) == 1);
  CHECK_THROWS_WITH(kronecker_symbol(bigint(3), bigint(0)),
                    Catch::Matchers::ContainsSubstring("nonzero"));
  /* multiplicativity in the top argument, against an odd prime modulus */
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int i = 0; i < 2000; i++) {
    bigint a(d(rng)), b(d(rng)), n(101);
    CHECK(kronecker_symbol(a * b, n) ==
          kronecker_symbol(a, n) * kronecker_symbol(b, n));
  }
}

TEST_CASE("fundamental discriminants", "[integers]") {
  CHECK(!is_fundamental_discriminant(bigint(1)));
  CHECK(is_fundamental_discriminant(bigint(-4)));
  CHECK(is_fundamental_discriminant(bigint(12)));
  CHECK(!is_fundamental_discriminant(bigint(0)));
  /* oracle: d is a fundamental discriminant iff d = 1 mod 4 squarefree
   * (d != 1), or d = 4m with m = 2,3 mod 4 squarefree -- enumerate the
   * window [-200, 200] directly against the definition. */
  for (long d = -200; d <= 200; d++) {
    bool expect = false;
    bigint bd(d);
    long m4 = ((d % 4) + 4) % 4;
    if (m4 == 1 && d != 1 && is_squarefree(bd))
      expect = true;
    if (m4 == 0) {
      long m = d / 4;
      long mm4 = ((m % 4) + 4) % 4;
      if ((mm4 == 2 || mm4 == 3) && is_squarefree(bigint(m)))
        expect = true;
    }
    CHECK(is_fundamental_discriminant(bd) == expect);
  }
}

TEST_CASE("rational arithmetic canonicalizes", "[integers]") {
  bigrat q(bigint(6), bigint(-4));
  q.canonicalize();
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(q) == "-3/2");
  CHECK(to_string(bigrat(5)) == "5");
  CHECK(round_nearest(bigrat(bigint(7), bigint(2))) == 4);  /* ties up */
  CHECK(round_nearest(bigrat(bigint(-7), bigint(2))) == -3); /* ties up */
  CHECK(round_nearest(bigrat(bigint(10), bigint(3))) == 3);
  CHECK(round_nearest(bigrat(bigint(-10), bigint(3))) == -3);
}

TEST_CASE("integer helpers", "[integers]") {
  CHECK(isqrt(bigint(26569)) == 163);
  CHECK(is_perfect_square(bigint(26569)));
  CHECK(!is_perfect_square(bigint(26570)));
  CHECK(!is_perfect_square(bigint(-4)));
  CHECK(is_squarefree(bigint(163)));
  CHECK(!is_squarefree(bigint(12)));
  CHECK(divexact(bigint(-12), bigint(4)) == -3);
  CHECK(pow(bigint(-2), 11UL) == -2048);
  std::vector<bigint> pd = prime_divisors(bigint(-2048));
  REQUIRE(pd.size() == 1);
  CHECK(pd[0] == 2);
}

TEST_CASE("matrix determinant is multiplicative", "[matrix]") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> d(-9, 9);
  auto rnd3 = [&]() {
    int_matrix<3> m;
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        m(i, j) = bigint(d(rng));
    return m;
  };
  for (int t = 0; t < 500; t++) {
    int_matrix<3> a = rnd3(), b = rnd3();
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(transpose(a)) == det(a));
  }
  auto rnd4 = [&]() {
    int_matrix<4> m;
    for (int i = 0; i < 4; i++)
      for (int j = 0; j < 4; j++)
        m(i, j) = bigint(d(rng));
    return m;
  };
  for (int t = 0; t < 200; t++) {
    int_matrix<4> a = rnd4(), b = rnd4();
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("matrix inverse round-trips", "[matrix]") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> d(-9, 9);
  int done = 0;
  while (done < 200) {
    int_matrix<3> a;
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        a(i, j) = bigint(d(rng));
    if (det(a) == 0)
      continue;
    rat_matrix<3> inv = inverse(to_rational(a));
    CHECK(to_rational(a) * inv == rat_matrix<3>::identity());
    done++;
  }
  int_matrix<2> sing;
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK_THROWS_WITH(inverse(to_rational(sing)),
                    Catch::Matchers::ContainsSubstring("singular"));
}

TEST_CASE("polynomial arithmetic basics", "[poly]") {
  intpoly p{bigint(-1), bigint(0), bigint(1)}; /* x^2 - 1 */
  intpoly q{bigint(1), bigint(1)};             /* x + 1 */
  CHECK(poly_degree(p) == 2);
  CHECK(poly_eval(p, bigint(3)) == 8);
  intpoly prod = poly_mul(p, q);
  CHECK(poly_degree(prod) == 3);
  CHECK(poly_divides(q, p));
  intpoly quo = poly_divexact(p, q);
  CHECK(quo == intpoly{bigint(-1), bigint(1)});
  /* composition and shift */
  intpoly shifted = poly_shift(p, bigint(1)); /* (x+1)^2 - 1 = x^2 + 2x */
  CHECK(shifted == intpoly({bigint(0), bigint(2), bigint(1)}));
  CHECK(poly_content(intpoly{bigint(6), bigint(-4), bigint(10)}) == 2);
}

TEST_CASE("resultant and discriminant against definitional oracles", "[poly]") {
  /* disc(x^2 + bx + c) = b^2 - 4c */
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 300; t++) {
    bigint b(d(rng)), c(d(rng));
    intpoly p{c, b, bigint(1)};
    CHECK(poly_discriminant(p) == b * b - 4 * c);
  }
  /* disc(x^3 + px + q) = -4p^3 - 27q^2 */
  for (int t = 0; t < 300; t++) {
    bigint p(d(rng)), q(d(rng));
    intpoly f{q, p, bigint(0), bigint(1)};
    CHECK(poly_discriminant(f) == -4 * p * p * p - 27 * q * q);
  }
  /* Res(f, g) = lc(f)^deg(g) * prod g(root_i) -- for f = (x-a)(x-b):
   * Res(f, g) = g(a) g(b) */
  for (int t = 0; t < 300; t++) {
    bigint a(d(rng)), b(d(rng));
    intpoly f = poly_mul(intpoly{-a, bigint(1)}, intpoly{-b, bigint(1)});
    intpoly g = random_poly(rng, 3, 10);
    CHECK(poly_resultant(f, g) == poly_eval(g, a) * poly_eval(g, b));
  }
  /* multiplicativity: Res(fg, h) = Res(f, h) Res(g, h) */
  for (int t = 0; t < 100; t++) {
    intpoly f = random_poly(rng, 2, 8);
    intpoly g = random_poly(rng, 3, 8);
    intpoly h = random_poly(rng, 2, 8);
    CHECK(poly_resultant(poly_mul(f, g), h) ==
          poly_resultant(f, h) * poly_resultant(g, h));
  }
  /* disc of a product with shared root vanishes */
  intpoly sq = poly_mul(intpoly{bigint(-1), bigint(1)}, intpoly{bigint(-1), bigint(1)});
  CHECK(poly_discriminant(sq) == 0);
}

TEST_CASE("real root counting", "[sturm]") {
  CHECK(sturm_real_roots(intpoly{bigint(1), bigint(0), bigint(1)}) == 0);
  CHECK(sturm_real_roots(intpoly{bigint(0), bigint(-1), bigint(0), bigint(1)}) == 3);
  CHECK(sturm_real_roots(intpoly{bigint(-2), bigint(0), bigint(0), bigint(0), bigint(1)}) == 2);
  CHECK_THROWS_WITH(sturm_real_roots(intpoly{}),
                    Catch::Matchers::ContainsSubstring("undefined root count"));
  /* multiple roots are counted without multiplicity */
  intpoly dbl = poly_mul(intpoly{bigint(-1), bigint(1)}, intpoly{bigint(-1), bigint(1)});
  CHECK(sturm_real_roots(dbl) == 1);
}

TEST_CASE("real root counting on random products of linears", "[sturm]") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> root(-8, 8);
  for (int t = 0; t < 400; t++) {
    /* product of distinct linear factors and an irreducible quadratic */
    std::vector<long> roots;
    int k = 1 + (int)(rng() % 4);
    for (int i = 0; i < k; i++) {
      long r = root(rng);
      if (std::find(roots.begin(), roots.end(), r) == roots.end())
        roots.push_back(r);
    }
    intpoly p{bigint(1)};
    for (long r : roots)
      p = poly_mul(p, intpoly{bigint(-r), bigint(1)});
    bool add_quad = rng() % 2;
    if (add_quad)
      p = poly_mul(p, intpoly{bigint(1), bigint(0), bigint(1)});
    CHECK(sturm_real_roots(p) == (int)roots.size());
  }
}

TEST_CASE("root isolation brackets every real root", "[sturm]") {
  intpoly p{bigint(-2), bigint(0), bigint(0), bigint(0), bigint(1)}; /* x^4 - 2 */
  std::vector<real_root> roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  /* open intervals are pairwise disjoint but may share an endpoint */
  CHECK(roots[0].hi <= roots[1].lo);
  /* both brackets straddle +-2^(1/4): check sign change */
  for (const real_root &r : roots) {
    bigrat flo = poly_eval_rat(p, r.lo);
    bigrat fhi = poly_eval_rat(p, r.hi);
    CHECK(sgn(flo.get_num()) * sgn(fhi.get_num()) < 0);
  }
  /* cross-oracle: dense sampling on x^3 - x finds the same count */
  intpoly q{bigint(0), bigint(-1), bigint(0), bigint(1)};
  CHECK((int)isolate_real_roots(q).size() ==
        sign_change_root_count(q, -3, 3, 600));
  /* rational roots land in shrinking brackets */
  std::vector<real_root> rr = isolate_real_roots(q);
  REQUIRE(rr.size() == 3);
  refine(rr[1], 40);
  CHECK(rr[1].lo < 0);
  CHECK(rr[1].hi > 0);
  CHECK(rr[1].hi - rr[1].lo < bigrat(bigint(1), pow(bigint(2), 30UL)));
}

TEST_CASE("sign evaluation at algebraic numbers", "[sturm]") {
  /* alpha = 2^(1/4) > 0: signs of g at alpha */
  intpoly p{bigint(-2), bigint(0), bigint(0), bigint(0), bigint(1)};
  std::vector<real_root> roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  const real_root &pos = roots[1];
  CHECK(sign_at(intpoly{bigint(0), bigint(1)}, pos) == 1);     /* x */
  CHECK(sign_at(intpoly{bigint(-2), bigint(1)}, pos) == -1);   /* x - 2 */
  CHECK(sign_at(intpoly{bigint(-1), bigint(1)}, pos) == 1);    /* x - 1 */
  /* g with alpha as exact root */
  CHECK(sign_at(p, pos) == 0);
  CHECK(sign_at(intpoly{bigint(-2), bigint(0), bigint(1)},
                roots[0]) == -1); /* x^2 - 2 at -2^(1/4): 2^(1/2) - 2 < 0 */
}

TEST_CASE("integer polynomial factorization", "[factor]") {
  /* (x^2 + 1)(x - 3) */
  intpoly f = poly_mul(intpoly{bigint(1), bigint(0), bigint(1)},
                       intpoly{bigint(-3), bigint(1)});
  poly_factorization pf = poly_factor(f);
  CHECK(pf.content == 1);
  REQUIRE(pf.factors.size() == 2);
  CHECK(pf.factors[0].first == intpoly({bigint(-3), bigint(1)}));
  CHECK(pf.factors[1].first == intpoly({bigint(1), bigint(0), bigint(1)}));

  /* x^4 - 2 and x^4 + 1 are irreducible over the integers */
  poly_factorization p2 = poly_factor(intpoly{bigint(-2), bigint(0), bigint(0), bigint(0), bigint(1)});
  REQUIRE(p2.factors.size() == 1);
  CHECK(p2.factors[0].second == 1);
  poly_factorization p3 = poly_factor(intpoly{bigint(1), bigint(0), bigint(0), bigint(0), bigint(1)});
  REQUIRE(p3.factors.size() == 1);

  /* content and sign: -6(x - 1)^2 */
  intpoly g = poly_scale(poly_mul(intpoly{bigint(-1), bigint(1)}, intpoly{bigint(-1), bigint(1)}),
                         bigint(-6));
  poly_factorization p4 = poly_factor(g);
  CHECK(p4.content == -6);
  REQUIRE(p4.factors.size() == 1);
  CHECK(p4.factors[0].first == intpoly({bigint(-1), bigint(1)}));
  CHECK(p4.factors[0].second == 2);

  /* non-monic: (2x + 3)(5x^2 + 1) */
  intpoly h = poly_mul(intpoly{bigint(3), bigint(2)}, intpoly{bigint(1), bigint(0), bigint(5)});
  poly_factorization p5 = poly_factor(h);
  CHECK(p5.content == 1);
  REQUIRE(p5.factors.size() == 2);
  bigint rebuilt_lead = p5.content;
  intpoly rebuilt{p5.content};
  for (auto &[fac, mult] : p5.factors)
    for (int i = 0; i < mult; i++)
      rebuilt = poly_mul(rebuilt, fac);
  CHECK(rebuilt == h);
  (void)rebuilt_lead;
}

TEST_CASE("factorization recomposes on random products", "[factor]") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int t = 0; t < 60; t++) {
    /* build a product of 2..4 random monic polynomials of degree 1..4 */
    int k = 2 + (int)(rng() % 3);
    intpoly prod{bigint(1)};
    for (int i = 0; i < k; i++) {
      int deg = 1 + (int)(rng() % 4);
      intpoly f(deg + 1);
      for (int j = 0; j < deg; j++)
        f[j] = bigint(d(rng));
      f[deg] = 1;
      prod = poly_mul(prod, f);
    }
    poly_factorization pf = poly_factor(prod);
    intpoly rebuilt{pf.content};
    for (auto &[fac, mult] : pf.factors) {
      CHECK(poly_degree(fac) >= 1);
      for (int i = 0; i < mult; i++)
        rebuilt = poly_mul(rebuilt, fac);
    }
    CHECK(rebuilt == prod);
  }
  /* a known hard-ish case: swinnerton-dyer style product with many
   * modular factors, (x^2-2)(x^2-3)(x^2-6) */
  intpoly sd = poly_mul(poly_mul(intpoly{bigint(-2), bigint(0), bigint(1)},
                                 intpoly{bigint(-3), bigint(0), bigint(1)}),
                        intpoly{bigint(-6), bigint(0), bigint(1)});
  poly_factorization pf = poly_factor(sd);
  CHECK(pf.factors.size() == 3);
  for (auto &[fac, mult] : pf.factors) {
    CHECK(poly_degree(fac) == 2);
    CHECK(mult == 1);
  }
}

TEST_CASE("gcd of polynomials over the rationals", "[poly]") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 100; t++) {
    intpoly common = random_poly(rng, 2, 5);
    intpoly a = poly_mul(common, random_poly(rng, 2, 5));
    intpoly b = poly_mul(common, random_poly(rng, 3, 5));
    ratpoly g = poly_gcd(to_ratpoly(a), to_ratpoly(b));
    /* gcd is a multiple of common / lc (monic), so common divides
     * clear_denominators(g) up to constants when common is squarefree
     * and coprime to the cofactors; at minimum g must divide both. */
    intpoly gi = poly_primitive_part(poly_clear_denominators(g));
    CHECK(poly_divides(gi, a));
    CHECK(poly_divides(gi, b));
    CHECK((poly_degree(gi) >= poly_degree(common) ||
           poly_degree(common) == 0));
  }
}
