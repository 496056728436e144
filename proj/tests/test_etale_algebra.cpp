#include <catch2/catch_amalgamated.hpp>

#include "ringforms/cubic_classes.hpp"
#include "ringforms/etale.hpp"

#include <random>

using namespace ringforms;

namespace {

/* Shorthand builders for the polynomial literals used throughout. */
intpoly ip(std::initializer_list<long> cs) {
  intpoly p;
  for (long c : cs)
    p.push_back(bigint(c));
  return p;
}

/* Evaluate an integer polynomial at an element of Q[x]/(m). */
ratpoly nf_eval(const intpoly &m, const intpoly &f, const ratpoly &x) {
  ratpoly acc;
  for (size_t i = f.size(); i-- > 0;) {
    acc = nf_mul(m, acc, x);
    ratpoly c{bigrat(f[i])};
    acc = poly_add(acc, c);
    poly_normalize(acc);
  }
  return nf_reduce(m, acc);
}

qvec ev(std::initializer_list<long> cs) {
  qvec v;
  for (long c : cs)
    v.push_back(bigrat(c));
  return v;
}

/* Multiplication table of Z x Z x Z[i] on the basis
 * (1, (1,0,0), (0,1,0), (0,0,i)). */
qalgebra zzgauss() {
  qalgebra a;
  a.n = 4;
  a.table.assign(4, std::vector<qvec>(4, qvec(4, bigrat(0))));
  auto set = [&](int i, int j, std::initializer_list<long> cs) {
    a.table[i][j] = ev(cs);
    a.table[j][i] = a.table[i][j];
  };
  set(0, 0, {1, 0, 0, 0});
  set(0, 1, {0, 1, 0, 0});
  set(0, 2, {0, 0, 1, 0});
  set(0, 3, {0, 0, 0, 1});
  set(1, 1, {0, 1, 0, 0});
  set(2, 2, {0, 0, 1, 0});
  set(1, 2, {0, 0, 0, 0});
  set(1, 3, {0, 0, 0, 0});
  set(2, 3, {0, 0, 0, 0});
  set(3, 3, {-1, 1, 1, 0});
  return a;
}

} /* namespace */

TEST_CASE("rational matrix helpers") {
  qmat a{{bigrat(1), bigrat(2)}, {bigrat(3), bigrat(4)}};
  qmat b{{bigrat(0), bigrat(1)}, {bigrat(1), bigrat(0)}};
  CHECK(qmat_det(a) == bigrat(-2));
  CHECK(qmat_mul(a, b) == qmat{{bigrat(2), bigrat(1)}, {bigrat(4), bigrat(3)}});
  CHECK(qmat_apply(a, qvec{bigrat(1), bigrat(1)}) ==
        qvec{bigrat(3), bigrat(7)});
  CHECK(qmat_mul(a, qmat_inverse(a)) == qmat_identity(2));
  CHECK(qmat_mul(qmat_inverse(a), a) == qmat_identity(2));
  CHECK(qmat_is_integral(a));
  CHECK_FALSE(qmat_is_integral(qmat_inverse(a)));

  qmat sing{{bigrat(1), bigrat(2)}, {bigrat(2), bigrat(4)}};
  CHECK_THROWS_WITH(qmat_inverse(sing), "inverse of singular matrix");
}

TEST_CASE("power basis algebras") {
  qalgebra a = power_basis_algebra(ip({-2, 0, 1}));
  REQUIRE(a.n == 2);
  CHECK(a.table[1][1] == ev({2, 0}));
  CHECK(a.table[0][1] == ev({0, 1}));
  CHECK(alg_well_formed(a));

  /* x * x - 2 = 0 via generic evaluation */
  ratpoly p{bigrat(-2), bigrat(0), bigrat(1)};
  CHECK(alg_is_zero(alg_eval(a, p, ev({0, 1}))));

  CHECK_THROWS_WITH(power_basis_algebra(ip({1, 2})),
                    "power basis needs a monic polynomial");
  CHECK_THROWS_WITH(power_basis_algebra(ip({1})),
                    "power basis needs positive degree");
}

TEST_CASE("minimal polynomials in a quartic power basis") {
  qalgebra a = power_basis_algebra(ip({-2, 0, 0, 0, 1}));
  CHECK(algebra_minpoly(a, ev({0, 1, 0, 0})) ==
        ratpoly{bigrat(-2), bigrat(0), bigrat(0), bigrat(0), bigrat(1)});
  CHECK(algebra_minpoly(a, ev({0, 0, 1, 0})) ==
        ratpoly{bigrat(-2), bigrat(0), bigrat(1)});
  CHECK(algebra_minpoly(a, ev({1, 1, 0, 0})) ==
        ratpoly{bigrat(-1), bigrat(-4), bigrat(6), bigrat(-4), bigrat(1)});
  CHECK(algebra_minpoly(a, qvec{bigrat(5, 2), bigrat(0), bigrat(0),
                                bigrat(0)}) ==
        ratpoly{bigrat(-5, 2), bigrat(1)});
}

TEST_CASE("minimal polynomials annihilate their elements") {
  qalgebra a = power_basis_algebra(ip({-2, 0, -1, 0, 1}));
  std::mt19937_64 rng(271828);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int t = 0; t < 60; t++) {
    qvec x = ev({d(rng), d(rng), d(rng), d(rng)});
    ratpoly p = algebra_minpoly(a, x);
    REQUIRE(!p.empty());
    CHECK(p.back() == bigrat(1));
    CHECK(alg_is_zero(alg_eval(a, p, x)));
  }
}

TEST_CASE("roots of polynomials over a quartic field") {
  intpoly m = ip({-2, 0, 0, 0, 1});

  auto r2 = roots_in_field(ip({-2, 0, 1}), m);
  REQUIRE(r2.size() == 2);
  for (const auto &r : r2)
    CHECK(nf_eval(m, ip({-2, 0, 1}), r).empty());

  CHECK(roots_in_field(ip({-3, 0, 1}), m).empty());

  /* three rational roots, found inside the field */
  auto r3 = roots_in_field(ip({-6, 11, -6, 1}), m);
  REQUIRE(r3.size() == 3);
  for (const auto &r : r3) {
    CHECK(poly_degree(r) <= 0);
    CHECK(nf_eval(m, ip({-6, 11, -6, 1}), r).empty());
  }

  /* the generator itself: x^4 - 2 has two roots +-zeta in the field */
  auto r4 = roots_in_field(m, m);
  CHECK(r4.size() == 2);

  CHECK_THROWS_WITH(roots_in_field(ip({-2, 0, 1}), ip({1, 2})),
                    "field modulus must be monic");
}

TEST_CASE("etale decomposition of a split quartic") {
  qalgebra a = power_basis_algebra(ip({-1, 0, 0, 0, 1}));
  etale_split sp = etale_decompose(a);
  REQUIRE(sp.comps.size() == 3);
  CHECK(sp.comps[0].m == ip({-1, 1}));
  CHECK(sp.comps[1].m == ip({1, 1}));
  CHECK(sp.comps[2].m == ip({1, 0, 1}));
  CHECK(count_real_embeddings(sp) == 2);

  /* determinism: a second run reproduces the split exactly */
  etale_split sp2 = etale_decompose(a);
  CHECK(sp2.zeta == sp.zeta);
  CHECK(sp2.minpoly == sp.minpoly);
  CHECK(sp2.basis == sp.basis);
  REQUIRE(sp2.comps.size() == sp.comps.size());
  for (size_t i = 0; i < sp.comps.size(); i++) {
    CHECK(sp2.comps[i].m == sp.comps[i].m);
    CHECK(sp2.comps[i].pow_basis == sp.comps[i].pow_basis);
  }
}

TEST_CASE("real embedding counts") {
  auto reals = [](std::initializer_list<long> cs) {
    return count_real_embeddings(etale_decompose(power_basis_algebra(ip(cs))));
  };
  CHECK(reals({1, 0, 0, 0, 1}) == 0);       /* x^4 + 1 */
  CHECK(reals({-2, 0, 0, 0, 1}) == 2);      /* x^4 - 2 */
  CHECK(reals({-2, 0, -1, 0, 1}) == 2);     /* (x^2+1)(x^2-2) */
  CHECK(reals({0, 2, -1, -2, 1}) == 4);     /* x(x-1)(x+1)(x-2) */
  CHECK(reals({-1, -2, 1, 1}) == 3);        /* totally real cubic */
  CHECK(reals({-2, 0, 0, 1}) == 1);         /* x^3 - 2 */
}

TEST_CASE("non-etale and non-integral input is rejected") {
  CHECK_THROWS_WITH(etale_decompose(power_basis_algebra(ip({0, 0, 1}))),
                    "algebra is not etale");

  qalgebra h;
  h.n = 2;
  h.table = {{ev({1, 0}), ev({0, 1})},
             {ev({0, 1}), {bigrat(1, 2), bigrat(0)}}};
  REQUIRE(alg_well_formed(h));
  CHECK_THROWS_WITH(etale_decompose(h), "multiplication table is not integral");
}

TEST_CASE("classification labels") {
  auto label = [](std::initializer_list<long> cs) {
    return classify_etale(power_basis_algebra(ip(cs)));
  };
  CHECK(label({1, 0, 0, 0, 1}) == "quartic field (V4)");
  CHECK(label({-2, 0, 0, 0, 1}) == "quartic field (D4)");
  CHECK(label({1, 1, 0, 0, 1}) == "quartic field (S4)");
  CHECK(label({12, 8, 0, 0, 1}) == "quartic field (A4)");
  CHECK(label({1, 1, 1, 1, 1}) == "quartic field (C4)");
  CHECK(label({2, -2, 0, -1, 1}) == "Q + cubic field (non-Galois)");
  CHECK(label({5, 9, -7, -4, 1}) == "Q + cubic field (Galois)");
  CHECK(label({-2, 0, -1, 0, 1}) == "quad + quad");
  CHECK(label({-1, 0, 0, 0, 1}) == "Q^2 + quad");
  CHECK(label({0, 2, -1, -2, 1}) == "Q^4");
  CHECK(label({-1, -2, 1, 1}) == "cubic field (Galois)");
  CHECK(label({-2, 0, 0, 1}) == "cubic field (non-Galois)");
  CHECK(label({0, 1, 0, 1}) == "Q + quad");
  CHECK(label({0, -1, 0, 1}) == "Q^3");
  CHECK(label({-2, 0, 1}) == "quad");
  CHECK(label({0, -1, 1}) == "Q^2");
  CHECK(label({-3, 1}) == "Q");
}

TEST_CASE("classify_algebra reports the factor multiset") {
  etale_type t = classify_algebra(power_basis_algebra(ip({-1, 0, 0, 0, 1})));
  CHECK(t.label == "Q^2 + quad");
  REQUIRE(t.factors.size() == 3);
  CHECK(t.factors[0] == ip({-1, 1}));
  CHECK(t.factors[1] == ip({1, 1}));
  CHECK(t.factors[2] == ip({1, 0, 1}));

  etale_type f = classify_algebra(power_basis_algebra(ip({1, 1, 0, 0, 1})));
  CHECK(f.label == "quartic field (S4)");
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0] == ip({1, 1, 0, 0, 1}));
}

TEST_CASE("automorphism counts of orders") {
  /* Z[zeta_8]: the field has 4 automorphisms and all preserve the order */
  CHECK(ring_automorphisms(power_basis_algebra(ip({1, 0, 0, 0, 1}))).size() ==
        4);
  /* D4 quartic field: only the identity and one more survive */
  CHECK(ring_automorphisms(power_basis_algebra(ip({-2, 0, 0, 0, 1}))).size() ==
        2);
  /* Galois cubic (conductor 7 subfield of Q(zeta_7)) */
  CHECK(ring_automorphisms(power_basis_algebra(ip({-1, -2, 1, 1}))).size() ==
        3);
  CHECK(ring_automorphisms(power_basis_algebra(ip({-2, 0, 0, 1}))).size() == 1);

  /* monogenic order in Q^4: the algebra has S_4 = 24 automorphisms but
   * only 2 stabilize the index-12 sublattice Z[theta] */
  qalgebra q4 = power_basis_algebra(ip({0, 2, -1, -2, 1}));
  CHECK(algebra_isomorphisms(q4, q4).size() == 24);
  CHECK(ring_automorphisms(q4).size() == 2);

  /* determinism */
  CHECK(ring_automorphisms(q4) == ring_automorphisms(q4));
}

TEST_CASE("isomorphic fields with non-isomorphic orders") {
  qalgebra a = power_basis_algebra(ip({-2, 0, 1})); /* Z[sqrt(2)] */
  qalgebra b = power_basis_algebra(ip({-8, 0, 1})); /* Z[2 sqrt(2)] */
  CHECK(algebra_isomorphisms(a, b).size() == 2);
  CHECK(ring_isomorphisms(a, b).empty());
  CHECK(ring_isomorphisms(a, a).size() == 2);
}

TEST_CASE("automorphism group structure") {
  aut_group g = automorphism_group(zzgauss());
  CHECK(g.order == 4);
  bool has_id = false;
  for (const auto &m : g.elements) {
    CHECK(qmat_is_integral(m));
    if (m == qmat_identity(4))
      has_id = true;
  }
  CHECK(has_id);
}

TEST_CASE("cubic rings classified through their algebras") {
  cubic_ring galois = delone_faddeev(binary_cubic{1, 14, 11, -1});
  etale_type tg = classify_algebra(galois);
  CHECK(tg.label == "cubic field (Galois)");
  REQUIRE(tg.factors.size() == 1);
  CHECK(poly_degree(tg.factors[0]) == 3);
  CHECK(automorphism_group(galois).order == 3);

  cubic_ring field23 = delone_faddeev(binary_cubic{1, 0, -1, -1});
  CHECK(classify_algebra(field23).label == "cubic field (non-Galois)");
  CHECK(automorphism_group(field23).order == 1);

  cubic_ring split23 = delone_faddeev(binary_cubic{0, 1, -1, 6});
  CHECK(classify_algebra(split23).label == "Q + quad");
  CHECK(automorphism_group(split23).order == 2);
  /* ring automorphisms match the form stabilizer */
  CHECK(cubic_form_stabilizer(binary_cubic{0, 1, -1, 6}).size() == 2);

  CHECK_THROWS_WITH(classify_algebra(delone_faddeev(binary_cubic{1, 0, 0, 0})),
                    "classification of a degenerate ring");
  CHECK_THROWS_WITH(
      automorphism_group(delone_faddeev(binary_cubic{1, 0, 0, 0})),
      "automorphisms of a degenerate ring");
}

TEST_CASE("low degree factorization") {
  auto fac = factor_low_degree(ip({-1, 0, 0, 0, 1}));
  REQUIRE(fac.size() == 3);
  CHECK(fac[0] == ip({-1, 1}));
  CHECK(fac[1] == ip({1, 1}));
  CHECK(fac[2] == ip({1, 0, 1}));

  CHECK(factor_low_degree(ip({1, 0, 0, 0, 1})) ==
        std::vector<intpoly>{ip({1, 0, 0, 0, 1})});
  CHECK(factor_low_degree(ip({-1, -1, 0, 1})) ==
        std::vector<intpoly>{ip({-1, -1, 0, 1})});

  /* multiplicities are repeated */
  auto sq = factor_low_degree(ip({1, 0, -2, 0, 1}));
  REQUIRE(sq.size() == 4);
  CHECK(sq[0] == ip({-1, 1}));
  CHECK(sq[1] == ip({-1, 1}));
  CHECK(sq[2] == ip({1, 1}));
  CHECK(sq[3] == ip({1, 1}));

  CHECK_THROWS_WITH(factor_low_degree(ip({1, 2})),
                    "factor_low_degree needs a monic polynomial");
  CHECK_THROWS_WITH(factor_low_degree(ip({0, 0, 0, 0, 0, 1})),
                    "factor_low_degree handles degrees 1 through 4");
  CHECK_THROWS_WITH(factor_low_degree(ip({1})),
                    "factor_low_degree handles degrees 1 through 4");
}
