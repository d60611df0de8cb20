#include "thh/presets.hpp"

#include <doctest.h>

using namespace thh;

namespace {

Presentation ex_poly(i64 p, int dx, int dy)
{
    return Presentation(PrimeField(p), {{"x", dx, 0, GenKind::Exterior, 0},
                                        {"y", dy, 0, GenKind::Polynomial, 0}});
}

/* commutativity and associativity sweep over all monomial pairs/triples */
void algebra_sweep(const Presentation& pres, int D)
{
    const PrimeField& f = pres.field();
    Basis basis(pres, D);
    std::vector<std::pair<int, Monomial>> monos;
    for (const auto& [b, v] : basis.slots())
        for (const auto& m : v)
            monos.push_back({b.total(), m});
    for (const auto& [da, ma] : monos)
        for (const auto& [db, mb] : monos) {
            if (da + db > D)
                continue;
            Element a, b;
            a.add_term(f, ma, 1);
            b.add_term(f, mb, 1);
            Element ab = basis.mul(a, b);
            Element ba = basis.mul(b, a);
            i64 sign = (da % 2 != 0 && db % 2 != 0) ? f.neg(1) : 1;
            CHECK(ab == ba.scaled(f, sign));
            for (const auto& [dc, mc] : monos) {
                if (da + db + dc > D)
                    continue;
                Element c;
                c.add_term(f, mc, 1);
                CHECK(basis.mul(ab, c) == basis.mul(a, basis.mul(b, c)));
            }
        }
}

} // namespace

TEST_CASE("basis of E(x) ⊗ P(y) with the case-(1) degrees")
{
    PoincareSeries s = poincare(ex_poly(5, 7, 8), 16);
    for (int d = 0; d <= 16; ++d) {
        i64 want = (d == 0 || d == 7 || d == 8 || d == 15 || d == 16) ? 1 : 0;
        CHECK(s.at(d) == want);
    }
}

TEST_CASE("divided power basis Gamma(b), |b| = 40")
{
    Presentation pres(PrimeField(5), {{"b", 40, 0, GenKind::DividedPower, 0}});
    PoincareSeries s = poincare(pres, 85);
    for (int d = 0; d <= 85; ++d)
        CHECK(s.at(d) == ((d == 0 || d == 40 || d == 80) ? 1 : 0));
}

TEST_CASE("the quotient basis of the case-(1) V(1)THH algebra")
{
    Presentation om = omega_infinity(5);
    Basis b60(om, 60);
    PoincareSeries s = b60.poincare();
    /* 1, x, e, c in degrees 0, 7, 41, 56; d at 90 excluded by the bound */
    for (int d = 0; d <= 60; ++d)
        CHECK(s.at(d) == ((d == 0 || d == 7 || d == 41 || d == 56) ? 1 : 0));
    /* the full six-element spanning set 1, x, e, c, d, xd */
    Basis b100(om, 100);
    PoincareSeries s100 = b100.poincare();
    for (int d = 0; d <= 100; ++d) {
        i64 want = (d == 0 || d == 7 || d == 41 || d == 56 || d == 90 || d == 97) ? 1 : 0;
        CHECK(s100.at(d) == want);
    }
}

TEST_CASE("divided-power products use Lucas coefficients")
{
    Presentation pres(PrimeField(5), {{"sx", 8, 0, GenKind::DividedPower, 0}});
    Basis basis(pres, 100);
    Element g1 = pres.gen_elt(0, 1), g4 = pres.gen_elt(0, 4);
    CHECK(basis.mul(g1, g4).is_zero()); /* C(5,4) = 5 = 0 */
    Element g2 = pres.gen_elt(0, 2);
    Element prod = basis.mul(g1, g2); /* C(3,1) = 3 */
    REQUIRE(prod.size() == 1);
    CHECK(prod.terms().begin()->second == 3);
    CHECK(prod.terms().begin()->first == pres.gen_mono(0, 3));
}

TEST_CASE("exterior square vanishes")
{
    Presentation pres(PrimeField(5), {{"x", 7, 0, GenKind::Exterior, 0}});
    Basis basis(pres, 20);
    Element x = pres.gen_elt(0, 1);
    CHECK(basis.mul(x, x).is_zero());
}

TEST_CASE("associativity including the (x·a)·lambda2 triple")
{
    CaseParams c1 = classify(2, 5);
    Presentation pres = brun_sset3_e2_case1(c1);
    Basis basis(pres, 130);
    Element x = pres.gen_elt(pres.gen_index("x"), 1);
    Element a = pres.gen_elt(pres.gen_index("a"), 1);
    Element l2 = pres.gen_elt(pres.gen_index("lambda2"), 1);
    CHECK(basis.mul(basis.mul(x, a), l2) == basis.mul(x, basis.mul(a, l2)));
    CHECK(!basis.mul(basis.mul(x, a), l2).is_zero());
}

TEST_CASE("associativity and graded commutativity sweeps")
{
    algebra_sweep(omega_infinity(5), 60);
    CaseParams c2 = classify(7, 5);
    algebra_sweep(bokstedt_e2_case2(c2, 60), 60);
}

TEST_CASE("poincare of E(lambda1) ⊗ P(mu1)")
{
    PoincareSeries s = poincare(hz_thh_hfp(5), 20);
    for (int d = 0; d <= 20; ++d)
        CHECK(s.at(d) == ((d == 0 || d == 9 || d == 10 || d == 19 || d == 20) ? 1 : 0));
}

TEST_CASE("poincare of the empty presentation")
{
    PoincareSeries s = poincare(Presentation(PrimeField(5), {}), 5);
    CHECK(s.dims == std::vector<i64>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("poincare of P_4(u) ⊗ Gamma(sx)")
{
    CaseParams c4 = classify(4, 5); /* r = 2 is wrong here; build by hand for r = 4 */
    (void)c4;
    Presentation pres(PrimeField(5), {{"u", 2, 0, GenKind::Truncated, 4},
                                      {"sx", 8, 0, GenKind::DividedPower, 0}});
    PoincareSeries s = poincare(pres, 10);
    for (int d = 0; d <= 10; ++d)
        CHECK(s.at(d) == (d % 2 == 0 ? 1 : 0));
}

TEST_CASE("generating-function oracle agrees on relation-free presentations")
{
    CaseParams c1 = classify(2, 5), c2 = classify(7, 5);
    for (const Presentation& pres :
         {v0_presentation(c1), v1_presentation(classify(49, 5)), hz_thh_hfp(5),
          thh_k_hfp(c1), thh_k_hfp(c2), brun_sset2_e2(c1), pr_u_gamma(c1)}) {
        PoincareSeries a = poincare(pres, 80);
        PoincareSeries b = poincare_product_oracle(pres, 80);
        CHECK(a == b);
    }
}

TEST_CASE("gamma_n(x)^p = 0 at odd p")
{
    Presentation pres(PrimeField(5), {{"x", 2, 0, GenKind::DividedPower, 0}});
    Basis basis(pres, 2 * 20 * 5 + 2);
    for (int n = 1; n <= 20; ++n) {
        Element g = pres.gen_elt(0, n);
        Element acc = pres.unit_elt();
        for (int i = 0; i < 5; ++i)
            acc = basis.mul(acc, g);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("presentation guards")
{
    PrimeField f5(5);
    /* odd-degree generator must be exterior at odd p */
    CHECK_THROWS_AS(Presentation(f5, {{"x", 7, 0, GenKind::Polynomial, 0}}), Error);
    CHECK_THROWS_AS(Presentation(f5, {{"x", 8, 0, GenKind::Exterior, 0}}), Error);
    CHECK_THROWS_AS(Presentation(f5, {{"x", 8, 0, GenKind::Truncated, 1}}), Error);
    CHECK_THROWS_AS(Presentation(f5, {{"x", 8, 0, GenKind::Polynomial, 0},
                                      {"x", 10, 0, GenKind::Polynomial, 0}}),
                    Error);
    /* bigraded parity is judged on total degree */
    CHECK_NOTHROW(Presentation(f5, {{"s", 7, 1, GenKind::DividedPower, 0}}));
    /* inhomogeneous relation */
    Presentation ok(f5, {{"a", 8, 0, GenKind::Polynomial, 0}});
    Element bad;
    bad.add_term(f5, ok.gen_mono(0, 1), 1);
    bad.add_term(f5, ok.unit(), 1);
    CHECK_THROWS_AS(Presentation(f5, {{"a", 8, 0, GenKind::Polynomial, 0}}, {bad}), Error);
    CHECK_THROWS_AS(Basis(ok, -1), Error);
}
