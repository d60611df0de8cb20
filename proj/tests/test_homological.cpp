#include "thh/presets.hpp"
#include "thh/scenarios.hpp"

#include <doctest.h>

using namespace thh;

TEST_CASE("hochschild of the trivial algebra is the coefficients")
{
    PrimeField f5(5);
    Presentation a = trivial_algebra(f5);
    Presentation q(f5, {{"u", 2, 0, GenKind::Polynomial, 0}});
    AlgebraHom h;
    h.src = &a;
    h.dst = &q;
    ChainComplex cx = hochschild_complex(a, q, h, 10);
    auto dims = cx.homology_dims();
    for (const auto& [st, d] : dims) {
        CHECK(st.first == 0);
        CHECK(d == 1); /* one class per even degree 0..10 from P(u) */
    }
    CHECK(dims.size() == 6);
}

TEST_CASE("hochschild homology of E(x), |x| = 1, is one line of divided powers")
{
    PrimeField f5(5);
    Presentation a(f5, {{"x", 1, 0, GenKind::Exterior, 0}});
    Presentation q = trivial_algebra(f5);
    ChainComplex cx = hochschild_complex(a, q, augmentation_hom(a, q), 6);
    auto dims = cx.homology_dims();
    /* gamma_n(sx) in bidegree (n, n): dims 1 in every internal degree 0..6 */
    for (int n = 0; n <= 6; ++n) {
        auto it = dims.find({n, n});
        REQUIRE(it != dims.end());
        CHECK(it->second == 1);
    }
    i64 total = 0;
    for (const auto& [st, d] : dims)
        total += d;
    CHECK(total == 7);
    CHECK(cx.euler_consistent());
}

TEST_CASE("hochschild over the case-(1) homology vanishes in degrees 1..10")
{
    CaseParams params = classify(2, 5);
    Presentation a = homology_of_K_presentation(params, 10);
    Presentation q = trivial_algebra(a.field());
    ChainComplex cx = hochschild_complex(a, q, augmentation_hom(a, q), 10);
    auto totals = cx.homology_total_dims();
    CHECK(totals.at(0) == 1);
    for (int d = 1; d <= 10; ++d)
        CHECK(totals.count(d) == 0);
}

TEST_CASE("tor of a polynomial line is an exterior line and vice versa")
{
    PrimeField f5(5);
    Presentation py(f5, {{"y", 8, 0, GenKind::Polynomial, 0}});
    BigradedDims tor = tor_via_bar(py, 40);
    for (const auto& [st, d] : tor.by_bidegree) {
        if (st == std::make_pair(0, 0) || st == std::make_pair(1, 8))
            CHECK(d == 1);
        else
            CHECK(d == 0);
    }
    CHECK(tor.at(1, 8) == 1);
    CHECK(tor.at(2, 16) == 0);

    Presentation ex(f5, {{"x", 7, 0, GenKind::Exterior, 0}});
    BigradedDims torx = tor_via_bar(ex, 40);
    for (int n = 0; n * 7 <= 40; ++n)
        CHECK(torx.at(n, 7 * n) == 1);
    CHECK(torx.at(1, 8) == 0);
    CHECK(torx.at(2, 21) == 0);
}

TEST_CASE("tor over the case-(4) algebra matches the published table")
{
    CaseParams params = classify(4, 5);
    BigradedDims tor = tor_via_bar(*case4_homology_algebra(params), 10);
    auto totals = tor.totals();
    CHECK(tor.total_at(7) == 0);
    CHECK(tor.total_at(8) == 1);
    CHECK(tor.total_at(9) == 2);
    CHECK(tor.total_at(10) == 1);
    (void)totals;
}

TEST_CASE("minimal resolution of the ground field is one stage")
{
    FreeResolution res = minimal_resolution(trivial_algebra(PrimeField(5)), 10);
    CHECK(res.stages() == 1);
    CHECK(res.stage_gens(0).size() == 1);
}

TEST_CASE("minimal resolution agrees with the bar complex")
{
    PrimeField f5(5);
    std::vector<Presentation> algebras;
    algebras.push_back(Presentation(f5, {{"x", 7, 0, GenKind::Exterior, 0},
                                         {"y", 8, 0, GenKind::Polynomial, 0}}));
    algebras.push_back(Presentation(f5, {{"y", 8, 0, GenKind::Truncated, 3}}));
    algebras.push_back(*case4_homology_algebra(classify(4, 5)));
    for (const auto& a : algebras) {
        const int D = 40;
        FreeResolution res = minimal_resolution(a, D);
        BigradedDims tor = tor_via_bar(a, D);
        auto gens = res.generator_dims();
        for (const auto& [st, d] : tor.by_bidegree) {
            if (st.second > D)
                continue;
            i64 g = gens.count(st) ? gens.at(st) : 0;
            CHECK(g == d);
        }
        for (const auto& [st, g] : gens) {
            i64 d = tor.at(st.first, st.second);
            if (st.second <= D && st.first <= D / 7)
                CHECK(g == d);
        }
    }
}

TEST_CASE("minimal resolution stages of E(x) ⊗ P(y)")
{
    PrimeField f5(5);
    Presentation a(f5, {{"x", 7, 0, GenKind::Exterior, 0},
                        {"y", 8, 0, GenKind::Polynomial, 0}});
    FreeResolution res = minimal_resolution(a, 40);
    REQUIRE(res.stages() >= 3);
    /* stage 1 in degrees |x|, |y|; stage 2 in 2|x| and |x| + |y| */
    std::vector<int> s1, s2;
    for (const auto& g : res.stage_gens(1))
        s1.push_back(g.degree);
    for (const auto& g : res.stage_gens(2))
        s2.push_back(g.degree);
    CHECK(s1 == std::vector<int>{7, 8});
    CHECK(s2 == std::vector<int>{14, 15});
}

TEST_CASE("ahl3 resolution matches its stated data")
{
    CaseParams params = classify(4, 5);
    FreeResolution res = ahl3_resolution(params, 12);
    std::vector<int> s2;
    for (const auto& g : res.stage_gens(2))
        s2.push_back(g.degree);
    CHECK(s2 == std::vector<int>{6, 7, 8, 7, 7});
    CHECK_THROWS_AS(ahl3_resolution(classify(2, 5), 12), Error);
    CHECK_THROWS_AS(ahl3_resolution(classify(49, 5), 12), Error);
}

TEST_CASE("dga with zero differential returns the input algebra")
{
    CaseParams params = classify(2, 5);
    Presentation pres = brun_sset3_e2_case1(params);
    DifferentialSpec zero;
    zero.page = 2;
    DgaHomology h = dga_homology(pres, zero, 60);
    CHECK(h.page.poincare(60) == poincare(pres, 60));
}

TEST_CASE("case-(1) dga homology has the omega-infinity poincare series")
{
    CaseParams params = classify(2, 5);
    Presentation pres = brun_sset3_e2_case1(params);
    DgaHomology h = dga_homology(pres, sset3_case1_d(pres, params), 101);
    CHECK(compare_series(h.page.poincare(100), poincare(v1_thh_case1(5), 100), 100, "").match);
}

TEST_CASE("divided-power Leibniz rule d(gamma_n(y)) = z gamma_{n-1}(y)")
{
    PrimeField f5(5);
    /* page-style: z = d(y) with shift (-2, 1) */
    Presentation pres(f5, {{"y", 2, 2, GenKind::DividedPower, 0},
                           {"z", 3, 0, GenKind::Exterior, 0}});
    Basis basis(pres, 40);
    DifferentialSpec spec;
    spec.page = 2;
    spec.assigns.push_back({pres.gen_index("y"), pres.gen_elt(pres.gen_index("z"), 1), 1});
    Derivation d(basis, spec);
    for (int n = 1; n <= 6; ++n) {
        Element got = d.apply(pres.gen_mono(pres.gen_index("y"), n));
        Element want = pres.mul_free(pres.gen_elt(pres.gen_index("z"), 1),
                                     pres.gen_elt(pres.gen_index("y"), n - 1));
        CHECK(got == want);
    }
    d.check_square_zero(shift_for(Convention::Brun, 2));
    /* Leibniz on monomial pairs within the bound */
    std::vector<Monomial> monos;
    for (const auto& [b, v] : basis.slots())
        for (const auto& m : v)
            monos.push_back(m);
    for (const auto& ma : monos)
        for (const auto& mb : monos) {
            if (pres.total_degree(ma) + pres.total_degree(mb) > 40)
                continue;
            Element a, b;
            a.add_term(f5, ma, 1);
            b.add_term(f5, mb, 1);
            Element lhs = d.apply(basis.mul(a, b));
            i64 sign = pres.total_degree(ma) % 2 != 0 ? f5.neg(1) : 1;
            Element rhs = basis.mul(d.apply(a), b).plus(
                f5, basis.mul(a, d.apply(b)).scaled(f5, sign));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("chain complex validation rejects d∘d != 0")
{
    PrimeField f5(5);
    ChainComplex cx(f5, "broken");
    cx.set_basis(0, 0, {"a"});
    cx.set_basis(1, 0, {"b"});
    cx.set_basis(2, 0, {"c"});
    FpMatrix d1(1, 1, f5);
    d1.at(0, 0) = 1;
    FpMatrix d2(1, 1, f5);
    d2.at(0, 0) = 1;
    cx.set_differential(1, 0, d1);
    cx.set_differential(2, 0, d2);
    CHECK_THROWS_AS(cx.validate(), Error);
}

TEST_CASE("euler characteristic per internal degree on scenario complexes")
{
    CaseParams c3 = classify(49, 5);
    Presentation a = homology_of_K_presentation(c3, 12);
    Presentation q = trivial_algebra(a.field());
    ChainComplex cx = hochschild_complex(a, q, augmentation_hom(a, q), 12);
    CHECK(cx.euler_consistent());
    Presentation c4 = *case4_homology_algebra(classify(4, 5));
    ChainComplex cx4 = hochschild_complex(c4, q, augmentation_hom(c4, q), 10);
    CHECK(cx4.euler_consistent());
}
