#include "thh/steenrod.hpp"

#include <doctest.h>

#include <random>

using namespace thh;

TEST_CASE("dual steenrod basis at p = 5, bound 10, against direct enumeration")
{
    auto A = build_dual_steenrod(5, 10);
    /* by hand: monomials tb0^e xb1^a tb1^d with e + 8a + 9d <= 10 */
    std::map<int, i64> expect;
    for (int e = 0; e <= 1; ++e)
        for (int a = 0; a <= 1; ++a)
            for (int d = 0; d <= 1; ++d) {
                int deg = e + 8 * a + 9 * d;
                if (deg <= 10)
                    expect[deg] += 1;
            }
    PoincareSeries s = A->basis().poincare();
    for (int d = 0; d <= 10; ++d)
        CHECK(s.at(d) == (expect.count(d) ? expect.at(d) : 0));
    CHECK(s.at(9) == 2); /* tb0*xb1 and tb1 */
    CHECK(s.at(10) == 1);
}

TEST_CASE("coproduct of xi-bar_1 and of the unit")
{
    auto A = build_dual_steenrod(5, 10);
    const Presentation& Ap = A->pres();
    Monomial one = Ap.unit();
    TensorElement co = A->coproduct(Ap.gen_mono(A->xi(1)));
    TensorElement want;
    want.add_term(Ap.field(), Ap.gen_mono(A->xi(1)), one, 1);
    want.add_term(Ap.field(), one, Ap.gen_mono(A->xi(1)), 1);
    CHECK(co == want);
    TensorElement co1 = A->coproduct(one);
    TensorElement want1;
    want1.add_term(Ap.field(), one, one, 1);
    CHECK(co1 == want1);
}

TEST_CASE("tau-bar coproduct has the twisted summands")
{
    auto A = build_dual_steenrod(5, 50);
    const Presentation& Ap = A->pres();
    Monomial one = Ap.unit();
    /* nu(tb1) = 1 ⊗ tb1 + tb0 ⊗ xb1 + tb1 ⊗ 1 */
    TensorElement co = A->coproduct(Ap.gen_mono(A->tau(1)));
    TensorElement want;
    want.add_term(Ap.field(), one, Ap.gen_mono(A->tau(1)), 1);
    want.add_term(Ap.field(), Ap.gen_mono(A->tau(0)), Ap.gen_mono(A->xi(1)), 1);
    want.add_term(Ap.field(), Ap.gen_mono(A->tau(1)), one, 1);
    CHECK(co == want);
}

TEST_CASE("A_* as a comodule over itself: no positive-degree primitives")
{
    auto A = build_dual_steenrod(5, 18);
    Comodule self = dual_steenrod_self_comodule(A);
    CHECK(self.primitive_dim(0) == 1);
    for (int d = 1; d <= 18; ++d)
        CHECK(self.primitive_dim(d) == 0);
    std::string err;
    CHECK(self.check_counit(18, &err));
    CHECK(self.check_coassoc(18, &err));
    CHECK_THROWS_AS(self.primitives(50), Error); /* truncated below */
}

TEST_CASE("homology of K comodule, case (2): generator shape")
{
    CaseParams params = classify(7, 5);
    Comodule cm = homology_of_K_comodule(params, 0, 50);
    const auto& gens = cm.underlying().generators();
    REQUIRE(gens.size() == 4);
    CHECK(gens[0].name == "x");
    CHECK(gens[0].degree == 7);
    CHECK(gens[1].name == "xi1");
    CHECK(gens[1].degree == 8);
    CHECK(gens[2].name == "xi2");
    CHECK(gens[2].degree == 48);
    CHECK(gens[3].name == "tau2");
    CHECK(gens[3].degree == 49);
    /* y is absent: k = 1 */
    CHECK_THROWS_AS(cm.underlying().gen_index("y"), Error);
}

TEST_CASE("homology of K comodule, case (1): b is primitive in degree 39")
{
    CaseParams params = classify(2, 5);
    for (i64 a = 0; a < 5; ++a) {
        Comodule cm = homology_of_K_comodule(params, a, 48);
        CHECK(cm.primitive_dim(39) == 1);
        std::string err;
        CHECK(cm.check_coassoc(48, &err));
    }
}

TEST_CASE("homology of K comodule, case (3): basis below degree 8 is 1, x, y, xy")
{
    CaseParams params = classify(49, 5);
    Comodule cm = homology_of_K_comodule(params, 1, 20);
    PoincareSeries s = cm.basis().poincare();
    CHECK(s.at(0) == 1);
    CHECK(s.at(3) == 1);
    CHECK(s.at(4) == 1);
    CHECK(s.at(7) == 1);
    for (int d : {1, 2, 5, 6})
        CHECK(s.at(d) == 0);
    /* x and y are primitive for every a */
    for (i64 a = 0; a < 5; ++a) {
        Comodule c = homology_of_K_comodule(params, a, 20);
        const Presentation& M = c.underlying();
        TensorElement nx = c.coaction(M.gen_mono(M.gen_index("x")));
        TensorElement wx;
        wx.add_term(M.field(), c.steenrod().pres().unit(), M.gen_mono(M.gen_index("x")), 1);
        CHECK(nx == wx);
        TensorElement ny = c.coaction(M.gen_mono(M.gen_index("y")));
        TensorElement wy;
        wy.add_term(M.field(), c.steenrod().pres().unit(), M.gen_mono(M.gen_index("y")), 1);
        CHECK(ny == wy);
        std::string err;
        CHECK(c.check_coassoc(20, &err));
    }
    CHECK_THROWS_AS(homology_of_K_comodule(classify(4, 5), 0, 20), Error);
}

TEST_CASE("v1-thh comodule: the six degree-49 classes and the primitive sigma-b")
{
    Comodule cm = v1_thh_comodule(5, 1, 49);
    i64 dim49 = 0;
    for (const auto& [b, monos] : cm.basis().slots())
        if (b.total() == 49)
            dim49 += static_cast<i64>(monos.size());
    CHECK(dim49 == 6);
    /* [sigma b] spans the degree-40 primitives */
    CHECK(cm.primitive_dim(40) == 1);
    const Presentation& M = cm.underlying();
    TensorElement nsb = cm.coaction(M.gen_mono(M.gen_index("sb")));
    TensorElement want;
    want.add_term(M.field(), cm.steenrod().pres().unit(), M.gen_mono(M.gen_index("sb")), 1);
    CHECK(nsb == want);
    CHECK(cm.primitive_dim(0) == 1);
    CHECK(cm.primitive_dim(49) == 0);
}

TEST_CASE("primitive dimension is invariant under base change of the slice")
{
    Comodule cm = v1_thh_comodule(5, 1, 49);
    const PrimeField f(5);
    const int n = 49;
    /* the primitive space as the kernel of N; conjugating the slice by a
     * random invertible T cannot change the kernel dimension */
    std::vector<Monomial> slice;
    for (const auto& [b, monos] : cm.basis().slots())
        if (b.total() == n)
            slice.insert(slice.end(), monos.begin(), monos.end());
    const i64 k = static_cast<i64>(slice.size());
    REQUIRE(k == 6);
    std::map<TensorElement::Key, int> keyindex;
    std::vector<std::map<TensorElement::Key, i64>> rows;
    for (const auto& m : slice) {
        TensorElement nu = cm.coaction(m);
        std::map<TensorElement::Key, i64> row;
        for (const auto& [key, c] : nu.terms()) {
            if (cm.steenrod().pres().total_degree(key.first) == 0)
                continue;
            row[key] = c;
            if (!keyindex.count(key))
                keyindex.emplace(key, static_cast<int>(keyindex.size()));
        }
        rows.push_back(std::move(row));
    }
    FpMatrix N(static_cast<i64>(keyindex.size()), k, f);
    for (i64 j = 0; j < k; ++j)
        for (const auto& [key, c] : rows[static_cast<size_t>(j)])
            N.at(keyindex.at(key), j) = c;
    i64 dim0 = static_cast<i64>(rank_and_kernel(N).kernel.size());
    std::mt19937 rng(777);
    for (int trial = 0; trial < 5; ++trial) {
        FpMatrix T(k, k, f);
        do {
            for (i64 r = 0; r < k; ++r)
                for (i64 c = 0; c < k; ++c)
                    T.at(r, c) = static_cast<i64>(rng() % 5);
        } while (rank_and_kernel(T).rank != k);
        FpMatrix NT = N.multiply(T);
        CHECK(static_cast<i64>(rank_and_kernel(NT).kernel.size()) == dim0);
    }
}

TEST_CASE("comodule constructor rejects malformed coactions")
{
    auto A = build_dual_steenrod(5, 10);
    PrimeField f5(5);
    auto pres = std::make_shared<Presentation>(
        f5, std::vector<Generator>{{"w", 8, 0, GenKind::Polynomial, 0}});
    /* missing 1 ⊗ w part */
    TensorElement bad;
    bad.add_term(f5, A->pres().gen_mono(A->xi(1)), pres->unit(), 1);
    CHECK_THROWS_AS(Comodule(A, pres, 10, {bad}), Error);
    /* non-primitive divided-power generator */
    auto dpres = std::make_shared<Presentation>(
        f5, std::vector<Generator>{{"g", 8, 0, GenKind::DividedPower, 0}});
    TensorElement co;
    co.add_term(f5, A->pres().unit(), dpres->gen_mono(0), 1);
    co.add_term(f5, A->pres().gen_mono(A->xi(1)), dpres->unit(), 1);
    CHECK_THROWS_AS(Comodule(A, dpres, 10, {co}), Error);
}
