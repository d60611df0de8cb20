#include "thh/scenarios.hpp"

#include <doctest.h>

using namespace thh;

namespace {

/* direct modular-arithmetic oracle for (r, v), exact integers via __int128 */
std::pair<int, int> classify_oracle(i64 q, i64 p)
{
    int r = 1;
    i64 acc = q % p;
    while (acc != 1) {
        acc = (acc * (q % p)) % p;
        ++r;
    }
    unsigned __int128 qr = 1;
    for (int i = 0; i < r; ++i)
        qr *= static_cast<unsigned __int128>(q);
    unsigned __int128 m = qr - 1;
    int v = 0;
    while (m % static_cast<unsigned __int128>(p) == 0) {
        m /= static_cast<unsigned __int128>(p);
        ++v;
    }
    return {r, v};
}

} // namespace

TEST_CASE("case classification of the four reference pairs")
{
    CaseParams c1 = classify(2, 5);
    CHECK(c1.r == 4);
    CHECK(c1.v == 1);
    CHECK(c1.case_id == 1);
    CHECK(c1.k == 1);
    CaseParams c2 = classify(7, 5);
    CHECK(c2.r == 4);
    CHECK(c2.v == 2);
    CHECK(c2.case_id == 2);
    CaseParams c3 = classify(49, 5);
    CHECK(c3.r == 2);
    CHECK(c3.v == 2);
    CHECK(c3.case_id == 3);
    CHECK(c3.k == 2);
    CaseParams c4 = classify(4, 5);
    CHECK(c4.r == 2);
    CHECK(c4.v == 1);
    CHECK(c4.case_id == 4);
    CHECK_THROWS_AS(classify(5, 5), Error);
    CHECK_THROWS_AS(classify(7, 4), Error);
    CHECK_THROWS_AS(classify(6, 5), Error); /* not a prime power */
}

TEST_CASE("classification against the direct oracle, and stability of r under q mod p")
{
    for (i64 p : {5, 7, 11}) {
        for (i64 q : {2, 3, 4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 128}) {
            if (q % p == 0)
                continue;
            CaseParams c = classify(q, p);
            auto [r, v] = classify_oracle(q, p);
            CHECK(c.r == r);
            CHECK(c.v == v);
            /* r only depends on q mod p */
            i64 qm = q % p;
            if (qm > 1) {
                int r2 = 1;
                i64 acc = qm;
                while (acc != 1) {
                    acc = (acc * qm) % p;
                    ++r2;
                }
                CHECK(c.r == r2);
            }
        }
    }
}

TEST_CASE("torsion exponents via lifting the exponent")
{
    /* v_5(7^{4m} - 1) = 2 + v_5(m) */
    CHECK(torsion_exponent(7, 5, 4) == 2);
    CHECK(torsion_exponent(7, 5, 20) == 3);
    CHECK(torsion_exponent(7, 5, 8) == 2);
    CHECK(torsion_exponent(7, 5, 3) == 0);
    CHECK(torsion_exponent(2, 5, 4) == 1);
}

TEST_CASE("v0 of K from the long exact sequence")
{
    PoincareSeries s = v0_of_K(classify(2, 5), 16);
    for (int d = 0; d <= 16; ++d)
        CHECK(s.at(d) == ((d == 0 || d == 7 || d == 8 || d == 15 || d == 16) ? 1 : 0));
    PoincareSeries s3 = v0_of_K(classify(49, 5), 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(s3.at(d) == ((d == 0 || d == 3 || d == 4 || d == 7 || d == 8) ? 1 : 0));
    /* nothing strictly between 0 and 2r-1 */
    for (int d = 1; d <= 6; ++d)
        CHECK(s.at(d) == 0);
}

TEST_CASE("v1 of K from the v-action long exact sequence")
{
    PoincareSeries s1 = v1_of_K(classify(2, 5), 40);
    for (int d = 0; d <= 40; ++d)
        CHECK(s1.at(d) == ((d == 0 || d == 7) ? 1 : 0));
    PoincareSeries s3 = v1_of_K(classify(49, 5), 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(s3.at(d) == ((d == 0 || d == 3 || d == 4 || d == 7) ? 1 : 0));
    PoincareSeries s2 = v1_of_K(classify(7, 5), 20);
    CHECK(s2.at(8) == 0); /* degree 2p-2 in case (2) */
}

TEST_CASE("bockstein torsion table")
{
    auto t2 = bockstein_torsion_table(classify(7, 5), 20);
    REQUIRE(!t2.empty());
    CHECK(t2[0] == std::make_pair(8, i64{2}));
    auto t1 = bockstein_torsion_table(classify(2, 5), 20);
    CHECK(t1[0] == std::make_pair(8, i64{1}));
    CHECK(t1[1].first == 16);
}

TEST_CASE("fg operator check on both reference orders")
{
    for (i64 q : {4, 2}) {
        CaseParams params = classify(q, 5);
        FgReport rep = fg_operator_check(params, 48);
        CHECK(rep.pass);
        CHECK(rep.pairs_checked > 0);
        CHECK(rep.powers_checked > 0);
        CHECK(rep.failures.empty());
    }
    CHECK_THROWS_AS(fg_operator_check(classify(2, 5), 40, 0), Error);
}

TEST_CASE("verify_theorem wiring")
{
    ScenarioReport rep = verify_theorem("veen-dims-case2", classify(7, 5), 0);
    CHECK(rep.pass());
    CHECK_THROWS_AS(verify_theorem("no-such-scenario", classify(2, 5), 0), Error);
    CHECK_THROWS_AS(verify_theorem("sset2-case1", classify(7, 5), 0), Error);
    ScenarioReport prim = verify_theorem("primitives-2p2-1", classify(2, 5), 0);
    CHECK(prim.pass());
}
