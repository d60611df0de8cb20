#include "thh/homological.hpp"
#include "thh/ktheory.hpp"

#include <doctest.h>

#include <random>

using namespace thh;

namespace {

/* independent dense elimination oracle: forward elimination with row swaps,
 * no shared code with RowSpace */
i64 oracle_rank(std::vector<Vec> rows, i64 cols, const PrimeField& f)
{
    i64 rank = 0;
    i64 row = 0;
    for (i64 c = 0; c < cols && row < static_cast<i64>(rows.size()); ++c) {
        i64 pivot = -1;
        for (i64 r = row; r < static_cast<i64>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[row], rows[pivot]);
        i64 inv = f.inv(rows[row][c]);
        for (i64 cc = 0; cc < cols; ++cc)
            rows[row][cc] = f.mul(rows[row][cc], inv);
        for (i64 r = 0; r < static_cast<i64>(rows.size()); ++r) {
            if (r == row || rows[r][c] == 0)
                continue;
            i64 factor = rows[r][c];
            for (i64 cc = 0; cc < cols; ++cc)
                rows[r][cc] = f.sub(rows[r][cc], f.mul(factor, rows[row][cc]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<Vec> matrix_rows(const FpMatrix& m)
{
    std::vector<Vec> rows;
    for (i64 r = 0; r < m.rows(); ++r) {
        Vec row(static_cast<size_t>(m.cols()));
        for (i64 c = 0; c < m.cols(); ++c)
            row[c] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

TEST_CASE("lucas binomial basics")
{
    PrimeField f5(5);
    CHECK(lucas_binomial(7, 2, f5) == 1); /* 21 mod 5 */
    CHECK(lucas_binomial(5, 1, f5) == 0);
    CHECK(lucas_binomial(3, 7, f5) == 0); /* k > n */
    for (i64 n = 0; n < 40; ++n)
        CHECK(lucas_binomial(n, 0, f5) == 1);
}

TEST_CASE("lucas binomial against the Pascal-triangle oracle")
{
    for (i64 p : {5, 7}) {
        PrimeField f(p);
        const int N = 201;
        std::vector<Vec> pascal(N, Vec(N, 0));
        for (int n = 0; n < N; ++n) {
            pascal[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                pascal[n][k] = f.add(pascal[n - 1][k - 1], k <= n - 1 ? pascal[n - 1][k] : 0);
        }
        for (int n = 0; n < N; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(lucas_binomial(n, k, f) == pascal[n][k]);
        for (int n = 0; n + 1 < N; ++n)
            for (int k = 0; k + 1 <= 200; ++k)
                CHECK(f.add(lucas_binomial(n, k, f), lucas_binomial(n, k + 1, f)) ==
                      lucas_binomial(n + 1, k + 1, f));
    }
}

TEST_CASE("rank and kernel on degenerate shapes")
{
    PrimeField f5(5);
    FpMatrix zero(3, 3, f5);
    auto rk = rank_and_kernel(zero);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 3);
    FpMatrix id(4, 4, f5);
    for (i64 i = 0; i < 4; ++i)
        id.at(i, i) = 1;
    rk = rank_and_kernel(id);
    CHECK(rk.rank == 4);
    CHECK(rk.kernel.empty());
}

TEST_CASE("rank/kernel of the case-(4) resolution differentials vs the elimination oracle")
{
    CaseParams params = classify(4, 5);
    FreeResolution res = ahl3_resolution(params, 12);
    for (int s = 1; s <= 4; ++s)
        for (int t = 0; t <= 10; ++t) {
            FpMatrix m = res.matrix(s, t);
            if (m.cols() == 0)
                continue;
            auto rk = rank_and_kernel(m);
            CHECK(rk.rank == oracle_rank(matrix_rows(m), m.cols(), m.field()));
            CHECK(rk.rank + static_cast<i64>(rk.kernel.size()) == m.cols());
            for (const auto& v : rk.kernel) {
                Vec img = m.apply(v);
                for (i64 e : img)
                    CHECK(e == 0);
            }
        }
    CHECK(res.exact_through(10));
}

TEST_CASE("random matrices: rank equals transpose rank, kernel annihilated")
{
    PrimeField f5(5);
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 30; ++trial) {
        i64 rows = 1 + static_cast<i64>(rng() % 50);
        i64 cols = 1 + static_cast<i64>(rng() % 50);
        FpMatrix m(rows, cols, f5);
        for (i64 r = 0; r < rows; ++r)
            for (i64 c = 0; c < cols; ++c)
                m.at(r, c) = static_cast<i64>(rng() % 5);
        auto rk = rank_and_kernel(m);
        auto rkt = rank_and_kernel(m.transpose());
        CHECK(rk.rank == rkt.rank);
        CHECK(rk.rank == oracle_rank(matrix_rows(m), cols, f5));
        for (const auto& v : rk.kernel) {
            Vec img = m.apply(v);
            for (i64 e : img)
                CHECK(e == 0);
        }
    }
}

TEST_CASE("image complement")
{
    PrimeField f5(5);
    auto c = image_complement({}, 2, f5);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == Vec{1, 0});
    CHECK(c[1] == Vec{0, 1});

    std::vector<Vec> full = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(image_complement(full, 3, f5).empty());

    std::vector<Vec> sub = {{1, 1, 0}};
    auto comp = image_complement(sub, 3, f5);
    REQUIRE(comp.size() == 2);
    RowSpace all(f5, 3);
    all.insert(sub[0]);
    for (const auto& v : comp)
        all.insert(v);
    CHECK(all.rank() == 3);
}

TEST_CASE("express_in_span")
{
    PrimeField f5(5);
    std::vector<Vec> span = {{1, 2, 0}, {0, 1, 1}};
    Vec target = add_scaled(f5, Vec{0, 0, 0}, span[0], 2);
    target = add_scaled(f5, std::move(target), span[1], 3);
    auto coeffs = express_in_span(span, target, f5);
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] == 2);
    CHECK((*coeffs)[1] == 3);
    CHECK(!express_in_span(span, Vec{0, 0, 1}, f5).has_value());
}

TEST_CASE("prime field guards")
{
    CHECK_THROWS_AS(PrimeField(4), Error);
    PrimeField f5(5);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), Error);
    CHECK(f5.reduce(-1) == 4);
}
