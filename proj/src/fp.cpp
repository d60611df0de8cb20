#include "thh/fp.hpp"

#include <algorithm>

namespace thh {

bool is_prime(i64 n)
{
    if (n < 2)
        return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(i64 p) : p_(p)
{
    if (!is_prime(p))
        throw Error("PrimeField: " + std::to_string(p) + " is not prime");
}

i64 PrimeField::pow(i64 a, i64 e) const
{
    a = reduce(a);
    i64 r = 1;
    while (e > 0) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

i64 PrimeField::inv(i64 a) const
{
    a = reduce(a);
    if (a == 0)
        throw Error("PrimeField::inv of zero");
    return pow(a, p_ - 2);
}

i64 lucas_binomial(i64 n, i64 k, const PrimeField& field)
{
    if (k < 0 || n < 0)
        throw Error("lucas_binomial: negative argument");
    if (k > n)
        return 0;
    const i64 p = field.p();
    i64 result = 1;
    while (n > 0 || k > 0) {
        i64 nd = n % p, kd = k % p;
        if (kd > nd)
            return 0;
        /* C(nd, kd) with nd < p fits in i64 after each modular step */
        i64 c = 1;
        for (i64 i = 1; i <= kd; ++i) {
            c = field.mul(c, field.reduce(nd - kd + i));
            c = field.mul(c, field.inv(i));
        }
        result = field.mul(result, c);
        n /= p;
        k /= p;
    }
    return result;
}

Vec add_scaled(const PrimeField& f, Vec a, const Vec& b, i64 c)
{
    for (size_t i = 0; i < a.size(); ++i)
        a[i] = f.add(a[i], f.mul(c, b[i]));
    return a;
}

FpMatrix::FpMatrix(i64 rows, i64 cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(static_cast<size_t>(rows * cols), 0)
{
}

FpMatrix FpMatrix::from_rows(const std::vector<Vec>& rows, i64 cols, PrimeField field)
{
    FpMatrix m(static_cast<i64>(rows.size()), cols, field);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<i64>(rows[r].size()) != cols)
            throw Error("FpMatrix::from_rows: ragged row");
        for (i64 c = 0; c < cols; ++c)
            m.at(static_cast<i64>(r), c) = field.reduce(rows[r][c]);
    }
    return m;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(cols_, rows_, field_);
    for (i64 r = 0; r < rows_; ++r)
        for (i64 c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Vec FpMatrix::apply(const Vec& v) const
{
    if (static_cast<i64>(v.size()) != cols_)
        throw Error("FpMatrix::apply: size mismatch");
    Vec out(static_cast<size_t>(rows_), 0);
    for (i64 r = 0; r < rows_; ++r) {
        i64 acc = 0;
        for (i64 c = 0; c < cols_; ++c)
            acc = field_.add(acc, field_.mul(at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

FpMatrix FpMatrix::multiply(const FpMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw Error("FpMatrix::multiply: size mismatch");
    FpMatrix out(rows_, rhs.cols_, field_);
    for (i64 r = 0; r < rows_; ++r)
        for (i64 k = 0; k < cols_; ++k) {
            i64 a = at(r, k);
            if (a == 0)
                continue;
            for (i64 c = 0; c < rhs.cols_; ++c)
                out.at(r, c) = field_.add(out.at(r, c), field_.mul(a, rhs.at(k, c)));
        }
    return out;
}

bool FpMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](i64 e) { return e == 0; });
}

RowSpace::RowSpace(PrimeField field, i64 ncols) : field_(field), ncols_(ncols) {}

Vec RowSpace::residue(Vec v) const
{
    for (size_t i = 0; i < rows_.size(); ++i) {
        i64 c = v[pivots_[i]];
        if (c != 0)
            v = add_scaled(field_, std::move(v), rows_[i], field_.neg(c));
    }
    return v;
}

bool RowSpace::insert(Vec v)
{
    if (static_cast<i64>(v.size()) != ncols_)
        throw Error("RowSpace::insert: size mismatch");
    v = residue(std::move(v));
    i64 pivot = -1;
    for (i64 c = 0; c < ncols_; ++c)
        if (v[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot < 0)
        return false;
    i64 inv = field_.inv(v[pivot]);
    for (auto& e : v)
        e = field_.mul(e, inv);
    /* back-substitute into existing rows, keep pivot order ascending */
    for (size_t i = 0; i < rows_.size(); ++i) {
        i64 c = rows_[i][pivot];
        if (c != 0)
            rows_[i] = add_scaled(field_, std::move(rows_[i]), v, field_.neg(c));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

void RowSpace::insert_all(const std::vector<Vec>& vs)
{
    for (const auto& v : vs)
        insert(v);
}

bool RowSpace::contains(const Vec& v) const
{
    Vec r = residue(v);
    return std::all_of(r.begin(), r.end(), [](i64 e) { return e == 0; });
}

RankKernel rank_and_kernel(const FpMatrix& m)
{
    const PrimeField& f = m.field();
    /* row reduce a copy, tracking pivot columns */
    std::vector<Vec> rows;
    rows.reserve(static_cast<size_t>(m.rows()));
    for (i64 r = 0; r < m.rows(); ++r) {
        Vec row(static_cast<size_t>(m.cols()));
        for (i64 c = 0; c < m.cols(); ++c)
            row[c] = m.at(r, c);
        rows.push_back(std::move(row));
    }
    RowSpace space(f, m.cols());
    space.insert_all(rows);

    RankKernel out;
    out.rank = space.rank();
    const auto& pivots = space.pivots();
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    for (i64 p : pivots)
        is_pivot[p] = true;
    for (i64 c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        Vec v(static_cast<size_t>(m.cols()), 0);
        v[c] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(space.rows()[i][c]);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> image_complement(const std::vector<Vec>& sub, i64 ambient_dim,
                                  const PrimeField& field)
{
    RowSpace space(field, ambient_dim);
    for (const auto& v : sub) {
        if (static_cast<i64>(v.size()) != ambient_dim)
            throw Error("image_complement: vector has wrong length");
        space.insert(v);
    }
    std::vector<Vec> complement;
    for (i64 c = 0; c < ambient_dim; ++c) {
        Vec e(static_cast<size_t>(ambient_dim), 0);
        e[c] = 1;
        if (space.insert(e))
            complement.push_back(std::move(e));
    }
    return complement;
}

std::optional<Vec> express_in_span(const std::vector<Vec>& span, const Vec& target,
                                   const PrimeField& field)
{
    if (span.empty()) {
        if (std::all_of(target.begin(), target.end(), [](i64 e) { return e == 0; }))
            return Vec{};
        return std::nullopt;
    }
    const i64 n = static_cast<i64>(span[0].size());
    const i64 k = static_cast<i64>(span.size());
    /* eliminate on rows [v_i | e_i]; the residue of [target | 0] exposes
     * minus the coefficients in its tail */
    RowSpace space(field, n + k);
    for (i64 i = 0; i < k; ++i) {
        Vec row(static_cast<size_t>(n + k), 0);
        std::copy(span[i].begin(), span[i].end(), row.begin());
        row[n + i] = 1;
        space.insert(std::move(row));
    }
    Vec probe(static_cast<size_t>(n + k), 0);
    std::copy(target.begin(), target.end(), probe.begin());
    Vec r = space.residue(std::move(probe));
    for (i64 c = 0; c < n; ++c)
        if (r[c] != 0)
            return std::nullopt;
    Vec coeffs(static_cast<size_t>(k));
    for (i64 i = 0; i < k; ++i)
        coeffs[i] = field.neg(r[n + i]);
    return coeffs;
}

} // namespace thh
