#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thh {

using i64 = std::int64_t;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

bool is_prime(i64 n);

/* The prime field F_p. Scalars are machine integers kept in [0, p). */
class PrimeField {
  public:
    explicit PrimeField(i64 p);

    i64 p() const { return p_; }
    i64 reduce(i64 a) const
    {
        i64 r = a % p_;
        return r < 0 ? r + p_ : r;
    }
    i64 add(i64 a, i64 b) const { return (a + b) % p_; }
    i64 sub(i64 a, i64 b) const { return reduce(a - b); }
    i64 mul(i64 a, i64 b) const { return (a * b) % p_; }
    i64 neg(i64 a) const { return reduce(-a); }
    i64 pow(i64 a, i64 e) const;
    i64 inv(i64 a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  private:
    i64 p_;
};

/* C(n, k) mod p via base-p digit products. Zero when k > n. */
i64 lucas_binomial(i64 n, i64 k, const PrimeField& field);

using Vec = std::vector<i64>;

Vec add_scaled(const PrimeField& f, Vec a, const Vec& b, i64 c); /* a + c*b */

/* Dense row-major matrix over F_p. */
class FpMatrix {
  public:
    FpMatrix(i64 rows, i64 cols, PrimeField field);
    static FpMatrix from_rows(const std::vector<Vec>& rows, i64 cols, PrimeField field);

    i64 rows() const { return rows_; }
    i64 cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    i64& at(i64 r, i64 c) { return entries_[r * cols_ + c]; }
    i64 at(i64 r, i64 c) const { return entries_[r * cols_ + c]; }

    FpMatrix transpose() const;
    Vec apply(const Vec& v) const;
    FpMatrix multiply(const FpMatrix& rhs) const;
    bool is_zero() const;

  private:
    i64 rows_, cols_;
    PrimeField field_;
    Vec entries_;
};

/* Incrementally maintained reduced row echelon span. Pivot = first nonzero
 * column; rows are kept fully reduced, so residues are canonical. */
class RowSpace {
  public:
    RowSpace(PrimeField field, i64 ncols);

    bool insert(Vec v); /* true iff the span grew */
    void insert_all(const std::vector<Vec>& vs);
    Vec residue(Vec v) const;
    bool contains(const Vec& v) const;
    i64 rank() const { return static_cast<i64>(rows_.size()); }
    i64 ncols() const { return ncols_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<i64>& pivots() const { return pivots_; }

  private:
    PrimeField field_;
    i64 ncols_;
    std::vector<Vec> rows_;
    std::vector<i64> pivots_; /* ascending */
};

struct RankKernel {
    i64 rank = 0;
    std::vector<Vec> kernel; /* basis, m.apply(v) == 0 for each v */
};

/* Rank and a kernel basis via reduced row echelon form, first-pivot
 * tie-break. Output is deterministic. */
RankKernel rank_and_kernel(const FpMatrix& m);

/* Vectors extending a basis of span(sub) to the full ambient space,
 * chosen greedily from the standard basis. */
std::vector<Vec> image_complement(const std::vector<Vec>& sub, i64 ambient_dim,
                                  const PrimeField& field);

/* Coefficients c with target = sum c_i * span[i], if target lies in the span. */
std::optional<Vec> express_in_span(const std::vector<Vec>& span, const Vec& target,
                                   const PrimeField& field);

} // namespace thh
