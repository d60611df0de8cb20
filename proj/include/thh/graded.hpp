#pragma once

#include "thh/fp.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace thh {

/* Tensor factors of a presentation. A DividedPower generator x carries the
 * basis classes gamma_n(x); exponent n on such a generator means gamma_n(x),
 * not x^n. */
enum class GenKind { Polynomial, Exterior, DividedPower, Truncated };

std::string kind_name(GenKind k);
GenKind kind_from_name(const std::string& s);

struct Generator {
    std::string name;
    int degree = 0;     /* internal degree, > 0 */
    int filtration = 0; /* spectral-sequence pages only */
    GenKind kind = GenKind::Polynomial;
    int height = 0; /* Truncated: x^height = 0, height >= 2 */
};

struct Monomial {
    std::vector<int> e;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; } /* lex, declaration order */
};

struct Bidegree {
    int filt = 0;
    int internal = 0;

    int total() const { return filt + internal; }
    bool operator==(const Bidegree& o) const { return filt == o.filt && internal == o.internal; }
    bool operator<(const Bidegree& o) const
    {
        return filt != o.filt ? filt < o.filt : internal < o.internal;
    }
};

/* Sparse F_p-linear combination of monomials (free or reduced). */
class Element {
  public:
    Element() = default;

    void add_term(const PrimeField& f, const Monomial& m, i64 c);
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<Monomial, i64>& terms() const { return terms_; }
    Element plus(const PrimeField& f, const Element& o) const;
    Element scaled(const PrimeField& f, i64 c) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

  private:
    std::map<Monomial, i64> terms_;
};

struct PoincareSeries {
    std::vector<i64> dims; /* indexed by total degree, 0..D */

    i64 at(int d) const
    {
        return (d >= 0 && d < static_cast<int>(dims.size())) ? dims[d] : 0;
    }
    bool operator==(const PoincareSeries& o) const { return dims == o.dims; }
};

/* A graded-commutative F_p-algebra given as a tensor product of polynomial,
 * exterior, divided-power and truncated pieces, with optional homogeneous
 * relations. For odd p every generator of odd total degree must be Exterior
 * and every non-Exterior generator must have even total degree; on bigraded
 * pages parity is judged on filtration + internal degree. */
class Presentation {
  public:
    Presentation(PrimeField field, std::vector<Generator> gens,
                 std::vector<Element> relations = {});

    const PrimeField& field() const { return field_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Element>& relations() const { return relations_; }
    size_t ngens() const { return gens_.size(); }
    int gen_index(const std::string& name) const;

    Monomial unit() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
    Monomial gen_mono(int i, int exp = 1) const;
    Element gen_elt(int i, int exp = 1) const;
    Element unit_elt() const;

    int internal_degree(const Monomial& m) const;
    int filtration_of(const Monomial& m) const;
    Bidegree bidegree(const Monomial& m) const;
    int total_degree(const Monomial& m) const;
    bool odd(int gen) const { return (gens_[gen].degree + gens_[gen].filtration) % 2 != 0; }
    bool admissible(const Monomial& m) const;

    /* Graded-commutative free product: Koszul sign, exterior squares and
     * truncation overflow to zero, Lucas coefficients on divided powers.
     * Returns {0, unit} when the product vanishes. */
    std::pair<i64, Monomial> mul_free(const Monomial& a, const Monomial& b) const;
    Element mul_free(const Element& a, const Element& b) const;

    bool has_relations() const { return !relations_.empty(); }

  private:
    PrimeField field_;
    std::vector<Generator> gens_;
    std::vector<Element> relations_;
};

/* Monomial basis of a presentation through a total-degree bound, computed
 * degreewise; with relations the quotient basis in each bidegree slot is the
 * set of non-pivot monomials of the row-reduced ideal slice. */
class Basis {
  public:
    Basis(const Presentation& pres, int max_total_degree);

    const Presentation& pres() const { return *pres_; }
    int max_degree() const { return max_degree_; }

    const std::vector<Monomial>& slot(Bidegree b) const;
    const std::map<Bidegree, std::vector<Monomial>>& slots() const { return slots_; }
    std::optional<std::pair<Bidegree, int>> locate(const Monomial& m) const;

    i64 dim(Bidegree b) const;
    std::map<Bidegree, i64> bigraded_dims() const;
    PoincareSeries poincare() const;

    /* Canonical representative modulo the ideal; terms above the degree
     * bound are dropped (the basis is a truncated object). */
    Element reduce(Element free_elt) const;
    Element mul(const Element& a, const Element& b) const;

    Vec coords(const Element& reduced, Bidegree b) const;
    Element from_coords(const Vec& v, Bidegree b) const;

  private:
    const Presentation* pres_;
    int max_degree_;
    std::map<Bidegree, std::vector<Monomial>> slots_;
    std::map<Monomial, std::pair<Bidegree, int>> index_;
    /* relations only: per-slot reduced ideal span over the free slot basis */
    struct IdealSlice {
        std::vector<Monomial> free_monos;
        std::map<Monomial, int> free_index;
        RowSpace span;
    };
    std::map<Bidegree, IdealSlice> ideal_;
    std::vector<Monomial> empty_;
};

PoincareSeries poincare(const Presentation& pres, int D);

/* Independent generating-function oracle for relation-free presentations:
 * the coefficientwise product of each factor's dimension series. */
PoincareSeries poincare_product_oracle(const Presentation& pres, int D);

PoincareSeries convolve(const PoincareSeries& a, const PoincareSeries& b, int D);

} // namespace thh
