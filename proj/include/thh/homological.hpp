#pragma once

#include "thh/specseq.hpp"

#include <functional>
#include <memory>

namespace thh {

/* A bigraded (homological s, internal t) complex of F_p vector spaces with
 * one differential block per (s,t), mapping stage s to stage s-1 in the same
 * internal degree. d∘d = 0 is asserted at construction. */
class ChainComplex {
  public:
    ChainComplex(PrimeField field, std::string name);

    const PrimeField& field() const { return field_; }
    const std::string& name() const { return name_; }

    void set_basis(int s, int t, std::vector<std::string> names);
    void set_differential(int s, int t, FpMatrix block); /* (s,t) -> (s-1,t) */
    void validate(); /* checks shapes and d∘d = 0 */

    i64 dim(int s, int t) const;
    const std::vector<std::string>& basis_names(int s, int t) const;
    const FpMatrix* differential(int s, int t) const;
    int max_stage() const { return max_stage_; }

    std::map<std::pair<int, int>, i64> homology_dims() const;
    std::map<int, i64> homology_total_dims() const; /* by s + t */
    std::map<int, i64> homology_internal_dims() const;

    /* per internal degree: alternating sums of chain and homology dims agree */
    bool euler_consistent() const;

  private:
    PrimeField field_;
    std::string name_;
    std::map<std::pair<int, int>, std::vector<std::string>> bases_;
    std::map<std::pair<int, int>, FpMatrix> diffs_;
    int max_stage_ = 0;
    std::vector<std::string> empty_;
};

/* Multiplicative map between presentations, given on generators. */
struct AlgebraHom {
    const Presentation* src = nullptr;
    const Presentation* dst = nullptr;
    std::vector<Element> images; /* one per src generator */

    Element apply(const Basis& dst_basis, const Monomial& m) const;
};

AlgebraHom augmentation_hom(const Presentation& src, const Presentation& fp_algebra);

/* Trivial coefficients: the algebra F_p itself. */
Presentation trivial_algebra(PrimeField field);

/* The normalized Hochschild complex of a connected presentation A with
 * coefficients in Q, truncated to internal degree <= D and homological
 * degree <= D / (minimal generator degree). Faces merge adjacent tensor
 * factors; the last face carries the Koszul sign of the cyclic rotation. */
ChainComplex hochschild_complex(const Presentation& A, const Presentation& Q,
                                const AlgebraHom& coeff_map, int D);

/* Tor_{s,t}^A(F_p, F_p) for t <= D via the normalized bar complex. */
struct BigradedDims {
    std::map<std::pair<int, int>, i64> by_bidegree; /* (s,t) */

    i64 at(int s, int t) const;
    std::map<int, i64> totals() const;
    i64 total_at(int d) const;
};

BigradedDims tor_via_bar(const Presentation& A, int D);

/* A free resolution of F_p over a presented algebra; stage generators carry
 * internal degrees and the differential is given by algebra coefficients. */
class FreeResolution {
  public:
    struct Gen {
        std::string name;
        int degree = 0;
    };
    /* value of d on a stage-s generator: pairs (index into stage s-1, coeff) */
    using Diff = std::vector<std::pair<int, Element>>;

    FreeResolution(std::shared_ptr<const Presentation> algebra, int D);

    const Presentation& algebra() const { return *algebra_; }
    const Basis& algebra_basis() const { return basis_; }
    int bound() const { return basis_.max_degree(); }

    int add_stage();
    int add_generator(int stage, const std::string& name, int degree, Diff d);
    int stages() const { return static_cast<int>(gens_.size()); }
    const std::vector<Gen>& stage_gens(int s) const { return gens_[s]; }
    const Diff& differential_of(int s, int i) const { return diffs_[s][i]; }

    /* free-module slice F_{s,t}: basis pairs (generator, algebra monomial) */
    struct Slice {
        std::vector<std::pair<int, Monomial>> basis;
        std::map<std::pair<int, Monomial>, int> index;
    };
    const Slice& slice(int s, int t) const;
    FpMatrix matrix(int s, int t) const; /* d^s: F_{s,t} -> F_{s-1,t} */

    void validate_dd(int total_bound) const;
    /* exactness of ... -> F_1 -> F_0 -> F_p -> 0 in total degrees <= n */
    bool exact_through(int total_bound, std::string* first_failure = nullptr) const;

    /* homology of the induced complex F ⊗_A F_p (for minimal resolutions the
     * differential vanishes and this is just the generator count) */
    std::map<std::pair<int, int>, i64> tensor_fp_homology() const;
    std::map<std::pair<int, int>, i64> generator_dims() const;

    std::string text_chart() const;

  private:
    std::shared_ptr<const Presentation> algebra_;
    Basis basis_;
    std::vector<std::vector<Gen>> gens_;
    std::vector<std::vector<Diff>> diffs_;
    mutable std::map<std::pair<int, int>, Slice> slices_;
};

/* Stage-by-stage minimal resolution: each stage adds one free generator per
 * basis vector of ker d / (augmentation ideal)·ker d, lowest internal degree
 * first, lexicographic tie-break. Tor dims are the generator counts. */
FreeResolution minimal_resolution(const Presentation& A, int D);

struct CaseParams; /* ktheory.hpp */

/* The explicit case-(4) resolution over (E(x) ⊗ P_k(y))/(x y^{k-1}), built
 * from its stated generator list and differentials; rejects parameters
 * outside case (4) with r > 1. */
FreeResolution ahl3_resolution(const CaseParams& params, int D);

/* Homology of a differential graded algebra with representative tracking:
 * a one-differential page over the given presentation. */
struct DgaHomology {
    PageState page;
    RunStats stats;
};

DgaHomology dga_homology(const Presentation& pres, const DifferentialSpec& spec, int D,
                         Convention conv = Convention::Brun);

} // namespace thh
