#pragma once

#include "thh/differential.hpp"

#include <memory>
#include <set>

namespace thh {

struct RunStats {
    int page = 0;
    std::map<Bidegree, i64> rank_by_source;  /* rank of d_r leaving each bidegree */
    std::map<int, i64> rank_by_source_total; /* aggregated by total degree */
    i64 total_rank = 0;
};

/* A multiplicative bigraded page, held as a subquotient Z/B of a fixed
 * E2 presentation. Differentials are Leibniz extensions of generator
 * assignments on the E2 monomial basis; run() verifies d respects the
 * bidegree shift, squares to zero, and preserves Z and B before taking
 * homology. Pages are immutable from the caller's point of view except
 * through run(). */
class PageState {
  public:
    PageState(const Presentation& e2, int max_total_degree,
              Convention conv = Convention::Brun, int page_number = 2);

    const Presentation& presentation() const { return *pres_; }
    const Basis& e2_basis() const { return basis_; }
    Convention convention() const { return conv_; }
    int page_number() const { return page_; }
    int max_degree() const { return basis_.max_degree(); }

    i64 dim(Bidegree b) const;
    std::map<Bidegree, i64> dims() const;
    PoincareSeries poincare(int D) const;
    const std::vector<Vec>& reps(Bidegree b) const; /* over the E2 slot */
    std::vector<Bidegree> nonzero_bidegrees() const;

    /* executes the page differential and advances to page spec.page + 1 */
    RunStats run(const DifferentialSpec& spec);

    /* product of current-page classes, reduced modulo boundaries and
     * expressed in the representative basis of the target bidegree */
    std::optional<Vec> product(Bidegree b1, const Vec& rep1, Bidegree b2, const Vec& rep2) const;

    i64 euler_characteristic() const; /* over the full built range */

  private:
    struct Slot {
        std::vector<Vec> cycles;     /* Z: echelon basis */
        std::vector<Vec> boundaries; /* B: echelon basis, B <= Z */
        std::vector<Vec> reps;       /* complement of B in Z */
    };
    const Slot* find_slot(Bidegree b) const;
    void rebuild_reps(Slot& s, i64 ambient) const;

    std::shared_ptr<const Presentation> pres_; /* owned: pages outlive their input */
    Basis basis_;
    Convention conv_;
    int page_;
    std::map<Bidegree, Slot> slots_;
    std::vector<Vec> no_reps_;
};

/* A generator differential known to vanish for reasons outside the page
 * (abutment dimensions, comodule arguments, ...). */
struct VerifiedZero {
    int gen = -1;
    int page = 0;
};

struct CollapseReport {
    bool collapsed = false;
    bool by_bidegree_only = false; /* no generator reasoning needed */
    /* first (page, bidegree) where a differential could still be nonzero */
    int violating_page = 0;
    Bidegree violating_bidegree;
    std::string note;
};

/* True iff no nonzero differential of any page number >= the current one can
 * exist through total degree D: first by pure bidegree reasons, then by the
 * generators-permanent argument (admissible for multiplicative pages), with
 * externally verified-zero differentials taken as given. */
CollapseReport check_collapse(const PageState& page, int D,
                              const std::vector<VerifiedZero>& verified = {});

struct CompareReport {
    bool match = true;
    std::vector<std::string> mismatches;
};

/* Bigraded dim equality when the claimed presentation is bigraded, plus
 * total-degree Poincare equality; mismatches itemized. */
CompareReport einfty_compare(const PageState& page, const Presentation& claimed, int D);
CompareReport compare_series(const PoincareSeries& computed, const PoincareSeries& claimed,
                             int D, const std::string& label);

} // namespace thh
