#pragma once

#include "thh/graded.hpp"

namespace thh {

struct PageShift {
    int dfilt = 0;
    int dinternal = -1;

    Bidegree apply(Bidegree b) const { return Bidegree{b.filt + dfilt, b.internal + dinternal}; }
};

/* Bidegree conventions used by the pages. Both describe the shift
 * (s,t) -> (s-r, t+r-1): total degree drops by one, filtration by r. */
enum class Convention { Homological, Brun };

PageShift shift_for(Convention conv, int page);

/* A differential given on generators, Leibniz-extended to monomials.
 * Divided-power generators admit two rules:
 *   - a plain assignment d(x) = T acts as d(gamma_n(x)) = T*gamma_{n-1}(x);
 *   - a gamma-pattern (offset p) acts as d(gamma_{p+i}(x)) = w*gamma_i(x)
 *     and kills gamma_n(x) for n < p.
 * Each assignment carries a unit in F_p^x; the engine checks d(d(m)) = 0 for
 * whatever rule is supplied rather than assuming a closed form. */
struct DifferentialSpec {
    struct Assign {
        int gen = -1;
        Element target;
        i64 unit = 1;
    };
    struct GammaAssign {
        int gen = -1;
        int offset = 0;
        Element w;
        i64 unit = 1;
    };

    int page = 1;
    std::vector<Assign> assigns;
    std::vector<GammaAssign> gamma_assigns;

    DifferentialSpec rescaled(i64 unit) const;
};

/* Leibniz extension of a DifferentialSpec over a basis. Signs follow total
 * degree. Results are reduced into the basis (quotients, truncation). */
class Derivation {
  public:
    Derivation(const Basis& basis, const DifferentialSpec& spec);

    Element apply(const Monomial& m) const;
    Element apply(const Element& e) const;

    /* matrix of d on a slot, written in the target-slot coordinates */
    FpMatrix slot_matrix(Bidegree source, const PageShift& shift) const;

    /* d(d(m)) = 0 on every basis monomial; throws on violation */
    void check_square_zero(const PageShift& shift) const;

  private:
    const Basis* basis_;
    DifferentialSpec spec_;
    std::vector<int> plain_;  /* gen -> index into assigns, -1 if none */
    std::vector<int> gamma_;  /* gen -> index into gamma_assigns, -1 if none */
};

} // namespace thh
