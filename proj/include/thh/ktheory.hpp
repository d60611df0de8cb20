#pragma once

#include "thh/graded.hpp"

namespace thh {

/* Arithmetic context: q a prime power, p >= 5 coprime to q, r the order of
 * q mod p, v = v_p(q^r - 1), k = (p-1)/r. Case table:
 *   (1) r = p-1, v = 1    (2) r = p-1, v >= 2
 *   (3) r < p-1, v >= 2   (4) r < p-1, v = 1 */
struct CaseParams {
    i64 q = 0;
    i64 p = 0;
    int r = 0;
    int v = 0;
    int k = 0;
    int case_id = 0;
};

CaseParams classify(i64 q, i64 p);

i64 padic_valuation(i64 n, i64 p);

/* v_p(q^i - 1) without forming q^i: the multiplicative order plus the
 * lifting-the-exponent step, exact for p >= 3. */
i64 torsion_exponent(i64 q, i64 p, i64 i);

enum class HomotopyGroup { Zp, Torsion, Zero };

/* Quillen's table: pi_0 = Z_p, pi_{2i-1} = Z/p^{v_p(q^i-1)} after
 * p-completion, zero otherwise. */
struct HomotopyOfK {
    CaseParams params;
    int max_degree = 0;

    HomotopyGroup group_at(int n) const;
    i64 torsion_order_exp(int n) const; /* m with pi_n = Z/p^m, 0 if not torsion */
};

HomotopyOfK homotopy_of_K(const CaseParams& params, int D);

/* Mod-p homotopy from the long exact sequence: coker(p) ⊕ ker(p) per degree;
 * asserted equal to the E(x) ⊗ P(y) series, |x| = 2r-1, |y| = 2r. */
PoincareSeries v0_of_K(const CaseParams& params, int D);

/* From v0 via the v_1 long exact sequence, v acting as multiplication by
 * y^k; equals the E(x) ⊗ P_k(y) series. */
PoincareSeries v1_of_K(const CaseParams& params, int D);

Presentation v0_presentation(const CaseParams& params);
Presentation v1_presentation(const CaseParams& params);

/* (degree, Bockstein page) pairs: the even class in degree 2ri supports its
 * first nonzero Bockstein differential on page v_p(q^{ri} - 1). */
std::vector<std::pair<int, i64>> bockstein_torsion_table(const CaseParams& params, int D);

/* The operator pair on P_r(u) ⊗ Γ(σx), |u| = 2, |σx| = 2r: F drops degree
 * by two with F(γ_n(σx) u^j) = (q^j-1)·γ_n u^{j-1} for j >= 1 and
 * F(γ_n(σx)) = c·γ_{n-1}(σx) u^{r-1}; G = (-)·u ∘ F. The report verifies the
 * derivation identity F(ab) = F(a)b + aF(b) + F(a)G(b) on all basis pairs,
 * its power form for n <= p, and injectivity of F in positive degrees. */
struct FgReport {
    bool pass = true;
    std::vector<std::string> failures;
    i64 pairs_checked = 0;
    i64 powers_checked = 0;
};

FgReport fg_operator_check(const CaseParams& params, int D, i64 unit = 1);

} // namespace thh
