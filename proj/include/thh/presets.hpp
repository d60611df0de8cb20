#pragma once

#include "thh/homological.hpp"
#include "thh/steenrod.hpp"

namespace thh {

/* Named presentations and spectral-sequence pages used by the CLI and the
 * scenario layer, so degree data is never hand-typed. */

std::vector<std::string> preset_names();

/* throws on unknown name; params drives the case-dependent degrees */
Presentation preset_presentation(const std::string& name, const CaseParams& params);

/* Brun-style page for V(0)THH(K; HZ_p):
 * Γ(σx) ⊗ E(σy) ⊗ E(λ_1) ⊗ P(μ_1), |σx| = (0,2r), |σy| = (0,2r+1),
 * |λ_1| = (2p-1,0), |μ_1| = (2p,0). */
Presentation brun_sset2_e2(const CaseParams& params);

/* Brun-style page for V(1)THH(K), case (1):
 * E(x) ⊗ E(a, λ_2) ⊗ P(μ_2) ⊗ Γ(b). */
Presentation brun_sset3_e2_case1(const CaseParams& params);

/* Brun-style page for V(1)THH(K), cases (3)/(4) (the closing-remark
 * hypothesis runs): E(x) ⊗ P_k(y) ⊗ Γ(σx) ⊗ E(σy) ⊗ E(λ_1) ⊗ P(μ_1). */
Presentation brun_sset3_e2_case34(const CaseParams& params);

/* Bökstedt E² for THH(K) in case (2):
 * (HF_p)_*K ⊗ E(σξ̃_1, σξ̃_2, ...) ⊗ Γ(σx, στ̃_2, ...). */
Presentation bokstedt_e2_case2(const CaseParams& params, int D);

/* the claimed E^p = E^∞ of the same spectral sequence */
Presentation bokstedt_einfty_case2(const CaseParams& params, int D);

/* case-(1) homology of K as a plain presentation (comodule-free view) */
Presentation homology_of_K_presentation(const CaseParams& params, int D);

/* (E(x) ⊗ P_k(y))/(x y^{k-1}), the case-(4) low-degree homology */
std::shared_ptr<Presentation> case4_homology_algebra(const CaseParams& params);

/* THH_*(K; HF_p) answers, one per case */
Presentation thh_k_hfp(const CaseParams& params);

/* V(1)_*THH(K) in case (2): E(x) ⊗ E(λ_1, λ_2) ⊗ P(μ_2) ⊗ Γ(γ_1') */
Presentation v1_thh_case2(const CaseParams& params);

/* Ω^∞: generators x, e, c, d with the eight quadratic relations */
Presentation omega_infinity(i64 p);

/* Ω^∞ ⊗ P(μ_2) ⊗ Γ(b), the case-(1) V(1)THH answer */
Presentation v1_thh_case1(i64 p);

/* Veen E² over the case-(1) homology: E(σξ̃_1^p, σξ̃_2, ...) ⊗ Γ(σb, στ̃_2, ...) */
Presentation veen_e2_case1(const CaseParams& params, int D);

/* P_r(u) ⊗ Γ(σx) with |u| = 2, |σx| = 2r */
Presentation pr_u_gamma(const CaseParams& params);

/* Γ(σx) ⊗ E(σy) with |σx| = 2r, |σy| = 2r+1 */
Presentation v0_hz_smash(const CaseParams& params);

/* E(λ_1) ⊗ P(μ_1): THH of the p-complete integers with F_p coefficients */
Presentation hz_thh_hfp(i64 p);

/* differentials */
DifferentialSpec sset2_d_lambda1(const Presentation& page, const CaseParams& params, i64 unit = 1);
DifferentialSpec sset2_d_mu1(const Presentation& page, const CaseParams& params, i64 unit = 1);
DifferentialSpec sset3_case1_d(const Presentation& page, const CaseParams& params, i64 unit = 1);
DifferentialSpec bokstedt_d_pminus1(const Presentation& page, const CaseParams& params,
                                    i64 unit = 1);
/* conjectural (closing remark); never asserted */
DifferentialSpec sset3_case34_d_mu1(const Presentation& page, const CaseParams& params,
                                    i64 unit = 1);
DifferentialSpec sset3_case4_d_lambda1(const Presentation& page, const CaseParams& params,
                                       i64 unit = 1);

} // namespace thh
