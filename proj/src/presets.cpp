#include "thh/presets.hpp"

namespace thh {

namespace {

int pow_int(int b, int e)
{
    int r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

Generator poly(const std::string& n, int deg, int filt = 0)
{
    return {n, deg, filt, GenKind::Polynomial, 0};
}
Generator ext(const std::string& n, int deg, int filt = 0)
{
    return {n, deg, filt, GenKind::Exterior, 0};
}
Generator divided(const std::string& n, int deg, int filt = 0)
{
    return {n, deg, filt, GenKind::DividedPower, 0};
}
Generator trunc(const std::string& n, int deg, int h, int filt = 0)
{
    return {n, deg, filt, GenKind::Truncated, h};
}

} // namespace

Presentation brun_sset2_e2(const CaseParams& params)
{
    const int r = params.r, p = static_cast<int>(params.p);
    return Presentation(PrimeField(params.p),
                        {divided("sx", 2 * r, 0), ext("sy", 2 * r + 1, 0),
                         ext("lambda1", 0, 2 * p - 1), poly("mu1", 0, 2 * p)});
}

Presentation brun_sset3_e2_case1(const CaseParams& params)
{
    const int p = static_cast<int>(params.p);
    return Presentation(PrimeField(params.p),
                        {ext("x", 2 * p - 3, 0), ext("a", 0, p * (2 * p - 2) + 1),
                         ext("lambda2", 0, 2 * p * p - 1), poly("mu2", 0, 2 * p * p),
                         divided("b", 0, p * (2 * p - 2))});
}

Presentation brun_sset3_e2_case34(const CaseParams& params)
{
    const int r = params.r, p = static_cast<int>(params.p);
    std::vector<Generator> gens = {ext("x", 2 * r - 1, 0)};
    if (params.k >= 2)
        gens.push_back(trunc("y", 2 * r, params.k, 0));
    gens.push_back(divided("sx", 0, 2 * r));
    gens.push_back(ext("sy", 0, 2 * r + 1));
    gens.push_back(ext("lambda1", 0, 2 * p - 1));
    gens.push_back(poly("mu1", 0, 2 * p));
    return Presentation(PrimeField(params.p), gens);
}

Presentation homology_of_K_presentation(const CaseParams& params, int D)
{
    const int p = static_cast<int>(params.p);
    std::vector<Generator> gens;
    if (params.case_id == 1) {
        gens.push_back(ext("b", p * (2 * p - 2) - 1));
        if (p * (2 * p - 2) <= D)
            gens.push_back(poly("xi1p", p * (2 * p - 2)));
        for (int n = 2;; ++n) {
            int d = 2 * pow_int(p, n) - 2;
            if (d > D)
                break;
            gens.push_back(poly("xi" + std::to_string(n), d));
            if (d + 1 <= D)
                gens.push_back(ext("tau" + std::to_string(n), d + 1));
        }
    }
    else if (params.case_id == 2 || params.case_id == 3) {
        gens.push_back(ext("x", 2 * params.r - 1));
        if (params.k >= 2)
            gens.push_back(trunc("y", 2 * params.r, params.k));
        for (int n = 1;; ++n) {
            int d = 2 * pow_int(p, n) - 2;
            if (d > D)
                break;
            gens.push_back(poly("xi" + std::to_string(n), d));
            if (n >= 2 && d + 1 <= D)
                gens.push_back(ext("tau" + std::to_string(n), d + 1));
        }
    }
    else {
        throw Error("homology_of_K_presentation: case (4) is only known through 2p");
    }
    return Presentation(PrimeField(params.p), gens);
}

std::shared_ptr<Presentation> case4_homology_algebra(const CaseParams& params)
{
    if (params.case_id != 4 || params.r <= 1)
        throw Error("case4_homology_algebra: requires case (4) with r > 1");
    PrimeField f(params.p);
    std::vector<Generator> gens = {ext("x", 2 * params.r - 1),
                                   trunc("y", 2 * params.r, params.k)};
    Presentation free(f, gens);
    Element rel;
    Monomial m = free.unit();
    m.e[0] = 1;
    m.e[1] = params.k - 1;
    rel.add_term(f, m, 1);
    return std::make_shared<Presentation>(f, gens, std::vector<Element>{rel});
}

Presentation bokstedt_e2_case2(const CaseParams& params, int D)
{
    if (params.case_id != 2)
        throw Error("bokstedt_e2_case2: case (2) only");
    const int p = static_cast<int>(params.p);
    std::vector<Generator> gens = {ext("x", 2 * p - 3, 0)};
    for (int n = 1;; ++n) {
        int d = 2 * pow_int(p, n) - 2;
        if (d > D)
            break;
        gens.push_back(poly("xi" + std::to_string(n), d, 0));
        if (n >= 2 && d + 1 <= D)
            gens.push_back(ext("tau" + std::to_string(n), d + 1, 0));
    }
    for (int n = 1;; ++n) {
        int d = 2 * pow_int(p, n) - 2;
        if (d + 1 > D)
            break;
        gens.push_back(ext("sxi" + std::to_string(n), d, 1));
    }
    gens.push_back(divided("sx", 2 * p - 3, 1));
    for (int n = 2;; ++n) {
        int d = 2 * pow_int(p, n) - 1;
        if (d + 1 > D)
            break;
        gens.push_back(divided("stau" + std::to_string(n), d, 1));
    }
    return Presentation(PrimeField(params.p), gens);
}

Presentation bokstedt_einfty_case2(const CaseParams& params, int D)
{
    if (params.case_id != 2)
        throw Error("bokstedt_einfty_case2: case (2) only");
    const int p = static_cast<int>(params.p);
    std::vector<Generator> gens = {ext("x", 2 * p - 3, 0)};
    for (int n = 1;; ++n) {
        int d = 2 * pow_int(p, n) - 2;
        if (d > D)
            break;
        gens.push_back(poly("xi" + std::to_string(n), d, 0));
        if (n >= 2 && d + 1 <= D)
            gens.push_back(ext("tau" + std::to_string(n), d + 1, 0));
    }
    for (int n = 1; n <= 2; ++n) {
        int d = 2 * pow_int(p, n) - 2;
        if (d + 1 <= D)
            gens.push_back(ext("sxi" + std::to_string(n), d, 1));
    }
    gens.push_back(divided("sx", 2 * p - 3, 1));
    for (int n = 2;; ++n) {
        int d = 2 * pow_int(p, n) - 1;
        if (d + 1 > D)
            break;
        gens.push_back(trunc("stau" + std::to_string(n), d, p, 1));
    }
    return Presentation(PrimeField(params.p), gens);
}

Presentation thh_k_hfp(const CaseParams& params)
{
    const int r = params.r, p = static_cast<int>(params.p);
    PrimeField f(params.p);
    switch (params.case_id) {
    case 1:
        /* P(μ_1^p) ⊗ E(μ_1^{p-1}σy, λ_1 σx^{p-1}) ⊗ Γ(γ_p(σx)) */
        return Presentation(f, {poly("mu1p", 2 * p * p),
                                ext("mu1p1sy", 2 * p * p - 1),
                                ext("l1sxp1", 2 * p * p - 2 * p + 1),
                                divided("gpsx", p * (2 * p - 2))});
    case 2:
        return Presentation(f, {poly("mu1p", 2 * p * p),
                                ext("mu1p1sy", 2 * p * p - 1),
                                ext("lambda1", 2 * p - 1), divided("sx", 2 * p - 2)});
    case 3:
    case 4:
        if (params.case_id == 4 && params.r == 1)
            throw Error("thh_k_hfp: case (4) with r = 1 is out of scope");
        return Presentation(f, {poly("mu1", 2 * p), ext("sy", 2 * r + 1),
                                ext("lambda1", 2 * p - 1), divided("sx", 2 * r)});
    default:
        throw Error("thh_k_hfp: bad case");
    }
}

Presentation v1_thh_case2(const CaseParams& params)
{
    const int p = static_cast<int>(params.p);
    return Presentation(PrimeField(params.p),
                        {ext("x", 2 * p - 3), ext("lambda1", 2 * p - 1),
                         ext("lambda2", 2 * p * p - 1), poly("mu2", 2 * p * p),
                         divided("gamma1p", 2 * p - 2)});
}

Presentation omega_infinity(i64 p)
{
    const int pi = static_cast<int>(p);
    PrimeField f(p);
    std::vector<Generator> gens = {ext("x", 2 * pi - 3),
                                   ext("e", pi * (2 * pi - 2) + 1),
                                   poly("c", 2 * pi * pi + 2 * pi - 4),
                                   poly("d", 4 * pi * pi - 2 * pi)};
    Presentation free(f, gens);
    const int x = 0, e = 1, c = 2, d = 3;
    auto mono = [&](std::initializer_list<std::pair<int, int>> exps) {
        Monomial m = free.unit();
        for (const auto& [g, ex] : exps)
            m.e[g] += ex;
        return m;
    };
    std::vector<Element> rels;
    auto add_rel = [&](std::initializer_list<std::pair<Monomial, i64>> terms) {
        Element r;
        for (const auto& [m, cf] : terms)
            r.add_term(f, m, cf);
        rels.push_back(std::move(r));
    };
    add_rel({{mono({{c, 2}}), 1}});                            /* c^2 = 0 */
    add_rel({{mono({{d, 2}}), 1}});                            /* d^2 = 0 */
    add_rel({{mono({{x, 1}, {e, 1}}), 1}});                    /* xe = 0 */
    add_rel({{mono({{x, 1}, {c, 1}}), 1}});                    /* xc = 0 */
    add_rel({{mono({{d, 1}, {e, 1}}), 1}});                    /* de = 0 */
    add_rel({{mono({{d, 1}, {c, 1}}), 1}});                    /* dc = 0 */
    add_rel({{mono({{e, 1}, {c, 1}}), 1}, {mono({{x, 1}, {d, 1}}), 1}}); /* ec + xd = 0 */
    return Presentation(f, gens, rels);
}

Presentation v1_thh_case1(i64 p)
{
    const int pi = static_cast<int>(p);
    Presentation om = omega_infinity(p);
    std::vector<Generator> gens = om.generators();
    gens.push_back(poly("mu2", 2 * pi * pi));
    gens.push_back(divided("b", pi * (2 * pi - 2)));
    Presentation free(PrimeField(p), gens);
    /* re-embed the Ω^∞ relations in the larger generator list */
    std::vector<Element> rels;
    for (const Element& r : om.relations()) {
        Element e;
        for (const auto& [m, c] : r.terms()) {
            Monomial big = free.unit();
            for (size_t i = 0; i < m.e.size(); ++i)
                big.e[i] = m.e[i];
            e.add_term(free.field(), big, c);
        }
        rels.push_back(std::move(e));
    }
    return Presentation(PrimeField(p), gens, rels);
}

Presentation veen_e2_case1(const CaseParams& params, int D)
{
    if (params.case_id != 1)
        throw Error("veen_e2_case1: case (1) only");
    const int p = static_cast<int>(params.p);
    std::vector<Generator> gens;
    gens.push_back(divided("sb", p * (2 * p - 2) - 1, 1));
    if (p * (2 * p - 2) + 1 <= D)
        gens.push_back(ext("sxi1p", p * (2 * p - 2), 1));
    for (int n = 2;; ++n) {
        int d = 2 * pow_int(p, n) - 2;
        if (d + 1 > D)
            break;
        gens.push_back(ext("sxi" + std::to_string(n), d, 1));
        if (d + 2 <= D)
            gens.push_back(divided("stau" + std::to_string(n), d + 1, 1));
    }
    return Presentation(PrimeField(params.p), gens);
}

Presentation pr_u_gamma(const CaseParams& params)
{
    PrimeField f(params.p);
    std::vector<Generator> gens;
    if (params.r >= 2)
        gens.push_back(trunc("u", 2, params.r));
    gens.push_back(divided("sx", 2 * params.r));
    return Presentation(f, gens);
}

Presentation v0_hz_smash(const CaseParams& params)
{
    return Presentation(PrimeField(params.p),
                        {divided("sx", 2 * params.r), ext("sy", 2 * params.r + 1)});
}

Presentation hz_thh_hfp(i64 p)
{
    const int pi = static_cast<int>(p);
    return Presentation(PrimeField(p), {ext("lambda1", 2 * pi - 1), poly("mu1", 2 * pi)});
}

DifferentialSpec sset2_d_lambda1(const Presentation& page, const CaseParams& params, i64 unit)
{
    DifferentialSpec spec;
    spec.page = 2 * static_cast<int>(params.p) - 1;
    DifferentialSpec::Assign a;
    a.gen = page.gen_index("lambda1");
    a.target = page.gen_elt(page.gen_index("sx"), 1);
    a.unit = unit;
    spec.assigns.push_back(std::move(a));
    return spec;
}

DifferentialSpec sset2_d_mu1(const Presentation& page, const CaseParams& params, i64 unit)
{
    DifferentialSpec spec;
    spec.page = 2 * static_cast<int>(params.p);
    DifferentialSpec::Assign a;
    a.gen = page.gen_index("mu1");
    a.target = page.gen_elt(page.gen_index("sy"), 1);
    a.unit = unit;
    spec.assigns.push_back(std::move(a));
    return spec;
}

DifferentialSpec sset3_case1_d(const Presentation& page, const CaseParams& params, i64 unit)
{
    const PrimeField& f = page.field();
    DifferentialSpec spec;
    spec.page = 2 * static_cast<int>(params.p) - 2;
    DifferentialSpec::Assign a;
    a.gen = page.gen_index("lambda2");
    Monomial xa = page.unit();
    xa.e[page.gen_index("x")] = 1;
    xa.e[page.gen_index("a")] = 1;
    a.target.add_term(f, xa, 1);
    a.unit = unit;
    spec.assigns.push_back(std::move(a));
    return spec;
}

DifferentialSpec bokstedt_d_pminus1(const Presentation& page, const CaseParams& params, i64 unit)
{
    const int p = static_cast<int>(params.p);
    DifferentialSpec spec;
    spec.page = p - 1;
    for (int n = 2;; ++n) {
        std::string stau = "stau" + std::to_string(n);
        std::string sxi = "sxi" + std::to_string(n + 1);
        bool have = false;
        for (const auto& g : page.generators())
            if (g.name == stau)
                have = true;
        if (!have)
            break;
        DifferentialSpec::GammaAssign ga;
        ga.gen = page.gen_index(stau);
        ga.offset = p;
        bool have_target = false;
        for (const auto& g : page.generators())
            if (g.name == sxi)
                have_target = true;
        if (have_target)
            ga.w = page.gen_elt(page.gen_index(sxi), 1);
        /* σξ̃_{n+1} above the bound: the pattern maps into the truncation */
        ga.unit = unit;
        spec.gamma_assigns.push_back(std::move(ga));
    }
    return spec;
}

DifferentialSpec sset3_case34_d_mu1(const Presentation& page, const CaseParams& params, i64 unit)
{
    const PrimeField& f = page.field();
    DifferentialSpec spec;
    spec.page = 2 * static_cast<int>(params.p) - 2 * params.r - 1;
    DifferentialSpec::Assign a;
    a.gen = page.gen_index("mu1");
    Monomial m = page.unit();
    if (params.k >= 2)
        m.e[page.gen_index("y")] = params.k - 1;
    m.e[page.gen_index("sy")] = 1;
    a.target.add_term(f, m, 1);
    a.unit = unit;
    spec.assigns.push_back(std::move(a));
    return spec;
}

DifferentialSpec sset3_case4_d_lambda1(const Presentation& page, const CaseParams& params,
                                       i64 unit)
{
    const PrimeField& f = page.field();
    DifferentialSpec spec;
    spec.page = 2 * static_cast<int>(params.p) - 2 * params.r - 2;
    DifferentialSpec::Assign a;
    a.gen = page.gen_index("lambda1");
    Monomial m = page.unit();
    m.e[page.gen_index("x")] = 1;
    if (params.k >= 3)
        m.e[page.gen_index("y")] = params.k - 2;
    m.e[page.gen_index("sy")] = 1;
    a.target.add_term(f, m, 1);
    a.unit = unit;
    spec.assigns.push_back(std::move(a));
    return spec;
}

std::vector<std::string> preset_names()
{
    return {"v0-k",          "v1-k",           "dual-steenrod",   "homology-k",
            "case4-homology", "thh-k-hfp",     "v1-thh-case1",    "v1-thh-case2",
            "omega-infinity", "veen-e2-case1", "pr-u-gamma",      "v0-hz-smash",
            "hz-thh-hfp",     "brun-sset2-e2", "brun-sset3-e2-case1",
            "brun-sset3-e2-case34", "bokstedt-e2-case2", "bokstedt-einfty-case2"};
}

Presentation preset_presentation(const std::string& name, const CaseParams& params)
{
    const int D = 200; /* generator cutoff for families; basis bounds are the caller's */
    if (name == "v0-k")
        return v0_presentation(params);
    if (name == "v1-k")
        return v1_presentation(params);
    if (name == "dual-steenrod")
        return Presentation(build_dual_steenrod(params.p, D)->pres());
    if (name == "homology-k")
        return homology_of_K_presentation(params, D);
    if (name == "case4-homology")
        return *case4_homology_algebra(params);
    if (name == "thh-k-hfp")
        return thh_k_hfp(params);
    if (name == "v1-thh-case1")
        return v1_thh_case1(params.p);
    if (name == "v1-thh-case2")
        return v1_thh_case2(params);
    if (name == "omega-infinity")
        return omega_infinity(params.p);
    if (name == "veen-e2-case1")
        return veen_e2_case1(params, D);
    if (name == "pr-u-gamma")
        return pr_u_gamma(params);
    if (name == "v0-hz-smash")
        return v0_hz_smash(params);
    if (name == "hz-thh-hfp")
        return hz_thh_hfp(params.p);
    if (name == "brun-sset2-e2")
        return brun_sset2_e2(params);
    if (name == "brun-sset3-e2-case1")
        return brun_sset3_e2_case1(params);
    if (name == "brun-sset3-e2-case34")
        return brun_sset3_e2_case34(params);
    if (name == "bokstedt-e2-case2")
        return bokstedt_e2_case2(params, D);
    if (name == "bokstedt-einfty-case2")
        return bokstedt_einfty_case2(params, D);
    throw Error("unknown preset '" + name + "'");
}

} // namespace thh
