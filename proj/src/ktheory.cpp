#include "thh/ktheory.hpp"

#include <algorithm>

namespace thh {

namespace {

bool is_prime_power(i64 q)
{
    if (q < 2)
        return false;
    for (i64 d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            while (q % d == 0)
                q /= d;
            return q == 1;
        }
    }
    return true; /* q itself prime */
}

} // namespace

i64 padic_valuation(i64 n, i64 p)
{
    if (n == 0)
        throw Error("padic_valuation of zero");
    i64 v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

CaseParams classify(i64 q, i64 p)
{
    if (p < 5 || !is_prime(p))
        throw Error("classify: p must be a prime >= 5");
    if (!is_prime_power(q))
        throw Error("classify: q must be a prime power");
    if (q % p == 0)
        throw Error("classify: p divides q");
    CaseParams out;
    out.q = q;
    out.p = p;
    PrimeField f(p);
    /* order of q in (Z/p)^* by successive powers */
    i64 qm = f.reduce(q), acc = qm;
    int r = 1;
    while (acc != 1) {
        acc = f.mul(acc, qm);
        ++r;
        if (r > p)
            throw Error("classify: order computation failed");
    }
    out.r = r;
    /* v = v_p(q^r - 1) by repeated division, computed mod prime powers to
     * avoid forming q^r */
    auto pow_mod = [](i64 base, i64 e, i64 mod) {
        unsigned __int128 res = 1 % mod;
        unsigned __int128 b = static_cast<unsigned __int128>(base % mod);
        while (e > 0) {
            if (e & 1)
                res = res * b % static_cast<unsigned __int128>(mod);
            b = b * b % static_cast<unsigned __int128>(mod);
            e >>= 1;
        }
        return static_cast<i64>(res);
    };
    int v = 0;
    i64 pj = 1;
    while (true) {
        if (pj > (i64(1) << 40) / p)
            break; /* torsion this deep never occurs at desk scale */
        pj *= p;
        if (pow_mod(q, r, pj) == 1 % pj)
            ++v;
        else
            break;
    }
    out.v = v;
    if (v < 1)
        throw Error("classify: internal error, v < 1");
    if ((p - 1) % r != 0)
        throw Error("classify: r does not divide p-1");
    out.k = static_cast<int>((p - 1) / r);
    if (r == p - 1)
        out.case_id = (v == 1) ? 1 : 2;
    else
        out.case_id = (v >= 2) ? 3 : 4;
    return out;
}

i64 torsion_exponent(i64 q, i64 p, i64 i)
{
    if (i <= 0)
        return 0;
    CaseParams c = classify(q, p);
    if (i % c.r != 0)
        return 0;
    /* lifting the exponent, p odd: v_p(q^{rm} - 1) = v_p(q^r - 1) + v_p(m) */
    return c.v + padic_valuation(i / c.r, p);
}

HomotopyGroup HomotopyOfK::group_at(int n) const
{
    if (n == 0)
        return HomotopyGroup::Zp;
    if (n > 0 && n % 2 == 1) {
        i64 i = (n + 1) / 2;
        if (torsion_exponent(params.q, params.p, i) >= 1)
            return HomotopyGroup::Torsion;
    }
    return HomotopyGroup::Zero;
}

i64 HomotopyOfK::torsion_order_exp(int n) const
{
    if (n <= 0 || n % 2 == 0)
        return 0;
    return torsion_exponent(params.q, params.p, (n + 1) / 2);
}

HomotopyOfK homotopy_of_K(const CaseParams& params, int D)
{
    return HomotopyOfK{params, D};
}

Presentation v0_presentation(const CaseParams& params)
{
    PrimeField f(params.p);
    return Presentation(f, {{"x", 2 * params.r - 1, 0, GenKind::Exterior, 0},
                            {"y", 2 * params.r, 0, GenKind::Polynomial, 0}});
}

Presentation v1_presentation(const CaseParams& params)
{
    PrimeField f(params.p);
    std::vector<Generator> gens = {{"x", 2 * params.r - 1, 0, GenKind::Exterior, 0}};
    if (params.k >= 2)
        gens.push_back({"y", 2 * params.r, 0, GenKind::Truncated, params.k});
    return Presentation(f, gens);
}

PoincareSeries v0_of_K(const CaseParams& params, int D)
{
    HomotopyOfK htpy = homotopy_of_K(params, D + 1);
    PoincareSeries s;
    s.dims.assign(static_cast<size_t>(D) + 1, 0);
    for (int n = 0; n <= D; ++n) {
        i64 d = 0;
        /* coker(p) at n */
        switch (htpy.group_at(n)) {
        case HomotopyGroup::Zp:
        case HomotopyGroup::Torsion: d += 1; break;
        case HomotopyGroup::Zero: break;
        }
        /* ker(p) at n-1 */
        if (n >= 1 && htpy.group_at(n - 1) == HomotopyGroup::Torsion)
            d += 1;
        s.dims[static_cast<size_t>(n)] = d;
    }
    PoincareSeries closed = poincare(v0_presentation(params), D);
    if (!(s == closed))
        throw Error("v0_of_K: long exact sequence disagrees with E(x) ⊗ P(y)");
    return s;
}

PoincareSeries v1_of_K(const CaseParams& params, int D)
{
    const PrimeField f(params.p);
    const int shift = static_cast<int>(2 * params.p - 2);
    Presentation v0 = v0_presentation(params);
    Basis basis(v0, D + shift + 1);
    /* v acts as multiplication by y^k */
    Element yk = v0.gen_elt(1, params.k);
    auto rank_at = [&](int n) -> i64 {
        /* rank of y^k: V0_{n-shift} -> V0_n */
        if (n - shift < 0)
            return 0;
        const auto& src = basis.slot(Bidegree{0, n - shift});
        const auto& dst = basis.slot(Bidegree{0, n});
        if (src.empty() || dst.empty())
            return 0;
        FpMatrix m(static_cast<i64>(dst.size()), static_cast<i64>(src.size()), f);
        for (size_t j = 0; j < src.size(); ++j) {
            Element e;
            e.add_term(f, src[j], 1);
            Element prod = basis.mul(e, yk);
            for (const auto& [pm, pc] : prod.terms()) {
                auto loc = basis.locate(pm);
                m.at(loc->second, static_cast<i64>(j)) = pc;
            }
        }
        return rank_and_kernel(m).rank;
    };
    PoincareSeries v0s = v0_of_K(params, D + shift + 1);
    PoincareSeries s;
    s.dims.assign(static_cast<size_t>(D) + 1, 0);
    for (int n = 0; n <= D; ++n) {
        i64 coker = v0s.at(n) - rank_at(n);
        i64 ker = 0;
        if (n - shift - 1 >= -shift) { /* ker(v: V0_{n-shift-1} -> V0_{n-1}) */
            i64 src_dim = (n - shift - 1 >= 0) ? v0s.at(n - shift - 1) : 0;
            ker = src_dim - rank_at(n - 1);
        }
        s.dims[static_cast<size_t>(n)] = coker + ker;
    }
    PoincareSeries closed = poincare(v1_presentation(params), D);
    if (!(s == closed))
        throw Error("v1_of_K: long exact sequence disagrees with E(x) ⊗ P_k(y)");
    return s;
}

std::vector<std::pair<int, i64>> bockstein_torsion_table(const CaseParams& params, int D)
{
    std::vector<std::pair<int, i64>> out;
    for (int i = 1; 2 * params.r * i <= D; ++i)
        out.push_back({2 * params.r * i, torsion_exponent(params.q, params.p, params.r * i)});
    return out;
}

namespace {

Presentation fg_algebra(const CaseParams& params)
{
    PrimeField f(params.p);
    std::vector<Generator> gens;
    if (params.r >= 2)
        gens.push_back({"u", 2, 0, GenKind::Truncated, params.r});
    gens.push_back({"sx", 2 * params.r, 0, GenKind::DividedPower, 0});
    return Presentation(f, gens);
}

} // namespace

FgReport fg_operator_check(const CaseParams& params, int D, i64 unit)
{
    const PrimeField f(params.p);
    if (f.reduce(unit) == 0)
        throw Error("fg_operator_check: unit must be nonzero");
    Presentation alg = fg_algebra(params);
    Basis basis(alg, D);
    const int iu = params.r >= 2 ? alg.gen_index("u") : -1;
    const int ix = alg.gen_index("sx");

    auto F = [&](const Element& e) -> Element {
        Element out;
        for (const auto& [m, c] : e.terms()) {
            int j = iu >= 0 ? m.e[iu] : 0;
            int n = m.e[ix];
            if (j >= 1) {
                Monomial t = m;
                t.e[iu] = j - 1;
                i64 coef = f.reduce(f.pow(f.reduce(params.q), j) - 1);
                out.add_term(f, t, f.mul(c, coef));
            }
            else if (n >= 1) {
                Monomial t = m;
                t.e[ix] = n - 1;
                if (iu >= 0)
                    t.e[iu] = params.r - 1;
                out.add_term(f, t, f.mul(c, f.reduce(unit)));
            }
        }
        return out;
    };
    Element u_elt = iu >= 0 ? alg.gen_elt(iu, 1) : Element{};
    auto G = [&](const Element& e) -> Element {
        if (iu < 0)
            return Element{}; /* r = 1: G = u·F = 0 */
        return basis.mul(F(e), u_elt);
    };

    FgReport rep;
    std::vector<std::pair<int, Monomial>> monos; /* (degree, monomial) */
    for (const auto& [b, v] : basis.slots())
        for (const auto& m : v)
            monos.push_back({b.total(), m});

    /* F injective in positive degrees (each graded piece is a line) */
    for (const auto& [d, m] : monos) {
        if (d == 0)
            continue;
        Element e;
        e.add_term(f, m, 1);
        if (F(e).is_zero()) {
            rep.pass = false;
            rep.failures.push_back("F vanishes in positive degree " + std::to_string(d));
        }
    }

    /* (ef): F(ab) = F(a)b + aF(b) + F(a)G(b) on all basis pairs in range */
    for (const auto& [da, ma] : monos)
        for (const auto& [db, mb] : monos) {
            if (da + db > D)
                continue;
            Element a, b;
            a.add_term(f, ma, 1);
            b.add_term(f, mb, 1);
            Element lhs = F(basis.mul(a, b));
            Element rhs = basis.mul(F(a), b)
                              .plus(f, basis.mul(a, F(b)))
                              .plus(f, basis.mul(F(a), G(b)));
            ++rep.pairs_checked;
            if (!(lhs == rhs)) {
                rep.pass = false;
                rep.failures.push_back("(ef) fails for pair of degrees " + std::to_string(da) +
                                       ", " + std::to_string(db));
                if (rep.failures.size() > 5)
                    return rep;
            }
        }

    /* (sf): F(a^n) = F(a)·sum_{i=0}^{n-1} C(n, n-1-i) a^{n-1-i} G(a)^i, n <= p */
    for (const auto& [da, ma] : monos) {
        if (da == 0)
            continue;
        Element a;
        a.add_term(f, ma, 1);
        for (int n = 2; n <= params.p && n * da <= D; ++n) {
            Element an = alg.unit_elt();
            for (int i = 0; i < n; ++i)
                an = basis.mul(an, a);
            Element lhs = F(an);
            Element sum;
            Element gpow = alg.unit_elt();
            for (int i = 0; i <= n - 1; ++i) {
                Element apow = alg.unit_elt();
                for (int j = 0; j < n - 1 - i; ++j)
                    apow = basis.mul(apow, a);
                i64 binom = lucas_binomial(n, n - 1 - i, f);
                sum = sum.plus(f, basis.mul(apow, gpow).scaled(f, binom));
                gpow = basis.mul(gpow, G(a));
            }
            Element rhs = basis.mul(F(a), sum);
            ++rep.powers_checked;
            if (!(lhs == rhs)) {
                rep.pass = false;
                rep.failures.push_back("(sf) fails for degree " + std::to_string(da) +
                                       ", n = " + std::to_string(n));
            }
        }
    }
    return rep;
}

} // namespace thh
