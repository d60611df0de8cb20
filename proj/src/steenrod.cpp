#include "thh/steenrod.hpp"

#include <algorithm>

namespace thh {

void TensorElement::add_term(const PrimeField& f, const Monomial& a, const Monomial& m, i64 c)
{
    c = f.reduce(c);
    if (c == 0)
        return;
    Key k{a, m};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), c);
        return;
    }
    it->second = f.add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

TensorElement TensorElement::plus(const PrimeField& f, const TensorElement& o) const
{
    TensorElement r = *this;
    for (const auto& [k, c] : o.terms_)
        r.add_term(f, k.first, k.second, c);
    return r;
}

TensorElement TensorElement::scaled(const PrimeField& f, i64 c) const
{
    TensorElement r;
    for (const auto& [k, coef] : terms_)
        r.add_term(f, k.first, k.second, f.mul(f.reduce(c), coef));
    return r;
}

namespace {

int pow_int(int b, int e)
{
    int r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

DualSteenrod::DualSteenrod(i64 p, int D)
    : pres_([&]() -> std::shared_ptr<Presentation> {
          if (p < 3)
              throw Error("DualSteenrod: p must be an odd prime");
          std::vector<Generator> gens;
          /* τ̄_0, then ξ̄_n / τ̄_n in degree order while they fit */
          tau_index_.push_back(-1);
          xi_index_.push_back(-1); /* ξ̄_0 = 1 handled separately */
          if (D >= 1) {
              tau_index_[0] = static_cast<int>(gens.size());
              gens.push_back({"tb0", 1, 0, GenKind::Exterior, 0});
          }
          for (int n = 1;; ++n) {
              int dxi = 2 * pow_int(static_cast<int>(p), n) - 2;
              int dtau = dxi + 1;
              if (dxi > D)
                  break;
              xi_index_.push_back(static_cast<int>(gens.size()));
              gens.push_back({"xb" + std::to_string(n), dxi, 0, GenKind::Polynomial, 0});
              if (dtau <= D) {
                  tau_index_.push_back(static_cast<int>(gens.size()));
                  gens.push_back({"tb" + std::to_string(n), dtau, 0, GenKind::Exterior, 0});
              }
              else
                  tau_index_.push_back(-1);
          }
          return std::make_shared<Presentation>(PrimeField(p), std::move(gens));
      }()),
      basis_(*pres_, D)
{
    /* coproduct on generators, extended multiplicatively elsewhere */
    const PrimeField& f = pres_->field();
    gen_coproduct_.resize(pres_->ngens());
    Monomial one = pres_->unit();
    for (int n = 0; n < static_cast<int>(tau_index_.size()); ++n) {
        int g = tau_index_[n];
        if (g < 0)
            continue;
        TensorElement co;
        co.add_term(f, one, pres_->gen_mono(g), 1); /* 1 ⊗ τ̄_n */
        for (int i = 0; i + 0 <= n; ++i) {
            int j = n - i;
            int ti = tau_index_[i];
            if (ti < 0)
                continue;
            /* τ̄_i ⊗ ξ̄_j^{p^i} */
            co.add_term(f, pres_->gen_mono(ti), xi_power(j, pow_int(static_cast<int>(f.p()), i)), 1);
        }
        gen_coproduct_[g] = co;
    }
    for (int n = 1; n < static_cast<int>(xi_index_.size()); ++n) {
        int g = xi_index_[n];
        if (g < 0)
            continue;
        TensorElement co;
        for (int i = 0; i <= n; ++i) {
            int j = n - i;
            /* ξ̄_i ⊗ ξ̄_j^{p^i} */
            Monomial left = (i == 0) ? one : pres_->gen_mono(xi_index_[i]);
            if (i > 0 && xi_index_[i] < 0)
                continue;
            co.add_term(f, left, xi_power(j, pow_int(static_cast<int>(f.p()), i)), 1);
        }
        gen_coproduct_[g] = co;
    }
}

int DualSteenrod::xi(int n) const
{
    return (n >= 1 && n < static_cast<int>(xi_index_.size())) ? xi_index_[n] : -1;
}

int DualSteenrod::tau(int n) const
{
    return (n >= 0 && n < static_cast<int>(tau_index_.size())) ? tau_index_[n] : -1;
}

Monomial DualSteenrod::xi_power(int n, int e) const
{
    if (n == 0 || e == 0)
        return pres_->unit();
    int g = xi(n);
    if (g < 0)
        throw Error("DualSteenrod: ξ̄_" + std::to_string(n) + " above the bound");
    return pres_->gen_mono(g, e);
}

Element DualSteenrod::tau1_untwisted() const
{
    const PrimeField& f = pres_->field();
    if (tau(1) < 0 || xi(1) < 0 || tau(0) < 0)
        throw Error("DualSteenrod: τ_1 needs the bound to reach degree 2p-1");
    Element e;
    Monomial m = pres_->unit();
    m.e[xi(1)] = 1;
    m.e[tau(0)] = 1;
    e.add_term(f, m, 1);
    e.add_term(f, pres_->gen_mono(tau(1)), f.neg(1));
    return e;
}

Element DualSteenrod::mul(const Element& a, const Element& b) const
{
    return pres_->mul_free(a, b);
}

TensorElement DualSteenrod::tensor_mul(const TensorElement& a, const TensorElement& b) const
{
    const PrimeField& f = pres_->field();
    TensorElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int inner = pres_->total_degree(ka.second) * pres_->total_degree(kb.first);
            auto [c1, m1] = pres_->mul_free(ka.first, kb.first);
            if (c1 == 0)
                continue;
            auto [c2, m2] = pres_->mul_free(ka.second, kb.second);
            if (c2 == 0)
                continue;
            i64 c = f.mul(f.mul(ca, cb), f.mul(c1, c2));
            if (inner % 2 != 0)
                c = f.neg(c);
            out.add_term(f, m1, m2, c);
        }
    return out;
}

TensorElement DualSteenrod::coproduct(const Monomial& m) const
{
    const PrimeField& f = pres_->field();
    TensorElement out;
    out.add_term(f, pres_->unit(), pres_->unit(), 1);
    for (size_t i = 0; i < pres_->ngens(); ++i)
        for (int e = 0; e < m.e[i]; ++e)
            out = tensor_mul(out, gen_coproduct_[i]);
    return out;
}

Comodule::Comodule(std::shared_ptr<const DualSteenrod> steenrod,
                   std::shared_ptr<const Presentation> underlying, int D,
                   std::vector<TensorElement> generator_coactions)
    : steenrod_(std::move(steenrod)), underlying_(std::move(underlying)),
      basis_(*underlying_, D), gen_coactions_(std::move(generator_coactions))
{
    if (gen_coactions_.size() != underlying_->ngens())
        throw Error("Comodule: one coaction per generator required");
    if (underlying_->field() != steenrod_->pres().field())
        throw Error("Comodule: field mismatch");
    const PrimeField& f = underlying_->field();
    for (size_t i = 0; i < underlying_->ngens(); ++i) {
        const Generator& g = underlying_->generators()[i];
        /* counit part must be exactly 1 ⊗ g */
        TensorElement expected;
        expected.add_term(f, steenrod_->pres().unit(), underlying_->gen_mono(static_cast<int>(i)), 1);
        bool found_unit_part = false;
        for (const auto& [k, c] : gen_coactions_[i].terms()) {
            int adeg = steenrod_->pres().total_degree(k.first);
            int mdeg = underlying_->total_degree(k.second);
            if (adeg + mdeg != g.degree + g.filtration)
                throw Error("Comodule: coaction of '" + g.name + "' is not homogeneous");
            if (adeg == 0) {
                if (!(k.second == underlying_->gen_mono(static_cast<int>(i))) || c != 1)
                    throw Error("Comodule: counit fails on '" + g.name + "'");
                found_unit_part = true;
            }
        }
        if (!found_unit_part)
            throw Error("Comodule: coaction of '" + g.name + "' lacks its 1 ⊗ g part");
        if (g.kind == GenKind::DividedPower && gen_coactions_[i].terms().size() != 1)
            throw Error("Comodule: divided-power generator '" + g.name + "' must be primitive");
    }
}

TensorElement Comodule::mixed_mul(const TensorElement& a, const TensorElement& b) const
{
    const PrimeField& f = underlying_->field();
    const Presentation& A = steenrod_->pres();
    TensorElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int inner = underlying_->total_degree(ka.second) * A.total_degree(kb.first);
            auto [c1, m1] = A.mul_free(ka.first, kb.first);
            if (c1 == 0)
                continue;
            auto [c2, m2] = underlying_->mul_free(ka.second, kb.second);
            if (c2 == 0)
                continue;
            i64 c = f.mul(f.mul(ca, cb), f.mul(c1, c2));
            if (inner % 2 != 0)
                c = f.neg(c);
            out.add_term(f, m1, m2, c);
        }
    return out;
}

TensorElement Comodule::coaction(const Monomial& m) const
{
    auto it = memo_.find(m);
    if (it != memo_.end())
        return it->second;
    const PrimeField& f = underlying_->field();
    TensorElement out;
    out.add_term(f, steenrod_->pres().unit(), underlying_->unit(), 1);
    for (size_t i = 0; i < underlying_->ngens(); ++i) {
        if (m.e[i] == 0)
            continue;
        if (underlying_->generators()[i].kind == GenKind::DividedPower) {
            /* primitive generator: γ_e(g) is primitive as well */
            TensorElement gamma;
            gamma.add_term(f, steenrod_->pres().unit(),
                           underlying_->gen_mono(static_cast<int>(i), m.e[i]), 1);
            out = mixed_mul(out, gamma);
        }
        else {
            for (int e = 0; e < m.e[i]; ++e)
                out = mixed_mul(out, gen_coactions_[i]);
        }
    }
    memo_.emplace(m, out);
    return out;
}

std::vector<Vec> Comodule::primitives(int n) const
{
    if (n > bound())
        throw Error("Comodule::primitives: coaction data truncated below degree " +
                    std::to_string(n));
    const PrimeField& f = underlying_->field();
    /* collect the slice across filtrations (comodules here are singly graded) */
    std::vector<Monomial> slice;
    for (const auto& [b, monos] : basis_.slots())
        if (b.total() == n)
            slice.insert(slice.end(), monos.begin(), monos.end());
    if (slice.empty())
        return {};
    /* rows: coordinates of ν(m) - 1 ⊗ m over the (A-mono, M-mono) pairs */
    std::map<TensorElement::Key, int> keyindex;
    std::vector<std::map<TensorElement::Key, i64>> rows;
    for (const auto& m : slice) {
        TensorElement nu = coaction(m);
        std::map<TensorElement::Key, i64> row;
        for (const auto& [k, c] : nu.terms()) {
            if (steenrod_->pres().total_degree(k.first) == 0)
                continue; /* the 1 ⊗ m part cancels for primitives */
            row[k] = c;
            if (!keyindex.count(k))
                keyindex.emplace(k, static_cast<int>(keyindex.size()));
        }
        rows.push_back(std::move(row));
    }
    FpMatrix mat(static_cast<i64>(keyindex.size()), static_cast<i64>(slice.size()), f);
    for (size_t j = 0; j < rows.size(); ++j)
        for (const auto& [k, c] : rows[j])
            mat.at(keyindex.at(k), static_cast<i64>(j)) = c;
    return rank_and_kernel(mat).kernel;
}

i64 Comodule::primitive_dim(int n) const
{
    return static_cast<i64>(primitives(n).size());
}

bool Comodule::check_counit(int D, std::string* err) const
{
    for (const auto& [b, monos] : basis_.slots()) {
        if (b.total() > D)
            continue;
        for (const auto& m : monos) {
            TensorElement nu = coaction(m);
            /* A-degree-0 part must be exactly 1 ⊗ m */
            for (const auto& [k, c] : nu.terms()) {
                if (steenrod_->pres().total_degree(k.first) != 0)
                    continue;
                if (!(k.second == m) || c != 1) {
                    if (err)
                        *err = "counit fails in degree " + std::to_string(b.total());
                    return false;
                }
            }
            bool has = false;
            for (const auto& [k, c] : nu.terms())
                if (steenrod_->pres().total_degree(k.first) == 0 && k.second == m && c == 1)
                    has = true;
            if (!has) {
                if (err)
                    *err = "counit misses 1 ⊗ m in degree " + std::to_string(b.total());
                return false;
            }
        }
    }
    return true;
}

bool Comodule::check_coassoc(int D, std::string* err) const
{
    const PrimeField& f = underlying_->field();
    /* triple tensors keyed by (A-mono, A-mono, M-mono) */
    using Key3 = std::pair<Monomial, TensorElement::Key>;
    for (const auto& [b, monos] : basis_.slots()) {
        if (b.total() > D)
            continue;
        for (const auto& m : monos) {
            TensorElement nu = coaction(m);
            std::map<Key3, i64> lhs, rhs;
            auto add3 = [&](std::map<Key3, i64>& acc, const Monomial& a1, const Monomial& a2,
                            const Monomial& mm, i64 c) {
                c = f.reduce(c);
                if (c == 0)
                    return;
                Key3 k{a1, {a2, mm}};
                auto it = acc.find(k);
                if (it == acc.end())
                    acc.emplace(std::move(k), c);
                else {
                    it->second = f.add(it->second, c);
                    if (it->second == 0)
                        acc.erase(it);
                }
            };
            /* (Δ ⊗ id) ν */
            for (const auto& [k, c] : nu.terms()) {
                TensorElement delta = steenrod_->coproduct(k.first);
                for (const auto& [dk, dc] : delta.terms())
                    add3(lhs, dk.first, dk.second, k.second, f.mul(c, dc));
            }
            /* (id ⊗ ν) ν */
            for (const auto& [k, c] : nu.terms()) {
                TensorElement inner = coaction(k.second);
                for (const auto& [ik, ic] : inner.terms()) {
                    /* no sign: the A-factor moves past nothing (it stays left) */
                    add3(rhs, k.first, ik.first, ik.second, f.mul(c, ic));
                }
            }
            if (lhs != rhs) {
                if (err)
                    *err = "coassociativity fails in degree " + std::to_string(b.total());
                return false;
            }
        }
    }
    return true;
}

std::shared_ptr<const DualSteenrod> build_dual_steenrod(i64 p, int D)
{
    return std::make_shared<DualSteenrod>(p, D);
}

Comodule dual_steenrod_self_comodule(std::shared_ptr<const DualSteenrod> A)
{
    auto pres = std::make_shared<Presentation>(A->pres());
    std::vector<TensorElement> coactions;
    for (size_t i = 0; i < pres->ngens(); ++i) {
        /* the self-coaction is the coproduct; re-express over the copy */
        TensorElement co = A->coproduct(A->pres().gen_mono(static_cast<int>(i)));
        coactions.push_back(co);
    }
    int D = A->bound();
    return Comodule(A, pres, D, std::move(coactions));
}

Comodule homology_of_K_comodule(const CaseParams& params, i64 a, int D)
{
    const PrimeField f(params.p);
    a = f.reduce(a);
    const int p = static_cast<int>(params.p);
    auto A = build_dual_steenrod(params.p, D);
    const Presentation& Ap = A->pres();
    Monomial one = Ap.unit();

    if (params.case_id == 4)
        throw Error("homology_of_K_comodule: case (4) homology is only known through 2p; "
                    "use the truncated builder in the scenarios layer");

    std::vector<Generator> gens;
    std::vector<TensorElement> co;

    auto primitive = [&](int gi, const std::vector<Generator>& gl) {
        TensorElement t;
        Monomial m{std::vector<int>(gl.size(), 0)};
        m.e[gi] = 1;
        t.add_term(f, one, m, 1);
        return t;
    };

    if (params.case_id == 1) {
        /* E(b) ⊗ P(ξ̃_1^p, ξ̃_2, ...) ⊗ E(τ̃_2, ...) */
        gens.push_back({"b", p * (2 * p - 2) - 1, 0, GenKind::Exterior, 0});
        int idx_xi1p = -1, idx_b = 0;
        if (p * (2 * p - 2) <= D) {
            idx_xi1p = static_cast<int>(gens.size());
            gens.push_back({"xi1p", p * (2 * p - 2), 0, GenKind::Polynomial, 0});
        }
        std::vector<int> idx_xi(2, -1), idx_tau(2, -1);
        for (int n = 2;; ++n) {
            int dxi = 2 * pow_int(p, n) - 2;
            if (dxi > D)
                break;
            idx_xi.push_back(static_cast<int>(gens.size()));
            gens.push_back({"xi" + std::to_string(n), dxi, 0, GenKind::Polynomial, 0});
            if (dxi + 1 <= D) {
                idx_tau.push_back(static_cast<int>(gens.size()));
                gens.push_back({"tau" + std::to_string(n), dxi + 1, 0, GenKind::Exterior, 0});
            }
            else
                idx_tau.push_back(-1);
        }
        auto pres = std::make_shared<Presentation>(f, gens);
        auto mono = [&](int gi, int e = 1) { return pres->gen_mono(gi, e); };
        co.assign(gens.size(), TensorElement{});
        co[idx_b] = primitive(idx_b, gens); /* b is a comodule primitive */
        if (idx_xi1p >= 0) {
            TensorElement t;
            t.add_term(f, one, mono(idx_xi1p), 1);
            t.add_term(f, A->xi_power(1, p), pres->unit(), 1);
            if (a != 0)
                t.add_term(f, Ap.gen_mono(A->tau(0)), mono(idx_b), a);
            co[idx_xi1p] = t;
        }
        for (size_t n = 2; n < idx_xi.size(); ++n) {
            if (idx_xi[n] >= 0) {
                TensorElement t;
                t.add_term(f, one, mono(idx_xi[n]), 1);
                /* Σ_{i+j=n, 0<i<n} ξ̄_i ⊗ ξ̃_j^{p^i}, with ξ̃_1^{p^i} = (ξ̃_1^p)^{p^{i-1}} */
                for (int i = 1; i < static_cast<int>(n); ++i) {
                    int j = static_cast<int>(n) - i;
                    Monomial right;
                    if (j == 1) {
                        if (idx_xi1p < 0)
                            continue;
                        right = mono(idx_xi1p, pow_int(p, i - 1));
                    }
                    else {
                        if (idx_xi[j] < 0)
                            continue;
                        right = mono(idx_xi[j], pow_int(p, i));
                    }
                    t.add_term(f, Ap.gen_mono(A->xi(i)), right, 1);
                }
                t.add_term(f, Ap.gen_mono(A->xi(static_cast<int>(n))), pres->unit(), 1);
                if (n == 2 && a != 0) {
                    for (Element tau1 = A->tau1_untwisted(); const auto& [tm, tc] : tau1.terms())
                        t.add_term(f, tm, mono(idx_b), f.mul(tc, a));
                }
                co[idx_xi[n]] = t;
            }
            if (idx_tau[n] >= 0) {
                TensorElement t;
                t.add_term(f, one, mono(idx_tau[n]), 1);
                for (int i = 0; i <= static_cast<int>(n); ++i) {
                    int j = static_cast<int>(n) - i;
                    Monomial right;
                    if (j == 0)
                        right = pres->unit();
                    else if (j == 1) {
                        if (idx_xi1p < 0)
                            continue;
                        right = mono(idx_xi1p, pow_int(p, i - 1));
                    }
                    else {
                        if (idx_xi[j] < 0)
                            continue;
                        right = mono(idx_xi[j], pow_int(p, i));
                    }
                    if (A->tau(i) < 0)
                        continue;
                    t.add_term(f, Ap.gen_mono(A->tau(i)), right, 1);
                }
                if (n == 2 && a != 0) {
                    /* companion term forced by coassociativity: -a τ̄_0 τ̄_1 ⊗ b */
                    Monomial tt = one;
                    tt.e[A->tau(0)] = 1;
                    tt.e[A->tau(1)] = 1;
                    t.add_term(f, tt, mono(idx_b), f.neg(a));
                }
                co[idx_tau[n]] = t;
            }
        }
        return Comodule(A, pres, D, std::move(co));
    }

    /* cases (2) and (3): E(x) ⊗ P_k(y) ⊗ P(ξ̃_1, ...) ⊗ E(τ̃_2, ...) */
    gens.push_back({"x", 2 * params.r - 1, 0, GenKind::Exterior, 0});
    int idx_x = 0, idx_y = -1;
    if (params.k >= 2) {
        idx_y = static_cast<int>(gens.size());
        gens.push_back({"y", 2 * params.r, 0, GenKind::Truncated, params.k});
    }
    std::vector<int> idx_xi(1, -1), idx_tau(2, -1);
    for (int n = 1;; ++n) {
        int dxi = 2 * pow_int(p, n) - 2;
        if (dxi > D)
            break;
        idx_xi.push_back(static_cast<int>(gens.size()));
        gens.push_back({"xi" + std::to_string(n), dxi, 0, GenKind::Polynomial, 0});
        if (n >= 2) {
            if (dxi + 1 <= D) {
                idx_tau.push_back(static_cast<int>(gens.size()));
                gens.push_back({"tau" + std::to_string(n), dxi + 1, 0, GenKind::Exterior, 0});
            }
            else
                idx_tau.push_back(-1);
        }
    }
    auto pres = std::make_shared<Presentation>(f, gens);
    auto mono = [&](int gi, int e = 1) { return pres->gen_mono(gi, e); };
    co.assign(gens.size(), TensorElement{});
    co[idx_x] = primitive(idx_x, gens);
    if (idx_y >= 0)
        co[idx_y] = primitive(idx_y, gens);
    /* x y^{k-1}, the target of the a-term */
    Monomial xyk = pres->unit();
    xyk.e[idx_x] = 1;
    if (idx_y >= 0)
        xyk.e[idx_y] = params.k - 1;
    for (size_t n = 1; n < idx_xi.size(); ++n) {
        if (idx_xi[n] < 0)
            continue;
        TensorElement t;
        t.add_term(f, one, mono(idx_xi[n]), 1);
        for (int i = 1; i < static_cast<int>(n); ++i) {
            int j = static_cast<int>(n) - i;
            if (idx_xi[j] < 0)
                continue;
            t.add_term(f, Ap.gen_mono(A->xi(i)), mono(idx_xi[j], pow_int(p, i)), 1);
        }
        t.add_term(f, Ap.gen_mono(A->xi(static_cast<int>(n))), pres->unit(), 1);
        if (n == 1 && a != 0)
            t.add_term(f, Ap.gen_mono(A->tau(0)), xyk, a);
        co[idx_xi[n]] = t;
    }
    for (size_t n = 2; n < idx_tau.size(); ++n) {
        if (idx_tau[n] < 0)
            continue;
        TensorElement t;
        t.add_term(f, one, mono(idx_tau[n]), 1);
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            int j = static_cast<int>(n) - i;
            if (A->tau(i) < 0)
                continue;
            Monomial right = (j == 0) ? pres->unit()
                                      : (idx_xi[j] >= 0 ? mono(idx_xi[j], pow_int(p, i))
                                                        : Monomial{});
            if (j > 0 && idx_xi[j] < 0)
                continue;
            t.add_term(f, Ap.gen_mono(A->tau(i)), right, 1);
        }
        co[idx_tau[n]] = t;
    }
    return Comodule(A, pres, D, std::move(co));
}

Comodule v1_thh_comodule(i64 p, i64 a, int D)
{
    const PrimeField f(p);
    a = f.reduce(a);
    const int pi = static_cast<int>(p);
    auto A = build_dual_steenrod(p, D);
    const Presentation& Ap = A->pres();
    Monomial one = Ap.unit();

    struct GenSpec {
        const char* name;
        int degree;
        GenKind kind;
    };
    const int db = pi * (2 * pi - 2) - 1;
    std::vector<GenSpec> all = {
        {"e0", 1, GenKind::Exterior},
        {"e1", 2 * pi - 1, GenKind::Exterior},
        {"b", db, GenKind::Exterior},
        {"xi1p", db + 1, GenKind::Polynomial},
        {"xi2", 2 * pi * pi - 2, GenKind::Polynomial},
        {"tau2", 2 * pi * pi - 1, GenKind::Exterior},
        {"sb", db + 1, GenKind::DividedPower},
        {"sxi1p", db + 2, GenKind::Exterior},
        {"sxi2", 2 * pi * pi - 1, GenKind::Exterior},
        {"stau2", 2 * pi * pi, GenKind::Polynomial},
    };
    std::vector<Generator> gens;
    std::map<std::string, int> idx;
    for (const auto& g : all) {
        if (g.degree > D)
            continue;
        idx[g.name] = static_cast<int>(gens.size());
        gens.push_back({g.name, g.degree, 0, g.kind, 0});
    }
    auto pres = std::make_shared<Presentation>(f, gens);
    auto has = [&](const char* n) { return idx.count(n) > 0; };
    auto mono = [&](const char* n, int e = 1) { return pres->gen_mono(idx.at(n), e); };

    std::vector<TensorElement> co(gens.size());
    auto set = [&](const char* n, TensorElement t) {
        if (has(n))
            co[static_cast<size_t>(idx.at(n))] = std::move(t);
    };
    auto unit_part = [&](const char* n) {
        TensorElement t;
        t.add_term(f, one, mono(n), 1);
        return t;
    };

    if (has("e0")) {
        TensorElement t = unit_part("e0");
        t.add_term(f, Ap.gen_mono(A->tau(0)), pres->unit(), 1);
        set("e0", t);
    }
    if (has("e1")) {
        TensorElement t = unit_part("e1");
        t.add_term(f, Ap.gen_mono(A->xi(1)), mono("e0"), 1);
        for (Element tau1 = A->tau1_untwisted(); const auto& [tm, tc] : tau1.terms())
            t.add_term(f, tm, pres->unit(), tc);
        set("e1", t);
    }
    if (has("b"))
        set("b", unit_part("b"));
    if (has("sb"))
        set("sb", unit_part("sb"));
    if (has("xi1p")) {
        TensorElement t = unit_part("xi1p");
        t.add_term(f, A->xi_power(1, pi), pres->unit(), 1);
        if (a != 0 && has("b"))
            t.add_term(f, Ap.gen_mono(A->tau(0)), mono("b"), a);
        set("xi1p", t);
    }
    if (has("xi2")) {
        TensorElement t = unit_part("xi2");
        t.add_term(f, Ap.gen_mono(A->xi(1)), mono("xi1p"), 1);
        t.add_term(f, Ap.gen_mono(A->xi(2)), pres->unit(), 1);
        if (a != 0 && has("b"))
            for (Element tau1 = A->tau1_untwisted(); const auto& [tm, tc] : tau1.terms())
                t.add_term(f, tm, mono("b"), f.mul(tc, a));
        set("xi2", t);
    }
    if (has("tau2")) {
        TensorElement t = unit_part("tau2");
        t.add_term(f, Ap.gen_mono(A->tau(0)), mono("xi2"), 1);
        t.add_term(f, Ap.gen_mono(A->tau(1)), mono("xi1p"), 1);
        t.add_term(f, Ap.gen_mono(A->tau(2)), pres->unit(), 1);
        if (a != 0 && has("b")) {
            Monomial tt = one;
            tt.e[A->tau(0)] = 1;
            tt.e[A->tau(1)] = 1;
            t.add_term(f, tt, mono("b"), f.neg(a));
        }
        set("tau2", t);
    }
    if (has("sxi1p")) {
        TensorElement t = unit_part("sxi1p");
        if (a != 0 && has("sb"))
            t.add_term(f, Ap.gen_mono(A->tau(0)), mono("sb"), a);
        set("sxi1p", t);
    }
    if (has("sxi2")) {
        TensorElement t = unit_part("sxi2");
        t.add_term(f, Ap.gen_mono(A->xi(1)), mono("sxi1p"), 1);
        if (a != 0 && has("sb"))
            for (Element tau1 = A->tau1_untwisted(); const auto& [tm, tc] : tau1.terms())
                t.add_term(f, tm, mono("sb"), f.mul(tc, a));
        set("sxi2", t);
    }
    if (has("stau2")) {
        TensorElement t = unit_part("stau2");
        t.add_term(f, Ap.gen_mono(A->tau(0)), mono("sxi2"), 1);
        t.add_term(f, Ap.gen_mono(A->tau(1)), mono("sxi1p"), 1);
        if (a != 0 && has("sb")) {
            Monomial tt = one;
            tt.e[A->tau(0)] = 1;
            tt.e[A->tau(1)] = 1;
            t.add_term(f, tt, mono("sb"), f.neg(a));
        }
        set("stau2", t);
    }
    return Comodule(A, pres, D, std::move(co));
}

} // namespace thh
