#include "thh/differential.hpp"

namespace thh {

PageShift shift_for(Convention conv, int page)
{
    (void)conv; /* both conventions share the shift; the names track usage */
    return PageShift{-page, page - 1};
}

DifferentialSpec DifferentialSpec::rescaled(i64 unit) const
{
    DifferentialSpec out = *this;
    for (auto& a : out.assigns)
        a.unit = unit;
    for (auto& g : out.gamma_assigns)
        g.unit = unit;
    return out;
}

Derivation::Derivation(const Basis& basis, const DifferentialSpec& spec)
    : basis_(&basis), spec_(spec)
{
    const Presentation& pres = basis.pres();
    plain_.assign(pres.ngens(), -1);
    gamma_.assign(pres.ngens(), -1);
    for (size_t i = 0; i < spec_.assigns.size(); ++i) {
        const auto& a = spec_.assigns[i];
        if (a.gen < 0 || a.gen >= static_cast<int>(pres.ngens()))
            throw Error("DifferentialSpec: bad generator index");
        plain_[a.gen] = static_cast<int>(i);
    }
    for (size_t i = 0; i < spec_.gamma_assigns.size(); ++i) {
        const auto& g = spec_.gamma_assigns[i];
        if (g.gen < 0 || g.gen >= static_cast<int>(pres.ngens()))
            throw Error("DifferentialSpec: bad generator index");
        if (pres.generators()[g.gen].kind != GenKind::DividedPower)
            throw Error("DifferentialSpec: gamma pattern on non-divided generator");
        if (g.offset < 1)
            throw Error("DifferentialSpec: gamma pattern needs offset >= 1");
        gamma_[g.gen] = static_cast<int>(i);
    }
}

Element Derivation::apply(const Monomial& m) const
{
    const Presentation& pres = basis_->pres();
    const PrimeField& f = pres.field();
    Element out;
    int sign_prefix = 0; /* parity of total degree of the factors already passed */
    for (size_t i = 0; i < pres.ngens(); ++i) {
        int e = m.e[i];
        if (e == 0)
            continue;
        const Generator& g = pres.generators()[i];
        Element dfactor; /* d of the i-th atomic factor */
        if (gamma_[i] >= 0) {
            const auto& ga = spec_.gamma_assigns[gamma_[i]];
            if (e >= ga.offset) {
                Element rest = pres.gen_elt(static_cast<int>(i), e - ga.offset);
                dfactor = pres.mul_free(ga.w.scaled(f, ga.unit), rest);
            }
        }
        else if (plain_[i] >= 0) {
            const auto& a = spec_.assigns[plain_[i]];
            Element t = a.target.scaled(f, a.unit);
            switch (g.kind) {
            case GenKind::Exterior:
                dfactor = t;
                break;
            case GenKind::DividedPower:
                /* d(gamma_e(x)) = d(x) * gamma_{e-1}(x) */
                dfactor = pres.mul_free(t, pres.gen_elt(static_cast<int>(i), e - 1));
                break;
            case GenKind::Polynomial:
            case GenKind::Truncated:
                dfactor = pres.mul_free(t, pres.gen_elt(static_cast<int>(i), e - 1)).scaled(f, e);
                break;
            }
        }
        if (!dfactor.is_zero()) {
            /* m = before * factor * after; d contributes
             * (-1)^{|before|} before * dfactor * after */
            Monomial before = pres.unit(), after = pres.unit();
            for (size_t j = 0; j < i; ++j)
                before.e[j] = m.e[j];
            for (size_t j = i + 1; j < pres.ngens(); ++j)
                after.e[j] = m.e[j];
            Element before_e, after_e;
            before_e.add_term(f, before, sign_prefix % 2 == 0 ? 1 : f.neg(1));
            after_e.add_term(f, after, 1);
            out = out.plus(f, pres.mul_free(pres.mul_free(before_e, dfactor), after_e));
        }
        sign_prefix += e * (g.degree + g.filtration);
    }
    return basis_->reduce(out);
}

Element Derivation::apply(const Element& e) const
{
    const PrimeField& f = basis_->pres().field();
    Element out;
    for (const auto& [m, c] : e.terms())
        out = out.plus(f, apply(m).scaled(f, c));
    return out;
}

FpMatrix Derivation::slot_matrix(Bidegree source, const PageShift& shift) const
{
    const auto& src = basis_->slot(source);
    Bidegree tgt_deg = shift.apply(source);
    const auto& tgt = basis_->slot(tgt_deg);
    FpMatrix mat(static_cast<i64>(tgt.size()), static_cast<i64>(src.size()),
                 basis_->pres().field());
    for (size_t j = 0; j < src.size(); ++j) {
        Element d = apply(src[j]);
        for (const auto& [m, c] : d.terms()) {
            auto loc = basis_->locate(m);
            if (!loc)
                throw Error("Derivation: image monomial missing from basis");
            if (!(loc->first == tgt_deg))
                throw Error("Derivation: differential violates the bidegree shift");
            mat.at(loc->second, static_cast<i64>(j)) = c;
        }
    }
    return mat;
}

void Derivation::check_square_zero(const PageShift& shift) const
{
    (void)shift;
    for (const auto& [b, monos] : basis_->slots()) {
        (void)b;
        for (const Monomial& m : monos) {
            Element dd = apply(apply(m));
            if (!dd.is_zero())
                throw Error("Derivation: d(d(m)) != 0");
        }
    }
}

} // namespace thh
