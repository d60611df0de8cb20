#include "thh/graded.hpp"

#include <algorithm>
#include <functional>

namespace thh {

std::string kind_name(GenKind k)
{
    switch (k) {
    case GenKind::Polynomial: return "polynomial";
    case GenKind::Exterior: return "exterior";
    case GenKind::DividedPower: return "divided";
    case GenKind::Truncated: return "truncated";
    }
    throw Error("kind_name: bad kind");
}

GenKind kind_from_name(const std::string& s)
{
    if (s == "polynomial") return GenKind::Polynomial;
    if (s == "exterior") return GenKind::Exterior;
    if (s == "divided") return GenKind::DividedPower;
    if (s == "truncated") return GenKind::Truncated;
    throw Error("kind_from_name: unknown kind '" + s + "'");
}

void Element::add_term(const PrimeField& f, const Monomial& m, i64 c)
{
    c = f.reduce(c);
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = f.add(it->second, c);
    if (it->second == 0)
        terms_.erase(it);
}

Element Element::plus(const PrimeField& f, const Element& o) const
{
    Element r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(f, m, c);
    return r;
}

Element Element::scaled(const PrimeField& f, i64 c) const
{
    Element r;
    for (const auto& [m, coef] : terms_)
        r.add_term(f, m, f.mul(f.reduce(c), coef));
    return r;
}

Presentation::Presentation(PrimeField field, std::vector<Generator> gens,
                           std::vector<Element> relations)
    : field_(field), gens_(std::move(gens)), relations_(std::move(relations))
{
    for (size_t i = 0; i < gens_.size(); ++i) {
        const Generator& g = gens_[i];
        if (g.degree < 0 || g.filtration < 0 || g.degree + g.filtration <= 0)
            throw Error("Presentation: generator '" + g.name + "' needs positive total degree");
        if (g.kind == GenKind::Truncated && g.height < 2)
            throw Error("Presentation: truncated generator '" + g.name + "' needs height >= 2");
        int total = g.degree + g.filtration;
        if (field_.p() != 2) {
            if (total % 2 != 0 && g.kind != GenKind::Exterior)
                throw Error("Presentation: odd-degree generator '" + g.name + "' must be exterior");
            if (total % 2 == 0 && g.kind == GenKind::Exterior)
                throw Error("Presentation: exterior generator '" + g.name + "' must have odd degree");
        }
        for (size_t j = 0; j < i; ++j)
            if (gens_[j].name == g.name)
                throw Error("Presentation: duplicate generator name '" + g.name + "'");
    }
    for (const Element& rel : relations_) {
        if (rel.is_zero())
            throw Error("Presentation: zero relation");
        Bidegree b = bidegree(rel.terms().begin()->first);
        for (const auto& [m, c] : rel.terms()) {
            (void)c;
            if (!(bidegree(m) == b))
                throw Error("Presentation: inhomogeneous relation");
            if (!admissible(m))
                throw Error("Presentation: inadmissible monomial in relation");
        }
    }
}

int Presentation::gen_index(const std::string& name) const
{
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<int>(i);
    throw Error("Presentation: no generator named '" + name + "'");
}

Monomial Presentation::gen_mono(int i, int exp) const
{
    Monomial m = unit();
    m.e[i] = exp;
    return m;
}

Element Presentation::gen_elt(int i, int exp) const
{
    Element e;
    e.add_term(field_, gen_mono(i, exp), 1);
    return e;
}

Element Presentation::unit_elt() const
{
    Element e;
    e.add_term(field_, unit(), 1);
    return e;
}

int Presentation::internal_degree(const Monomial& m) const
{
    int d = 0;
    for (size_t i = 0; i < gens_.size(); ++i)
        d += m.e[i] * gens_[i].degree;
    return d;
}

int Presentation::filtration_of(const Monomial& m) const
{
    int d = 0;
    for (size_t i = 0; i < gens_.size(); ++i)
        d += m.e[i] * gens_[i].filtration;
    return d;
}

Bidegree Presentation::bidegree(const Monomial& m) const
{
    return Bidegree{filtration_of(m), internal_degree(m)};
}

int Presentation::total_degree(const Monomial& m) const
{
    return internal_degree(m) + filtration_of(m);
}

bool Presentation::admissible(const Monomial& m) const
{
    if (m.e.size() != gens_.size())
        return false;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (m.e[i] < 0)
            return false;
        if (gens_[i].kind == GenKind::Exterior && m.e[i] > 1)
            return false;
        if (gens_[i].kind == GenKind::Truncated && m.e[i] >= gens_[i].height)
            return false;
    }
    return true;
}

std::pair<i64, Monomial> Presentation::mul_free(const Monomial& a, const Monomial& b) const
{
    if (!admissible(a) || !admissible(b))
        throw Error("mul_free: inadmissible monomial");
    i64 coef = 1;
    Monomial out = unit();
    /* Koszul sign: each odd factor of b moves past the odd factors of a that
     * sit to its right in declaration order. */
    int sign_exp = 0;
    int odd_a_after = 0;
    for (size_t i = gens_.size(); i-- > 0;) {
        if (odd(static_cast<int>(i)) && b.e[i] > 0)
            sign_exp += odd_a_after * b.e[i];
        if (odd(static_cast<int>(i)) && a.e[i] > 0)
            odd_a_after += a.e[i];
    }
    if (sign_exp % 2 != 0)
        coef = field_.neg(coef);
    for (size_t i = 0; i < gens_.size(); ++i) {
        int ea = a.e[i], eb = b.e[i];
        int s = ea + eb;
        switch (gens_[i].kind) {
        case GenKind::Exterior:
            if (s > 1)
                return {0, unit()};
            break;
        case GenKind::Truncated:
            if (s >= gens_[i].height)
                return {0, unit()};
            break;
        case GenKind::DividedPower: {
            i64 c = lucas_binomial(s, ea, field_);
            if (c == 0 && ea + eb > 0 && (ea > 0 || eb > 0)) {
                if (c == 0)
                    return {0, unit()};
            }
            coef = field_.mul(coef, c);
            break;
        }
        case GenKind::Polynomial:
            break;
        }
        out.e[i] = s;
    }
    if (coef == 0)
        return {0, unit()};
    return {coef, out};
}

Element Presentation::mul_free(const Element& a, const Element& b) const
{
    Element out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto [c, m] = mul_free(ma, mb);
            if (c != 0)
                out.add_term(field_, m, field_.mul(c, field_.mul(ca, cb)));
        }
    return out;
}

Basis::Basis(const Presentation& pres, int max_total_degree)
    : pres_(&pres), max_degree_(max_total_degree)
{
    if (max_total_degree < 0)
        throw Error("Basis: negative degree bound");
    const auto& gens = pres.generators();
    /* enumerate admissible free monomials of total degree <= bound */
    std::vector<Monomial> all;
    Monomial cur = pres.unit();
    std::function<void(size_t, int)> rec = [&](size_t i, int deg_left) {
        if (i == gens.size()) {
            all.push_back(cur);
            return;
        }
        int unit_deg = gens[i].degree + gens[i].filtration;
        int cap = deg_left / unit_deg;
        if (gens[i].kind == GenKind::Exterior)
            cap = std::min(cap, 1);
        if (gens[i].kind == GenKind::Truncated)
            cap = std::min(cap, gens[i].height - 1);
        for (int e = 0; e <= cap; ++e) {
            cur.e[i] = e;
            rec(i + 1, deg_left - e * unit_deg);
        }
        cur.e[i] = 0;
    };
    rec(0, max_total_degree);

    std::map<Bidegree, std::vector<Monomial>> free_slots;
    for (const auto& m : all)
        free_slots[pres.bidegree(m)].push_back(m);
    for (auto& [b, v] : free_slots)
        std::sort(v.begin(), v.end());

    if (!pres.has_relations()) {
        slots_ = std::move(free_slots);
    }
    else {
        /* ideal slice per slot: span of m*rel over the free basis */
        for (auto& [b, free] : free_slots) {
            IdealSlice slice{free, {}, RowSpace(pres.field(), static_cast<i64>(free.size()))};
            for (size_t i = 0; i < free.size(); ++i)
                slice.free_index[free[i]] = static_cast<int>(i);
            for (const Element& rel : pres.relations()) {
                Bidegree rb = pres.bidegree(rel.terms().begin()->first);
                Bidegree need{b.filt - rb.filt, b.internal - rb.internal};
                if (need.filt < 0 || need.internal < 0)
                    continue;
                auto fit = free_slots.find(need);
                if (fit == free_slots.end())
                    continue;
                for (const Monomial& m : fit->second) {
                    Element prod;
                    for (const auto& [rm, rc] : rel.terms()) {
                        auto [c, pm] = pres.mul_free(m, rm);
                        if (c != 0)
                            prod.add_term(pres.field(), pm, pres.field().mul(c, rc));
                    }
                    if (prod.is_zero())
                        continue;
                    Vec row(free.size(), 0);
                    for (const auto& [pm, pc] : prod.terms())
                        row[slice.free_index.at(pm)] = pc;
                    slice.span.insert(std::move(row));
                }
            }
            std::vector<Monomial> quotient;
            std::vector<bool> is_pivot(free.size(), false);
            for (i64 piv : slice.span.pivots())
                is_pivot[static_cast<size_t>(piv)] = true;
            for (size_t i = 0; i < free.size(); ++i)
                if (!is_pivot[i])
                    quotient.push_back(free[i]);
            ideal_.emplace(b, std::move(slice));
            if (!quotient.empty())
                slots_[b] = std::move(quotient);
        }
    }

    for (auto& [b, v] : slots_)
        for (size_t i = 0; i < v.size(); ++i)
            index_[v[i]] = {b, static_cast<int>(i)};
}

const std::vector<Monomial>& Basis::slot(Bidegree b) const
{
    auto it = slots_.find(b);
    return it == slots_.end() ? empty_ : it->second;
}

std::optional<std::pair<Bidegree, int>> Basis::locate(const Monomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

i64 Basis::dim(Bidegree b) const
{
    return static_cast<i64>(slot(b).size());
}

std::map<Bidegree, i64> Basis::bigraded_dims() const
{
    std::map<Bidegree, i64> out;
    for (const auto& [b, v] : slots_)
        out[b] = static_cast<i64>(v.size());
    return out;
}

PoincareSeries Basis::poincare() const
{
    PoincareSeries s;
    s.dims.assign(static_cast<size_t>(max_degree_) + 1, 0);
    for (const auto& [b, v] : slots_)
        s.dims[static_cast<size_t>(b.total())] += static_cast<i64>(v.size());
    return s;
}

Element Basis::reduce(Element free_elt) const
{
    const PrimeField& f = pres_->field();
    Element out;
    /* group terms by slot, drop anything above the bound */
    std::map<Bidegree, Element> by_slot;
    for (const auto& [m, c] : free_elt.terms()) {
        Bidegree b = pres_->bidegree(m);
        if (b.total() > max_degree_)
            continue;
        by_slot[b].add_term(f, m, c);
    }
    for (auto& [b, part] : by_slot) {
        auto it = ideal_.find(b);
        if (it == ideal_.end()) {
            /* no relations in this slot */
            out = out.plus(f, part);
            continue;
        }
        const IdealSlice& slice = it->second;
        Vec v(slice.free_monos.size(), 0);
        for (const auto& [m, c] : part.terms())
            v[slice.free_index.at(m)] = c;
        v = slice.span.residue(std::move(v));
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                out.add_term(f, slice.free_monos[i], v[i]);
    }
    return out;
}

Element Basis::mul(const Element& a, const Element& b) const
{
    return reduce(pres_->mul_free(a, b));
}

Vec Basis::coords(const Element& reduced, Bidegree b) const
{
    const auto& monos = slot(b);
    Vec v(monos.size(), 0);
    for (const auto& [m, c] : reduced.terms()) {
        auto loc = locate(m);
        if (!loc || !(loc->first == b))
            throw Error("Basis::coords: element not in the requested slot");
        v[static_cast<size_t>(loc->second)] = c;
    }
    return v;
}

Element Basis::from_coords(const Vec& v, Bidegree b) const
{
    const auto& monos = slot(b);
    if (v.size() != monos.size())
        throw Error("Basis::from_coords: size mismatch");
    Element e;
    for (size_t i = 0; i < v.size(); ++i)
        e.add_term(pres_->field(), monos[i], v[i]);
    return e;
}

PoincareSeries poincare(const Presentation& pres, int D)
{
    return Basis(pres, D).poincare();
}

PoincareSeries poincare_product_oracle(const Presentation& pres, int D)
{
    if (pres.has_relations())
        throw Error("poincare_product_oracle: relations not supported");
    PoincareSeries acc;
    acc.dims.assign(static_cast<size_t>(D) + 1, 0);
    acc.dims[0] = 1;
    for (const Generator& g : pres.generators()) {
        PoincareSeries piece;
        piece.dims.assign(static_cast<size_t>(D) + 1, 0);
        int unit_deg = g.degree + g.filtration;
        int cap;
        switch (g.kind) {
        case GenKind::Exterior: cap = 1; break;
        case GenKind::Truncated: cap = g.height - 1; break;
        default: cap = D / unit_deg; break;
        }
        for (int e = 0; e <= cap && e * unit_deg <= D; ++e)
            piece.dims[static_cast<size_t>(e * unit_deg)] += 1;
        acc = convolve(acc, piece, D);
    }
    return acc;
}

PoincareSeries convolve(const PoincareSeries& a, const PoincareSeries& b, int D)
{
    PoincareSeries out;
    out.dims.assign(static_cast<size_t>(D) + 1, 0);
    for (int i = 0; i <= D; ++i) {
        if (a.at(i) == 0)
            continue;
        for (int j = 0; i + j <= D; ++j)
            out.dims[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return out;
}

} // namespace thh
