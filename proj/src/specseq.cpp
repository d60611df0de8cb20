#include "thh/specseq.hpp"

#include <algorithm>

namespace thh {

PageState::PageState(const Presentation& e2, int max_total_degree, Convention conv,
                     int page_number)
    : pres_(std::make_shared<Presentation>(e2)), basis_(*pres_, max_total_degree), conv_(conv),
      page_(page_number)
{
    for (const auto& [b, monos] : basis_.slots()) {
        Slot s;
        const i64 n = static_cast<i64>(monos.size());
        for (i64 i = 0; i < n; ++i) {
            Vec v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(i)] = 1;
            s.cycles.push_back(std::move(v));
        }
        rebuild_reps(s, n);
        slots_.emplace(b, std::move(s));
    }
}

const PageState::Slot* PageState::find_slot(Bidegree b) const
{
    auto it = slots_.find(b);
    return it == slots_.end() ? nullptr : &it->second;
}

void PageState::rebuild_reps(Slot& s, i64 ambient) const
{
    const PrimeField& f = pres_->field();
    s.reps.clear();
    RowSpace span(f, ambient);
    for (const auto& b : s.boundaries)
        span.insert(b);
    /* deterministic: extend B by cycle-basis vectors in order; the stored
     * representative is the residue before insertion */
    for (const auto& z : s.cycles) {
        Vec r = span.residue(z);
        if (span.insert(z))
            s.reps.push_back(std::move(r));
    }
}

i64 PageState::dim(Bidegree b) const
{
    const Slot* s = find_slot(b);
    return s ? static_cast<i64>(s->reps.size()) : 0;
}

std::map<Bidegree, i64> PageState::dims() const
{
    std::map<Bidegree, i64> out;
    for (const auto& [b, s] : slots_)
        if (!s.reps.empty())
            out[b] = static_cast<i64>(s.reps.size());
    return out;
}

PoincareSeries PageState::poincare(int D) const
{
    PoincareSeries out;
    out.dims.assign(static_cast<size_t>(D) + 1, 0);
    for (const auto& [b, s] : slots_)
        if (b.total() <= D)
            out.dims[static_cast<size_t>(b.total())] += static_cast<i64>(s.reps.size());
    return out;
}

const std::vector<Vec>& PageState::reps(Bidegree b) const
{
    const Slot* s = find_slot(b);
    return s ? s->reps : no_reps_;
}

std::vector<Bidegree> PageState::nonzero_bidegrees() const
{
    std::vector<Bidegree> out;
    for (const auto& [b, s] : slots_)
        if (!s.reps.empty())
            out.push_back(b);
    return out;
}

RunStats PageState::run(const DifferentialSpec& spec)
{
    if (spec.page < page_)
        throw Error("PageState::run: differential page below the current page");
    page_ = spec.page;
    const PrimeField& f = pres_->field();
    const PageShift shift = shift_for(conv_, spec.page);
    Derivation d(basis_, spec);
    d.check_square_zero(shift);

    /* slot matrices of d on the E2 basis */
    std::map<Bidegree, FpMatrix> mats;
    for (const auto& [b, monos] : basis_.slots()) {
        (void)monos;
        mats.emplace(b, d.slot_matrix(b, shift));
    }

    /* well-definedness on the subquotient: d(Z) <= Z, d(B) <= B */
    for (const auto& [b, s] : slots_) {
        const FpMatrix& m = mats.at(b);
        Bidegree tb = shift.apply(b);
        const Slot* ts = find_slot(tb);
        RowSpace tz(f, m.rows());
        RowSpace tbnd(f, m.rows());
        if (ts) {
            for (const auto& z : ts->cycles)
                tz.insert(z);
            for (const auto& bd : ts->boundaries)
                tbnd.insert(bd);
        }
        for (const auto& z : s.cycles) {
            Vec img = m.apply(z);
            if (!tz.contains(img))
                throw Error("PageState::run: d does not preserve the cycle space");
        }
        for (const auto& bd : s.boundaries) {
            Vec img = m.apply(bd);
            if (!tbnd.contains(img))
                throw Error("PageState::run: d does not preserve the boundary space");
        }
    }

    RunStats stats;
    stats.page = spec.page;

    /* next page: Z' = { z in Z : dz in B_target }, B' = B + d(Z_source) */
    std::map<Bidegree, Slot> next;
    for (const auto& [b, s] : slots_) {
        Slot ns;
        const i64 ambient = static_cast<i64>(basis_.slot(b).size());
        const FpMatrix& m = mats.at(b);
        Bidegree tb = shift.apply(b);
        const Slot* ts = find_slot(tb);

        /* rank of d_r on this page at b: d induced on Z/B */
        RowSpace tbnd(f, m.rows());
        if (ts)
            for (const auto& bd : ts->boundaries)
                tbnd.insert(bd);
        RowSpace induced_image(f, m.rows());
        i64 rank_here = 0;
        for (const auto& z : s.cycles) {
            Vec img = tbnd.residue(m.apply(z));
            if (induced_image.insert(std::move(img)))
                ++rank_here;
        }
        if (rank_here > 0) {
            stats.rank_by_source[b] = rank_here;
            stats.rank_by_source_total[b.total()] += rank_here;
            stats.total_rank += rank_here;
        }

        /* new cycles: kernel of the induced map (Z -> target/B) */
        {
            const i64 k = static_cast<i64>(s.cycles.size());
            FpMatrix induced(m.rows(), k, f);
            for (i64 j = 0; j < k; ++j) {
                Vec img = tbnd.residue(m.apply(s.cycles[static_cast<size_t>(j)]));
                for (i64 r = 0; r < m.rows(); ++r)
                    induced.at(r, j) = img[static_cast<size_t>(r)];
            }
            RankKernel rk = rank_and_kernel(induced);
            if (rk.rank != rank_here)
                throw Error("PageState::run: rank bookkeeping mismatch");
            for (const auto& kv : rk.kernel) {
                Vec z(static_cast<size_t>(ambient), 0);
                for (i64 j = 0; j < k; ++j)
                    if (kv[static_cast<size_t>(j)] != 0)
                        z = add_scaled(f, std::move(z), s.cycles[static_cast<size_t>(j)],
                                       kv[static_cast<size_t>(j)]);
                ns.cycles.push_back(std::move(z));
            }
        }
        next.emplace(b, std::move(ns));
    }
    /* new boundaries: existing ones plus images of the source slots */
    for (const auto& [b, s] : slots_) {
        Slot& ns = next.at(b);
        ns.boundaries = s.boundaries;
        /* source bidegree mapping into b */
        Bidegree src{b.filt - shift.dfilt, b.internal - shift.dinternal};
        auto sit = slots_.find(src);
        if (sit != slots_.end()) {
            const FpMatrix& m = mats.at(src);
            for (const auto& z : sit->second.cycles)
                ns.boundaries.push_back(m.apply(z));
        }
        /* canonicalize */
        RowSpace bspan(f, static_cast<i64>(basis_.slot(b).size()));
        for (auto& v : ns.boundaries)
            bspan.insert(std::move(v));
        ns.boundaries.assign(bspan.rows().begin(), bspan.rows().end());
        rebuild_reps(ns, static_cast<i64>(basis_.slot(b).size()));
    }
    slots_ = std::move(next);
    ++page_;
    return stats;
}

std::optional<Vec> PageState::product(Bidegree b1, const Vec& rep1, Bidegree b2,
                                      const Vec& rep2) const
{
    const PrimeField& f = pres_->field();
    Element e1 = basis_.from_coords(rep1, b1);
    Element e2 = basis_.from_coords(rep2, b2);
    Element prod = basis_.mul(e1, e2);
    Bidegree tb{b1.filt + b2.filt, b1.internal + b2.internal};
    if (tb.total() > basis_.max_degree()) {
        if (prod.is_zero())
            return Vec{};
        return std::nullopt;
    }
    Vec v = basis_.coords(prod, tb);
    const Slot* ts = find_slot(tb);
    if (!ts)
        return prod.is_zero() ? std::optional<Vec>(Vec{}) : std::nullopt;
    /* reduce modulo boundaries, then express in the representative basis */
    RowSpace bspan(f, static_cast<i64>(v.size()));
    for (const auto& b : ts->boundaries)
        bspan.insert(b);
    v = bspan.residue(std::move(v));
    std::vector<Vec> reduced_reps;
    reduced_reps.reserve(ts->reps.size());
    for (const auto& r : ts->reps)
        reduced_reps.push_back(bspan.residue(r));
    return express_in_span(reduced_reps, v, f);
}

i64 PageState::euler_characteristic() const
{
    i64 chi = 0;
    for (const auto& [b, s] : slots_)
        chi += (b.total() % 2 == 0 ? 1 : -1) * static_cast<i64>(s.reps.size());
    return chi;
}

CollapseReport check_collapse(const PageState& page, int D, const std::vector<VerifiedZero>& verified)
{
    CollapseReport rep;
    const int r_min = page.page_number();
    const int r_max = D + 1;
    auto dims = page.dims();

    auto possible = [&](int r, Bidegree b) -> bool {
        PageShift shift = shift_for(page.convention(), r);
        Bidegree tgt = shift.apply(b);
        if (tgt.filt < 0 || tgt.internal < 0)
            return false;
        auto it = dims.find(tgt);
        return it != dims.end() && it->second > 0;
    };

    /* pure bidegree scan */
    bool clean = true;
    int first_r = 0;
    Bidegree first_b;
    for (const auto& [b, d] : dims) {
        (void)d;
        if (b.total() > D)
            continue;
        for (int r = r_min; r <= std::min(r_max, b.filt); ++r) {
            if (possible(r, b)) {
                clean = false;
                if (first_r == 0) {
                    first_r = r;
                    first_b = b;
                }
                break;
            }
        }
        if (!clean && first_r != 0)
            break;
    }
    if (clean) {
        rep.collapsed = true;
        rep.by_bidegree_only = true;
        rep.note = "no admissible shift has nonzero source and target";
        return rep;
    }

    /* generators-permanent argument: every algebra generator either has all
     * admissible targets zero or is externally verified; products are then
     * permanent by the Leibniz rule. A divided-power piece Γ(g) is generated
     * by the classes γ_{p^i}(g), each of which is checked separately. */
    const Presentation& pres = page.presentation();
    const i64 prime = pres.field().p();
    for (size_t i = 0; i < pres.ngens(); ++i) {
        const Generator& g = pres.generators()[i];
        std::vector<Bidegree> gen_bidegrees;
        Bidegree b0{g.filtration, g.degree};
        if (g.kind == GenKind::DividedPower) {
            for (i64 q = 1; q * b0.total() <= D; q *= prime)
                gen_bidegrees.push_back(Bidegree{static_cast<int>(q) * b0.filt,
                                                 static_cast<int>(q) * b0.internal});
        }
        else if (b0.total() <= D)
            gen_bidegrees.push_back(b0);
        for (const Bidegree& b : gen_bidegrees) {
            for (int r = r_min; r <= std::min(r_max, b.filt); ++r) {
                if (!possible(r, b))
                    continue;
                bool ok = false;
                for (const auto& v : verified)
                    if (v.gen == static_cast<int>(i) && v.page == r)
                        ok = true;
                if (!ok) {
                    rep.collapsed = false;
                    rep.violating_page = r;
                    rep.violating_bidegree = b;
                    rep.note = "generator '" + g.name + "' admits an unverified d_" +
                               std::to_string(r);
                    return rep;
                }
            }
        }
    }
    rep.collapsed = true;
    rep.by_bidegree_only = false;
    rep.note = "all generators permanent (bidegree or verified); products by Leibniz";
    (void)first_r;
    (void)first_b;
    return rep;
}

CompareReport compare_series(const PoincareSeries& computed, const PoincareSeries& claimed,
                             int D, const std::string& label)
{
    CompareReport rep;
    for (int d = 0; d <= D; ++d) {
        if (computed.at(d) != claimed.at(d)) {
            rep.match = false;
            rep.mismatches.push_back(label + ": degree " + std::to_string(d) + " computed " +
                                     std::to_string(computed.at(d)) + " expected " +
                                     std::to_string(claimed.at(d)));
        }
    }
    return rep;
}

CompareReport einfty_compare(const PageState& page, const Presentation& claimed, int D)
{
    CompareReport rep;
    bool claimed_bigraded = false;
    for (const auto& g : claimed.generators())
        if (g.filtration != 0)
            claimed_bigraded = true;
    Basis cb(claimed, D);
    if (claimed_bigraded) {
        auto want = cb.bigraded_dims();
        auto have = page.dims();
        std::set<Bidegree> keys;
        for (const auto& [b, d] : want) {
            (void)d;
            if (b.total() <= D)
                keys.insert(b);
        }
        for (const auto& [b, d] : have) {
            (void)d;
            if (b.total() <= D)
                keys.insert(b);
        }
        for (const auto& b : keys) {
            i64 w = want.count(b) ? want.at(b) : 0;
            i64 h = have.count(b) ? have.at(b) : 0;
            if (w != h) {
                rep.match = false;
                rep.mismatches.push_back("bidegree (" + std::to_string(b.filt) + "," +
                                         std::to_string(b.internal) + "): computed " +
                                         std::to_string(h) + " expected " + std::to_string(w));
            }
        }
    }
    CompareReport totals = compare_series(page.poincare(D), cb.poincare(), D, "total");
    if (!totals.match) {
        rep.match = false;
        rep.mismatches.insert(rep.mismatches.end(), totals.mismatches.begin(),
                              totals.mismatches.end());
    }
    return rep;
}

} // namespace thh
