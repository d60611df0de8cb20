#include "thh/homological.hpp"
#include "thh/ktheory.hpp"

#include <algorithm>
#include <sstream>

namespace thh {

ChainComplex::ChainComplex(PrimeField field, std::string name)
    : field_(field), name_(std::move(name))
{
}

void ChainComplex::set_basis(int s, int t, std::vector<std::string> names)
{
    if (s < 0 || t < 0)
        throw Error("ChainComplex: negative bidegree");
    max_stage_ = std::max(max_stage_, s);
    bases_[{s, t}] = std::move(names);
}

void ChainComplex::set_differential(int s, int t, FpMatrix block)
{
    diffs_.emplace(std::make_pair(s, t), std::move(block));
}

i64 ChainComplex::dim(int s, int t) const
{
    auto it = bases_.find({s, t});
    return it == bases_.end() ? 0 : static_cast<i64>(it->second.size());
}

const std::vector<std::string>& ChainComplex::basis_names(int s, int t) const
{
    auto it = bases_.find({s, t});
    return it == bases_.end() ? empty_ : it->second;
}

const FpMatrix* ChainComplex::differential(int s, int t) const
{
    auto it = diffs_.find({s, t});
    return it == diffs_.end() ? nullptr : &it->second;
}

void ChainComplex::validate()
{
    for (const auto& [st, m] : diffs_) {
        auto [s, t] = st;
        if (m.cols() != dim(s, t) || m.rows() != dim(s - 1, t))
            throw Error(name_ + ": differential block shape mismatch at (" + std::to_string(s) +
                        "," + std::to_string(t) + ")");
        const FpMatrix* next = differential(s - 1, t);
        if (s >= 2 && dim(s - 2, t) > 0 && next && !next->multiply(m).is_zero())
            throw Error(name_ + ": d∘d != 0 at (" + std::to_string(s) + "," + std::to_string(t) +
                        ")");
    }
}

std::map<std::pair<int, int>, i64> ChainComplex::homology_dims() const
{
    std::map<std::pair<int, int>, i64> out;
    for (const auto& [st, names] : bases_) {
        auto [s, t] = st;
        i64 n = static_cast<i64>(names.size());
        if (n == 0)
            continue;
        i64 rank_out = 0, rank_in = 0;
        if (const FpMatrix* d = differential(s, t); d && d->rows() > 0)
            rank_out = rank_and_kernel(*d).rank;
        if (const FpMatrix* din = differential(s + 1, t); din && din->cols() > 0)
            rank_in = rank_and_kernel(*din).rank;
        i64 h = n - rank_out - rank_in;
        if (h != 0)
            out[{s, t}] = h;
    }
    return out;
}

std::map<int, i64> ChainComplex::homology_total_dims() const
{
    std::map<int, i64> out;
    for (const auto& [st, h] : homology_dims())
        out[st.first + st.second] += h;
    return out;
}

std::map<int, i64> ChainComplex::homology_internal_dims() const
{
    std::map<int, i64> out;
    for (const auto& [st, h] : homology_dims())
        out[st.second] += h;
    return out;
}

bool ChainComplex::euler_consistent() const
{
    std::map<int, i64> chain_chi, hom_chi;
    for (const auto& [st, names] : bases_)
        chain_chi[st.second] += (st.first % 2 == 0 ? 1 : -1) * static_cast<i64>(names.size());
    for (const auto& [st, h] : homology_dims())
        hom_chi[st.second] += (st.first % 2 == 0 ? 1 : -1) * h;
    for (const auto& [t, chi] : chain_chi)
        if (chi != (hom_chi.count(t) ? hom_chi.at(t) : 0))
            return false;
    for (const auto& [t, chi] : hom_chi)
        if (chi != (chain_chi.count(t) ? chain_chi.at(t) : 0))
            return false;
    return true;
}

Element AlgebraHom::apply(const Basis& dst_basis, const Monomial& m) const
{
    Element out = dst->unit_elt();
    for (size_t i = 0; i < src->ngens(); ++i) {
        if (src->generators()[i].kind == GenKind::DividedPower && m.e[i] > 1 &&
            !images[i].is_zero())
            throw Error("AlgebraHom: divided-power classes need explicit images");
        for (int e = 0; e < m.e[i]; ++e)
            out = dst_basis.mul(out, images[i]);
    }
    return out;
}

Presentation trivial_algebra(PrimeField field)
{
    return Presentation(field, {});
}

AlgebraHom augmentation_hom(const Presentation& src, const Presentation& fp_algebra)
{
    AlgebraHom h;
    h.src = &src;
    h.dst = &fp_algebra;
    h.images.assign(src.ngens(), Element{});
    return h;
}

namespace {

/* tensor-word basis of Q ⊗ Abar^{⊗ s}, indexed per (s, internal degree) */
struct Word {
    Monomial q;
    std::vector<Monomial> factors;

    bool operator<(const Word& o) const
    {
        if (q != o.q)
            return q < o.q;
        return factors < o.factors;
    }
    bool operator==(const Word& o) const { return q == o.q && factors == o.factors; }
};

struct WordTable {
    std::map<std::pair<int, int>, std::vector<Word>> slots;
    std::map<std::pair<int, int>, std::map<Word, int>> index;

    void insert(int s, int t, const Word& w)
    {
        auto& v = slots[{s, t}];
        index[{s, t}][w] = static_cast<int>(v.size());
        v.push_back(w);
    }
};

std::vector<Monomial> positive_basis(const Basis& b)
{
    std::vector<Monomial> out;
    for (const auto& [deg, monos] : b.slots()) {
        if (deg.total() == 0)
            continue;
        out.insert(out.end(), monos.begin(), monos.end());
    }
    return out;
}

int min_generator_degree(const Presentation& p)
{
    int m = 0;
    for (const auto& g : p.generators()) {
        int d = g.degree + g.filtration;
        if (m == 0 || d < m)
            m = d;
    }
    return m;
}

std::string word_name(const Presentation& A, const Presentation& Q, const Word& w)
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < w.q.e.size(); ++i)
        if (w.q.e[i] > 0)
            os << Q.generators()[i].name << "^" << w.q.e[i];
    os << "|";
    for (size_t k = 0; k < w.factors.size(); ++k) {
        if (k)
            os << "|";
        for (size_t i = 0; i < w.factors[k].e.size(); ++i)
            if (w.factors[k].e[i] > 0)
                os << A.generators()[i].name << "^" << w.factors[k].e[i];
    }
    os << "]";
    return os.str();
}

} // namespace

ChainComplex hochschild_complex(const Presentation& A, const Presentation& Q,
                                const AlgebraHom& coeff_map, int D)
{
    const PrimeField& f = A.field();
    if (D < 0)
        throw Error("hochschild_complex: negative bound");
    Basis abasis(A, D);
    Basis qbasis(Q, D);
    if (!abasis.slot(Bidegree{0, 0}).empty() && abasis.slot(Bidegree{0, 0}).size() != 1)
        throw Error("hochschild_complex: A must be connected");
    for (const auto& g : A.generators())
        if (g.degree + g.filtration <= 0)
            throw Error("hochschild_complex: generators must have positive degree");

    const std::vector<Monomial> abar = positive_basis(abasis);
    const int mindeg = min_generator_degree(A);
    const int smax = mindeg > 0 ? D / mindeg : 0;

    /* enumerate words */
    WordTable words;
    std::vector<std::pair<Monomial, int>> qmonos;
    for (const auto& [deg, monos] : qbasis.slots())
        for (const auto& m : monos)
            qmonos.push_back({m, deg.total()});
    std::sort(qmonos.begin(), qmonos.end(),
              [](const auto& a, const auto& b) {
                  return a.second != b.second ? a.second < b.second : a.first < b.first;
              });

    std::function<void(Word&, int, int)> extend = [&](Word& w, int s, int deg) {
        words.insert(s, deg, w);
        if (s >= smax)
            return;
        for (const auto& m : abar) {
            int d = abasis.pres().total_degree(m);
            if (deg + d > D)
                continue;
            w.factors.push_back(m);
            extend(w, s + 1, deg + d);
            w.factors.pop_back();
        }
    };
    for (const auto& [qm, qd] : qmonos) {
        Word w{qm, {}};
        extend(w, 0, qd);
    }

    ChainComplex cx(f, "hochschild");
    for (const auto& [st, ws] : words.slots) {
        std::vector<std::string> names;
        names.reserve(ws.size());
        for (const auto& w : ws)
            names.push_back(word_name(A, Q, w));
        cx.set_basis(st.first, st.second, std::move(names));
    }

    /* faces: d_0 multiplies a_1 into q through the coefficient map, inner
     * faces merge, the last face rotates a_s to the front with its Koszul
     * sign. d = sum (-1)^i d_i. */
    auto add_word = [&](std::map<Word, i64>& acc, Word w, i64 c) {
        if (c == 0)
            return;
        auto it = acc.find(w);
        if (it == acc.end())
            acc.emplace(std::move(w), c);
        else {
            it->second = f.add(it->second, c);
            if (it->second == 0)
                acc.erase(it);
        }
    };

    for (const auto& [st, ws] : words.slots) {
        auto [s, t] = st;
        if (s == 0)
            continue;
        FpMatrix mat(cx.dim(s - 1, t), cx.dim(s, t), f);
        for (size_t j = 0; j < ws.size(); ++j) {
            const Word& w = ws[j];
            std::map<Word, i64> acc;
            for (int i = 0; i <= s; ++i) {
                i64 sign = (i % 2 == 0) ? 1 : f.neg(1);
                if (i == 0) {
                    /* q * image(a_1) */
                    Element qe;
                    qe.add_term(f, w.q, 1);
                    Element prod = qbasis.mul(qe, coeff_map.apply(qbasis, w.factors[0]));
                    for (const auto& [qm, qc] : prod.terms()) {
                        Word nw{qm, {w.factors.begin() + 1, w.factors.end()}};
                        add_word(acc, std::move(nw), f.mul(sign, qc));
                    }
                }
                else if (i < s) {
                    /* merge, reduced into the quotient basis; degree-0
                     * components cannot occur since factors are positive */
                    Element ea, eb;
                    ea.add_term(f, w.factors[i - 1], 1);
                    eb.add_term(f, w.factors[i], 1);
                    Element merged = abasis.mul(ea, eb);
                    for (const auto& [mm, mc] : merged.terms()) {
                        Word nw{w.q, {}};
                        nw.factors.reserve(w.factors.size() - 1);
                        for (int k = 0; k < i - 1; ++k)
                            nw.factors.push_back(w.factors[k]);
                        nw.factors.push_back(mm);
                        for (size_t k = i + 1; k < w.factors.size(); ++k)
                            nw.factors.push_back(w.factors[k]);
                        add_word(acc, std::move(nw), f.mul(sign, mc));
                    }
                }
                else {
                    /* last face: (-1)^{|a_s|(|q| + |a_1| + ... + |a_{s-1}|)} (a_s q) ⊗ a_1 ... */
                    const Monomial& last = w.factors.back();
                    int dl = A.total_degree(last);
                    int drest = Q.total_degree(w.q);
                    for (size_t k = 0; k + 1 < w.factors.size(); ++k)
                        drest += A.total_degree(w.factors[k]);
                    i64 rot = (dl % 2 != 0 && drest % 2 != 0) ? f.neg(1) : 1;
                    Element qe;
                    qe.add_term(f, w.q, 1);
                    Element prod = qbasis.mul(coeff_map.apply(qbasis, last), qe);
                    for (const auto& [qm, qc] : prod.terms()) {
                        Word nw{qm, {w.factors.begin(), w.factors.end() - 1}};
                        add_word(acc, std::move(nw), f.mul(f.mul(sign, rot), qc));
                    }
                }
            }
            for (const auto& [nw, c] : acc) {
                auto& idx = words.index.at({s - 1, t});
                auto it = idx.find(nw);
                if (it == idx.end())
                    throw Error("hochschild_complex: face image missing from basis");
                mat.at(it->second, static_cast<i64>(j)) = c;
            }
        }
        cx.set_differential(s, t, std::move(mat));
    }
    cx.validate();
    return cx;
}

i64 BigradedDims::at(int s, int t) const
{
    auto it = by_bidegree.find({s, t});
    return it == by_bidegree.end() ? 0 : it->second;
}

std::map<int, i64> BigradedDims::totals() const
{
    std::map<int, i64> out;
    for (const auto& [st, d] : by_bidegree)
        out[st.first + st.second] += d;
    return out;
}

i64 BigradedDims::total_at(int d) const
{
    auto t = totals();
    auto it = t.find(d);
    return it == t.end() ? 0 : it->second;
}

BigradedDims tor_via_bar(const Presentation& A, int D)
{
    Presentation fp = trivial_algebra(A.field());
    ChainComplex cx = hochschild_complex(A, fp, augmentation_hom(A, fp), D);
    BigradedDims out;
    out.by_bidegree = cx.homology_dims();
    return out;
}

FreeResolution::FreeResolution(std::shared_ptr<const Presentation> algebra, int D)
    : algebra_(std::move(algebra)), basis_(*algebra_, D)
{
}

int FreeResolution::add_stage()
{
    gens_.emplace_back();
    diffs_.emplace_back();
    slices_.clear();
    return static_cast<int>(gens_.size()) - 1;
}

int FreeResolution::add_generator(int stage, const std::string& name, int degree, Diff d)
{
    if (stage < 0 || stage >= static_cast<int>(gens_.size()))
        throw Error("FreeResolution: bad stage");
    if (stage == 0 && !d.empty())
        throw Error("FreeResolution: stage-0 generators map to F_p");
    gens_[stage].push_back(Gen{name, degree});
    diffs_[stage].push_back(std::move(d));
    slices_.clear();
    return static_cast<int>(gens_[stage].size()) - 1;
}

const FreeResolution::Slice& FreeResolution::slice(int s, int t) const
{
    auto key = std::make_pair(s, t);
    auto it = slices_.find(key);
    if (it != slices_.end())
        return it->second;
    Slice sl;
    if (s >= 0 && s < static_cast<int>(gens_.size())) {
        for (size_t g = 0; g < gens_[s].size(); ++g) {
            int rest = t - gens_[s][g].degree;
            if (rest < 0)
                continue;
            for (const auto& m : basis_.slot(Bidegree{0, rest})) {
                sl.index[{static_cast<int>(g), m}] = static_cast<int>(sl.basis.size());
                sl.basis.push_back({static_cast<int>(g), m});
            }
        }
    }
    return slices_.emplace(key, std::move(sl)).first->second;
}

FpMatrix FreeResolution::matrix(int s, int t) const
{
    const PrimeField& f = algebra_->field();
    const Slice& src = slice(s, t);
    const Slice& dst = slice(s - 1, t);
    FpMatrix m(static_cast<i64>(dst.basis.size()), static_cast<i64>(src.basis.size()), f);
    for (size_t j = 0; j < src.basis.size(); ++j) {
        auto [g, mono] = src.basis[j];
        Element me;
        me.add_term(f, mono, 1);
        for (const auto& [tg, coeff] : diffs_[s][g]) {
            Element prod = basis_.mul(me, coeff);
            for (const auto& [pm, pc] : prod.terms()) {
                auto it = dst.index.find({tg, pm});
                if (it == dst.index.end())
                    throw Error("FreeResolution: differential image outside slice");
                m.at(it->second, static_cast<i64>(j)) = f.add(m.at(it->second, static_cast<i64>(j)), pc);
            }
        }
    }
    return m;
}

void FreeResolution::validate_dd(int total_bound) const
{
    for (int s = 2; s < stages(); ++s)
        for (int t = 0; t + s <= total_bound && t <= bound(); ++t) {
            if (slice(s, t).basis.empty())
                continue;
            FpMatrix dd = matrix(s - 1, t).multiply(matrix(s, t));
            if (!dd.is_zero())
                throw Error("FreeResolution: d∘d != 0 at stage " + std::to_string(s) +
                            ", degree " + std::to_string(t));
        }
}

bool FreeResolution::exact_through(int total_bound, std::string* first_failure) const
{
    for (int s = 0; s < stages(); ++s) {
        for (int t = 0; t + s <= total_bound && t <= bound(); ++t) {
            const Slice& sl = slice(s, t);
            if (sl.basis.empty())
                continue;
            i64 kdim;
            if (s == 0) {
                /* kernel of the augmentation: everything in positive degree */
                kdim = (t == 0) ? static_cast<i64>(sl.basis.size()) - 1
                                : static_cast<i64>(sl.basis.size());
            }
            else {
                kdim = static_cast<i64>(rank_and_kernel(matrix(s, t)).kernel.size());
            }
            i64 img = 0;
            if (s + 1 < stages() && !slice(s + 1, t).basis.empty())
                img = rank_and_kernel(matrix(s + 1, t)).rank;
            if (kdim != img) {
                if (first_failure)
                    *first_failure = "stage " + std::to_string(s) + ", internal degree " +
                                     std::to_string(t) + ": kernel " + std::to_string(kdim) +
                                     " vs image " + std::to_string(img);
                return false;
            }
        }
    }
    return true;
}

std::map<std::pair<int, int>, i64> FreeResolution::generator_dims() const
{
    std::map<std::pair<int, int>, i64> out;
    for (int s = 0; s < stages(); ++s)
        for (const auto& g : gens_[s])
            out[{s, g.degree}] += 1;
    return out;
}

std::map<std::pair<int, int>, i64> FreeResolution::tensor_fp_homology() const
{
    const PrimeField& f = algebra_->field();
    /* F ⊗_A F_p keeps one column per generator; the induced differential
     * keeps the constant coefficients of d */
    std::map<std::pair<int, int>, std::vector<int>> slots; /* (s,t) -> gen indices */
    for (int s = 0; s < stages(); ++s)
        for (size_t g = 0; g < gens_[s].size(); ++g)
            slots[{s, gens_[s][g].degree}].push_back(static_cast<int>(g));
    Monomial one = algebra_->unit();
    auto block = [&](int s, int t) -> FpMatrix {
        const auto src = slots.count({s, t}) ? slots.at({s, t}) : std::vector<int>{};
        const auto dst = slots.count({s - 1, t}) ? slots.at({s - 1, t}) : std::vector<int>{};
        FpMatrix m(static_cast<i64>(dst.size()), static_cast<i64>(src.size()), f);
        for (size_t j = 0; j < src.size(); ++j)
            for (const auto& [tg, coeff] : diffs_[s][src[j]]) {
                auto it = coeff.terms().find(one);
                if (it == coeff.terms().end())
                    continue;
                for (size_t i = 0; i < dst.size(); ++i)
                    if (dst[i] == tg)
                        m.at(static_cast<i64>(i), static_cast<i64>(j)) =
                            f.add(m.at(static_cast<i64>(i), static_cast<i64>(j)), it->second);
            }
        return m;
    };
    std::map<std::pair<int, int>, i64> out;
    for (const auto& [st, idx] : slots) {
        auto [s, t] = st;
        i64 n = static_cast<i64>(idx.size());
        i64 rank_out = (s >= 1) ? rank_and_kernel(block(s, t)).rank : 0;
        i64 rank_in = rank_and_kernel(block(s + 1, t)).rank;
        i64 h = n - rank_out - rank_in;
        if (h != 0)
            out[{s, t}] = h;
    }
    return out;
}

std::string FreeResolution::text_chart() const
{
    std::ostringstream os;
    for (int s = 0; s < stages(); ++s) {
        os << "stage " << s << ":";
        if (gens_[s].empty())
            os << " (none)";
        for (size_t g = 0; g < gens_[s].size(); ++g)
            os << " " << gens_[s][g].name << "(" << gens_[s][g].degree << ")";
        os << "\n";
    }
    return os.str();
}

FreeResolution minimal_resolution(const Presentation& A, int D)
{
    const PrimeField& f = A.field();
    Basis basis(A, D);
    if (basis.slot(Bidegree{0, 0}).size() != 1)
        throw Error("minimal_resolution: A must be connected");
    FreeResolution res(std::make_shared<Presentation>(A), D);
    res.add_stage();
    res.add_generator(0, "g0", 0, {});

    const int mindeg = [&] {
        int m = 0;
        for (const auto& g : A.generators()) {
            int d = g.degree + g.filtration;
            if (m == 0 || d < m)
                m = d;
        }
        return m;
    }();

    for (int s = 0;; ++s) {
        if (mindeg == 0 || (s + 1) * mindeg > D)
            break;
        /* kernel of d^s per internal degree, as vectors over the slice */
        std::map<int, std::vector<Vec>> kernels;
        for (int t = 0; t <= D; ++t) {
            const auto& sl = res.slice(s, t);
            if (sl.basis.empty())
                continue;
            if (s == 0) {
                if (t == 0)
                    continue; /* augmentation is injective on degree 0 */
                std::vector<Vec> k;
                for (size_t i = 0; i < sl.basis.size(); ++i) {
                    Vec v(sl.basis.size(), 0);
                    v[i] = 1;
                    k.push_back(std::move(v));
                }
                kernels[t] = std::move(k);
            }
            else {
                auto rk = rank_and_kernel(res.matrix(s, t));
                if (!rk.kernel.empty())
                    kernels[t] = std::move(rk.kernel);
            }
        }
        if (kernels.empty())
            break;
        int stage = res.add_stage();
        int counter = 0;
        /* minimal generators: complement of Abar·K degreewise, lowest degree
         * first; Abar·K_t is spanned by monomial multiples of lower kernels */
        std::map<int, std::vector<std::pair<int, Vec>>> chosen; /* t -> (genindex, vec) */
        for (auto& [t, kt] : kernels) {
            RowSpace generated(f, static_cast<i64>(res.slice(s, t).basis.size()));
            for (const auto& [t0, chosen_t0] : chosen) {
                if (t0 >= t)
                    break;
                for (const auto& mono : basis.slot(Bidegree{0, t - t0})) {
                    Element me;
                    me.add_term(f, mono, 1);
                    for (const auto& [gi, kv] : chosen_t0) {
                        (void)gi;
                        /* multiply the kernel vector by the monomial */
                        const auto& sl0 = res.slice(s, t0);
                        const auto& slt = res.slice(s, t);
                        Vec prod(slt.basis.size(), 0);
                        for (size_t i = 0; i < kv.size(); ++i) {
                            if (kv[i] == 0)
                                continue;
                            auto [g, m0] = sl0.basis[i];
                            Element m0e;
                            m0e.add_term(f, m0, kv[i]);
                            Element pe = basis.mul(me, m0e);
                            for (const auto& [pm, pc] : pe.terms()) {
                                auto it = slt.index.find({g, pm});
                                if (it == slt.index.end())
                                    throw Error("minimal_resolution: product escaped slice");
                                prod[it->second] = f.add(prod[it->second], pc);
                            }
                        }
                        generated.insert(std::move(prod));
                    }
                }
            }
            /* also multiples of kernel elements in the same stage but lower
             * degree that were NOT chosen as generators: these are already in
             * span(chosen) + Abar*K below, so the chosen set suffices */
            for (const auto& kv : kt) {
                if (generated.contains(kv))
                    continue;
                Vec red = generated.residue(kv);
                generated.insert(red);
                /* record as a new generator */
                FreeResolution::Diff d;
                const auto& sl = res.slice(s, t);
                std::map<int, Element> by_gen;
                for (size_t i = 0; i < red.size(); ++i) {
                    if (red[i] == 0)
                        continue;
                    auto [g, m0] = sl.basis[i];
                    by_gen[g].add_term(f, m0, red[i]);
                }
                for (auto& [g, coeff] : by_gen)
                    d.push_back({g, std::move(coeff)});
                int gi = res.add_generator(stage, "e" + std::to_string(s + 1) + "_" +
                                                     std::to_string(counter++),
                                           t, std::move(d));
                chosen[t].push_back({gi, red});
            }
        }
        if (res.stage_gens(stage).empty())
            break;
        /* minimality: no constant coefficients in the differential */
        Monomial one = A.unit();
        for (const auto& [t, v] : chosen)
            for (const auto& [gi, kv] : v) {
                (void)t;
                for (const auto& [tg, coeff] : res.differential_of(stage, gi)) {
                    (void)tg;
                    if (s >= 1 && coeff.terms().count(one))
                        throw Error("minimal_resolution: non-minimal generator");
                }
            }
    }
    return res;
}

FreeResolution ahl3_resolution(const CaseParams& params, int D)
{
    if (params.case_id != 4 || params.r <= 1)
        throw Error("ahl3_resolution: requires case (4) with r > 1");
    const PrimeField f(params.p);
    const int r = params.r, k = params.k, p = static_cast<int>(params.p);

    /* R = (E(x) ⊗ P_k(y)) / (x y^{k-1}) */
    std::vector<Generator> gens = {
        {"x", 2 * r - 1, 0, GenKind::Exterior, 0},
        {"y", 2 * r, 0, GenKind::Truncated, k},
    };
    Presentation free_r(f, gens);
    Element rel;
    {
        Monomial m = free_r.unit();
        m.e[0] = 1;
        m.e[1] = k - 1;
        rel.add_term(f, m, 1);
    }
    auto R_owned = std::make_shared<Presentation>(f, gens, std::vector<Element>{rel});
    const Presentation& R = *R_owned;

    FreeResolution res(R_owned, D);
    const int x = 0, y = 1;
    auto elt = [&](int gen, int exp) { return R.gen_elt(gen, exp); };
    auto xy = [&](int xe, int ye) {
        Monomial m = R.unit();
        m.e[x] = xe;
        m.e[y] = ye;
        Element e;
        e.add_term(f, m, 1);
        return e;
    };

    res.add_stage();
    res.add_generator(0, "1", 0, {});

    /* stage 1: gamma_1 -> x, upsilon_1 -> y */
    res.add_stage();
    int g1 = res.add_generator(1, "gamma1", 2 * r - 1, {{0, elt(x, 1)}});
    int u1 = res.add_generator(1, "upsilon1", 2 * r, {{0, elt(y, 1)}});

    int prev_gamma = g1, prev_upsilon = u1;
    const int smax = std::max(2, 2 * p); /* stages past total degree 2p are inert */
    int prev_w = -1, prev_a = -1, b3 = -1;
    (void)prev_w;
    (void)prev_a;
    for (int i = 2; i <= smax; ++i) {
        res.add_stage();
        int deg_gamma = i * (2 * r - 1);
        int deg_w = 2 * p - 2 + (i - 2) * 2 * r - i + 1;
        int deg_z = deg_w + 1;
        int deg_a = deg_w;
        int deg_u = 2 * r * i - i + 1;
        int gi = res.add_generator(i, "gamma" + std::to_string(i), deg_gamma,
                                   {{prev_gamma, elt(x, 1)}});
        int wi = res.add_generator(i, "w" + std::to_string(i), deg_w,
                                   {{prev_gamma, elt(y, k - 1)}});
        int zi = res.add_generator(i, "z" + std::to_string(i), deg_z,
                                   {{prev_upsilon, elt(y, k - 1)}});
        int ai = res.add_generator(i, "a" + std::to_string(i), deg_a,
                                   {{prev_upsilon, xy(1, k - 2)}});
        int ui = res.add_generator(i, "upsilon" + std::to_string(i), deg_u,
                                   {{prev_gamma, elt(y, 1)}, {prev_upsilon, elt(x, 1).scaled(f, f.neg(1))}});
        (void)zi;
        if (i == 3) {
            /* d3(b3) = -w2 + y^{k-2} upsilon2 + a2 */
            FreeResolution::Diff d;
            d.push_back({prev_w, R.unit_elt().scaled(f, f.neg(1))});
            d.push_back({prev_upsilon, xy(0, k - 2)});
            d.push_back({prev_a, R.unit_elt()});
            b3 = res.add_generator(3, "b3", 2 * p - 3, std::move(d));
            (void)b3;
        }
        prev_gamma = gi;
        prev_upsilon = ui;
        prev_w = wi;
        prev_a = ai;
    }
    res.validate_dd(2 * p + 2);
    return res;
}

DgaHomology dga_homology(const Presentation& pres, const DifferentialSpec& spec, int D,
                         Convention conv)
{
    PageState page(pres, D, conv, spec.page);
    RunStats stats = page.run(spec);
    return DgaHomology{std::move(page), stats};
}

} // namespace thh
