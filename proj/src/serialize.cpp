#include "thh/serialize.hpp"

#include <cctype>
#include <sstream>

namespace thh {

json presentation_to_json(const Presentation& pres)
{
    json j;
    j["p"] = pres.field().p();
    j["generators"] = json::array();
    for (const auto& g : pres.generators()) {
        json gj = {{"name", g.name},
                   {"degree", g.degree},
                   {"filtration", g.filtration},
                   {"kind", kind_name(g.kind)}};
        if (g.kind == GenKind::Truncated)
            gj["height"] = g.height;
        j["generators"].push_back(std::move(gj));
    }
    j["relations"] = json::array();
    for (const auto& r : pres.relations())
        j["relations"].push_back(element_to_string(pres, r));
    return j;
}

Presentation presentation_from_json(const json& j)
{
    PrimeField f(j.at("p").get<i64>());
    std::vector<Generator> gens;
    for (const auto& gj : j.at("generators")) {
        Generator g;
        g.name = gj.at("name").get<std::string>();
        g.degree = gj.at("degree").get<int>();
        g.filtration = gj.value("filtration", 0);
        g.kind = kind_from_name(gj.at("kind").get<std::string>());
        g.height = gj.value("height", 0);
        gens.push_back(std::move(g));
    }
    Presentation free(f, gens);
    std::vector<Element> rels;
    if (j.contains("relations"))
        for (const auto& rj : j.at("relations"))
            rels.push_back(element_from_string(free, rj.get<std::string>()));
    return Presentation(f, gens, rels);
}

json series_to_json(const PoincareSeries& s)
{
    return json(s.dims);
}

json poincare_to_json(const Presentation& pres, const PoincareSeries& s)
{
    json j = presentation_to_json(pres);
    j["dims"] = s.dims;
    return j;
}

std::string element_to_string(const Presentation& pres, const Element& e)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        bool any = false;
        if (c != 1) {
            os << c;
            any = true;
        }
        for (size_t i = 0; i < pres.ngens(); ++i) {
            if (m.e[i] == 0)
                continue;
            if (any)
                os << "*";
            os << pres.generators()[i].name;
            if (m.e[i] > 1)
                os << "^" << m.e[i];
            any = true;
        }
        if (!any)
            os << "1";
    }
    return os.str();
}

Element element_from_string(const Presentation& pres, const std::string& s)
{
    const PrimeField& f = pres.field();
    Element out;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    skip_ws();
    if (i < s.size() && s.compare(i, 1, "0") == 0 && i + 1 == s.size())
        return out;
    i64 sign = 1;
    while (i < s.size()) {
        skip_ws();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        }
        i64 coef = sign;
        Monomial m = pres.unit();
        bool saw_factor = false;
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            skip_ws();
            if (i >= s.size() || s[i] == '+' || s[i] == '-')
                break;
            if (s[i] == '*') {
                ++i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                i64 n = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    n = n * 10 + (s[i++] - '0');
                coef = f.mul(f.reduce(coef), f.reduce(n));
                saw_factor = true;
                continue;
            }
            /* generator name: letters, digits after the first char */
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            if (name.empty())
                throw Error("element_from_string: parse error near index " + std::to_string(i));
            int exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    exp = exp * 10 + (s[i++] - '0');
            }
            int gi = pres.gen_index(name);
            m.e[gi] += exp;
            saw_factor = true;
        }
        if (saw_factor)
            out.add_term(f, m, coef);
        sign = 1;
    }
    return out;
}

json differential_spec_to_json(const Presentation& pres, const DifferentialSpec& spec)
{
    json j;
    j["page"] = spec.page;
    j["assignments"] = json::array();
    for (const auto& a : spec.assigns)
        j["assignments"].push_back({{"generator", pres.generators()[a.gen].name},
                                    {"target", element_to_string(pres, a.target)},
                                    {"unit", a.unit}});
    j["gamma_assignments"] = json::array();
    for (const auto& g : spec.gamma_assigns)
        j["gamma_assignments"].push_back({{"generator", pres.generators()[g.gen].name},
                                          {"offset", g.offset},
                                          {"target", element_to_string(pres, g.w)},
                                          {"unit", g.unit}});
    return j;
}

DifferentialSpec differential_spec_from_json(const Presentation& pres, const json& j)
{
    DifferentialSpec spec;
    spec.page = j.at("page").get<int>();
    if (j.contains("assignments"))
        for (const auto& aj : j.at("assignments")) {
            DifferentialSpec::Assign a;
            a.gen = pres.gen_index(aj.at("generator").get<std::string>());
            a.target = element_from_string(pres, aj.at("target").get<std::string>());
            a.unit = aj.value("unit", i64{1});
            spec.assigns.push_back(std::move(a));
        }
    if (j.contains("gamma_assignments"))
        for (const auto& gj : j.at("gamma_assignments")) {
            DifferentialSpec::GammaAssign g;
            g.gen = pres.gen_index(gj.at("generator").get<std::string>());
            g.offset = gj.at("offset").get<int>();
            g.w = element_from_string(pres, gj.at("target").get<std::string>());
            g.unit = gj.value("unit", i64{1});
            spec.gamma_assigns.push_back(std::move(g));
        }
    return spec;
}

json bigraded_dims_to_json(const std::map<Bidegree, i64>& dims)
{
    json arr = json::array();
    for (const auto& [b, d] : dims)
        arr.push_back({{"filtration", b.filt}, {"internal", b.internal}, {"dim", d}});
    return arr;
}

json page_to_json(const PageState& page)
{
    json j;
    j["page"] = page.page_number();
    j["max_degree"] = page.max_degree();
    j["dims"] = bigraded_dims_to_json(page.dims());
    j["totals"] = page.poincare(page.max_degree()).dims;
    return j;
}

std::string page_dot_chart(const PageState& page, int D)
{
    auto dims = page.dims();
    int max_filt = 0;
    for (const auto& [b, d] : dims) {
        (void)d;
        if (b.total() <= D)
            max_filt = std::max(max_filt, b.filt);
    }
    std::ostringstream os;
    os << "filtration \\ total degree 0.." << D << "\n";
    for (int f = max_filt; f >= 0; --f) {
        os << (f < 10 ? " " : "") << f << " | ";
        for (int d = 0; d <= D; ++d) {
            i64 n = 0;
            auto it = dims.find(Bidegree{f, d - f});
            if (it != dims.end())
                n = it->second;
            os << (n == 0 ? "." : (n < 10 ? std::string(1, static_cast<char>('0' + n)) : "+"));
        }
        os << "\n";
    }
    return os.str();
}

json complex_to_json(const ChainComplex& cx)
{
    json j;
    j["name"] = cx.name();
    json stages = json::array();
    for (const auto& [st, h] : cx.homology_dims())
        stages.push_back({{"s", st.first}, {"t", st.second}, {"dim", h}});
    j["homology"] = stages;
    return j;
}

json comodule_to_json(const Comodule& cm)
{
    json j;
    j["p"] = cm.underlying().field().p();
    j["max_degree"] = cm.bound();
    j["underlying"] = presentation_to_json(cm.underlying());
    json coactions = json::array();
    for (size_t i = 0; i < cm.underlying().ngens(); ++i) {
        const auto& g = cm.underlying().generators()[i];
        TensorElement nu = cm.coaction(cm.underlying().gen_mono(static_cast<int>(i)));
        json terms = json::array();
        for (const auto& [k, c] : nu.terms()) {
            Element am, mm;
            am.add_term(cm.steenrod().pres().field(), k.first, 1);
            mm.add_term(cm.underlying().field(), k.second, 1);
            terms.push_back({element_to_string(cm.steenrod().pres(), am),
                             element_to_string(cm.underlying(), mm), c});
        }
        coactions.push_back({{"generator", g.name}, {"terms", std::move(terms)}});
    }
    j["coactions"] = std::move(coactions);
    return j;
}

json report_to_json(const ScenarioReport& rep)
{
    json j;
    j["scenario"] = rep.scenario;
    j["params"] = {{"q", rep.params.q}, {"p", rep.params.p}, {"r", rep.params.r},
                   {"v", rep.params.v}, {"k", rep.params.k}, {"case", rep.params.case_id}};
    j["claims"] = json::array();
    for (const auto& c : rep.claims) {
        json cj = {{"description", c.description},
                   {"expected", c.expected},
                   {"computed", c.computed},
                   {"pass", c.pass}};
        if (c.conjectural)
            cj["conjectural"] = true;
        j["claims"].push_back(std::move(cj));
    }
    j["pass"] = rep.pass();
    return j;
}

std::string report_to_text(const ScenarioReport& rep)
{
    std::ostringstream os;
    os << "scenario " << rep.scenario << " (q=" << rep.params.q << ", p=" << rep.params.p
       << ", case " << rep.params.case_id << ")\n";
    for (const auto& c : rep.claims) {
        os << "  [" << (c.conjectural ? "CONJ" : (c.pass ? "PASS" : "FAIL")) << "] "
           << c.description;
        if (!c.pass || c.conjectural)
            os << " | expected: " << c.expected << " | computed: " << c.computed;
        os << "\n";
    }
    os << (rep.pass() ? "PASS" : "FAIL") << " " << rep.scenario << "\n";
    return os.str();
}

std::string report_to_csv(const ScenarioReport& rep)
{
    std::ostringstream os;
    os << "scenario,claim,expected,computed,pass\n";
    auto esc = [](std::string s) {
        for (auto& ch : s)
            if (ch == ',')
                ch = ';';
        return s;
    };
    for (const auto& c : rep.claims)
        os << rep.scenario << "," << esc(c.description) << "," << esc(c.expected) << ","
           << esc(c.computed) << "," << (c.pass ? "1" : "0") << "\n";
    return os.str();
}

} // namespace thh
