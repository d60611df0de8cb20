#include "thh/serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace thh;

int default_max_degree()
{
    if (const char* env = std::getenv("THH_ENGINE_MAX_DEGREE"))
        return std::max(0, std::atoi(env));
    return 60;
}

struct Options {
    i64 q = 2;
    i64 p = 5;
    int max_degree = -1;
    std::string output = "text";
    std::string id;
    std::string preset;
    std::string input_file;
    bool hypothesis = false;
};

int degree_or_default(const Options& o)
{
    return o.max_degree >= 0 ? o.max_degree : default_max_degree();
}

void print_series(const Options& o, const PoincareSeries& s, const std::string& label)
{
    if (o.output == "json") {
        json j;
        j["label"] = label;
        j["dims"] = s.dims;
        std::cout << j.dump(2) << "\n";
    }
    else if (o.output == "csv") {
        std::cout << "degree,dim\n";
        for (size_t d = 0; d < s.dims.size(); ++d)
            std::cout << d << "," << s.dims[d] << "\n";
    }
    else {
        std::cout << label << " dims by total degree:\n";
        for (size_t d = 0; d < s.dims.size(); ++d)
            if (s.dims[d] != 0)
                std::cout << "  " << d << ": " << s.dims[d] << "\n";
    }
}

Presentation load_presentation(const Options& o, const CaseParams& params)
{
    if (!o.input_file.empty()) {
        std::ifstream in(o.input_file);
        if (!in)
            throw Error("cannot open '" + o.input_file + "'");
        json j;
        in >> j;
        return presentation_from_json(j);
    }
    if (o.preset.empty())
        throw Error("provide --preset or --input");
    return preset_presentation(o.preset, params);
}

int cmd_classify(const Options& o)
{
    CaseParams c = classify(o.q, o.p);
    /* key order fixed by hand; nlohmann would sort alphabetically */
    std::cout << "{\"r\":" << c.r << ",\"v\":" << c.v << ",\"case\":" << c.case_id << "}\n";
    return 0;
}

int cmd_poincare(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    Presentation pres = load_presentation(o, params);
    int D = degree_or_default(o);
    PoincareSeries s = poincare(pres, D);
    if (o.output == "json")
        std::cout << poincare_to_json(pres, s).dump(2) << "\n";
    else
        print_series(o, s, o.preset.empty() ? "presentation" : o.preset);
    return 0;
}

int cmd_hh(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    Presentation pres = load_presentation(o, params);
    int D = degree_or_default(o);
    Presentation fp = trivial_algebra(pres.field());
    ChainComplex cx = hochschild_complex(pres, fp, augmentation_hom(pres, fp), D);
    if (o.output == "json") {
        std::cout << complex_to_json(cx).dump(2) << "\n";
        return 0;
    }
    std::cout << "Hochschild homology (coefficients F_p) by (s, t):\n";
    for (const auto& [st, h] : cx.homology_dims())
        std::cout << "  (" << st.first << ", " << st.second << "): " << h << "\n";
    return 0;
}

int cmd_tor(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    Presentation pres = load_presentation(o, params);
    int D = degree_or_default(o);
    BigradedDims tor = tor_via_bar(pres, D);
    if (o.output == "json") {
        json j = json::array();
        for (const auto& [st, d] : tor.by_bidegree)
            j.push_back({{"s", st.first}, {"t", st.second}, {"dim", d}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "Tor_{s,t}(F_p, F_p):\n";
    for (const auto& [st, d] : tor.by_bidegree)
        std::cout << "  (" << st.first << ", " << st.second << "): " << d << "\n";
    return 0;
}

int cmd_resolution(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    int D = degree_or_default(o);
    if (o.preset == "ahl3") {
        FreeResolution res = ahl3_resolution(params, D);
        std::cout << res.text_chart();
        return 0;
    }
    Presentation pres = load_presentation(o, params);
    FreeResolution res = minimal_resolution(pres, D);
    std::cout << res.text_chart();
    return 0;
}

int cmd_primitives(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    int D = degree_or_default(o);
    std::string which = o.preset.empty() ? "dual-steenrod" : o.preset;
    auto run = [&](const Comodule& cm) {
        if (o.output == "json") {
            json j = json::array();
            for (int n = 0; n <= cm.bound(); ++n)
                j.push_back({{"degree", n}, {"dim", cm.primitive_dim(n)}});
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::cout << "comodule primitives by degree:\n";
        for (int n = 0; n <= cm.bound(); ++n) {
            i64 d = cm.primitive_dim(n);
            if (d != 0)
                std::cout << "  " << n << ": " << d << "\n";
        }
    };
    if (which == "dual-steenrod")
        run(dual_steenrod_self_comodule(build_dual_steenrod(o.p, D)));
    else if (which == "homology-k")
        run(homology_of_K_comodule(params, 0, D));
    else if (which == "v1-thh-case1")
        run(v1_thh_comodule(o.p, 1, D));
    else
        throw Error("primitives: preset must be dual-steenrod, homology-k or v1-thh-case1");
    return 0;
}

int cmd_page(const Options& o)
{
    CaseParams params = classify(o.q, o.p);
    int D = degree_or_default(o);
    std::string which = o.preset;
    if (which.empty())
        throw Error("page: provide --preset");
    auto show = [&](PageState& page) {
        if (o.output == "json")
            std::cout << page_to_json(page).dump(2) << "\n";
        else
            std::cout << page_dot_chart(page, std::min(D, 60));
    };
    if (which == "brun-sset2-e2") {
        PageState page(brun_sset2_e2(params), D);
        if (params.case_id == 1)
            page.run(sset2_d_lambda1(page.presentation(), params));
        if (params.case_id <= 2)
            page.run(sset2_d_mu1(page.presentation(), params));
        show(page);
        return 0;
    }
    if (which == "brun-sset3-e2-case1") {
        PageState page(brun_sset3_e2_case1(params), D);
        page.run(sset3_case1_d(page.presentation(), params));
        show(page);
        return 0;
    }
    if (which == "bokstedt-e2-case2") {
        PageState page(bokstedt_e2_case2(params, D), D, Convention::Homological, 2);
        page.run(bokstedt_d_pminus1(page.presentation(), params));
        show(page);
        return 0;
    }
    if (which == "brun-sset3-e2-case34") {
        PageState page(brun_sset3_e2_case34(params), D);
        if (o.hypothesis) {
            std::cout << "# conjectural differentials (closing remark); output not asserted\n";
            if (params.case_id == 4)
                page.run(sset3_case4_d_lambda1(page.presentation(), params));
            page.run(sset3_case34_d_mu1(page.presentation(), params));
        }
        show(page);
        return 0;
    }
    /* generic: presentation preset + differential spec from a file */
    Presentation pres = load_presentation(o, params);
    PageState page(pres, D);
    if (!o.input_file.empty()) {
        /* input may carry a "differential" object next to the presentation */
        std::ifstream in(o.input_file);
        json j;
        in >> j;
        if (j.contains("differential"))
            page.run(differential_spec_from_json(pres, j.at("differential")));
    }
    show(page);
    return 0;
}

int print_report(const Options& o, const ScenarioReport& rep)
{
    if (o.output == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else if (o.output == "csv")
        std::cout << report_to_csv(rep);
    else
        std::cout << report_to_text(rep);
    return rep.pass() ? 0 : 1;
}

int cmd_scenario(const Options& o)
{
    if (o.id.empty())
        throw Error("scenario: provide --id");
    CaseParams params = classify(o.q, o.p);
    ScenarioReport rep = verify_theorem(o.id, params, o.max_degree);
    return print_report(o, rep);
}

int cmd_suite(const Options& o)
{
    auto reports = run_suite(o.max_degree);
    bool all = true;
    json arr = json::array();
    for (const auto& rep : reports) {
        if (!rep.pass())
            all = false;
        if (o.output == "json")
            arr.push_back(report_to_json(rep));
        else
            std::cout << report_to_text(rep) << "\n";
    }
    if (o.output == "json")
        std::cout << arr.dump(2) << "\n";
    else
        std::cout << (all ? "SUITE PASS" : "SUITE FAIL") << " (" << reports.size()
                  << " scenarios)\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact F_p verification engine for graded algebras, Hochschild/Tor "
                 "homology, Steenrod comodules and spectral-sequence pages"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd, bool needs_params) {
        if (needs_params) {
            cmd->add_option("--q", o.q, "prime power q");
            cmd->add_option("--p", o.p, "prime p >= 5 coprime to q");
        }
        cmd->add_option("--max-degree", o.max_degree, "total degree bound");
        cmd->add_option("--output", o.output, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "case classification of (q, p)");
    add_common(classify_cmd, true);

    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare series of a presentation");
    add_common(poincare_cmd, true);
    poincare_cmd->add_option("--preset", o.preset, "named presentation");
    poincare_cmd->add_option("--input", o.input_file, "presentation JSON file");

    auto* hh_cmd = app.add_subcommand("hh", "Hochschild homology with F_p coefficients");
    add_common(hh_cmd, true);
    hh_cmd->add_option("--preset", o.preset, "named presentation");
    hh_cmd->add_option("--input", o.input_file, "presentation JSON file");

    auto* tor_cmd = app.add_subcommand("tor", "Tor(F_p, F_p) via the bar complex");
    add_common(tor_cmd, true);
    tor_cmd->add_option("--preset", o.preset, "named presentation");
    tor_cmd->add_option("--input", o.input_file, "presentation JSON file");

    auto* res_cmd = app.add_subcommand("resolution", "minimal free resolution chart");
    add_common(res_cmd, true);
    res_cmd->add_option("--preset", o.preset, "named presentation, or 'ahl3'");
    res_cmd->add_option("--input", o.input_file, "presentation JSON file");

    auto* prim_cmd = app.add_subcommand("primitives", "comodule primitive dimensions");
    add_common(prim_cmd, true);
    prim_cmd->add_option("--preset", o.preset,
                         "dual-steenrod, homology-k or v1-thh-case1");

    auto* page_cmd = app.add_subcommand("page", "run a spectral-sequence page");
    add_common(page_cmd, true);
    page_cmd->add_option("--preset", o.preset, "named page");
    page_cmd->add_option("--input", o.input_file, "presentation + differential JSON");
    page_cmd->add_flag("--hypothesis", o.hypothesis,
                       "include the conjectural closing-remark differentials");

    auto* sc_cmd = app.add_subcommand("scenario", "run one registered scenario");
    add_common(sc_cmd, true);
    sc_cmd->add_option("--id", o.id, "scenario id");

    auto* suite_cmd = app.add_subcommand("suite", "run every registered scenario");
    add_common(suite_cmd, false);

    auto* list_cmd = app.add_subcommand("list", "list scenarios and presets");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { /* --help */
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (classify_cmd->parsed())
            return cmd_classify(o);
        if (poincare_cmd->parsed())
            return cmd_poincare(o);
        if (hh_cmd->parsed())
            return cmd_hh(o);
        if (tor_cmd->parsed())
            return cmd_tor(o);
        if (res_cmd->parsed())
            return cmd_resolution(o);
        if (prim_cmd->parsed())
            return cmd_primitives(o);
        if (page_cmd->parsed())
            return cmd_page(o);
        if (sc_cmd->parsed())
            return cmd_scenario(o);
        if (suite_cmd->parsed())
            return cmd_suite(o);
        if (list_cmd->parsed()) {
            std::cout << "scenarios:\n";
            for (const auto& info : scenario_registry())
                std::cout << "  " << info.id << " - " << info.description << "\n";
            std::cout << "presets:\n";
            for (const auto& n : preset_names())
                std::cout << "  " << n << "\n";
            return 0;
        }
    }
    catch (const thh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
