#include "thh/serialize.hpp"

#include <doctest.h>

using namespace thh;

TEST_CASE("presentation json round-trip, with relations")
{
    for (const std::string& name :
         {std::string("omega-infinity"), std::string("v1-thh-case1"),
          std::string("brun-sset2-e2"), std::string("bokstedt-e2-case2")}) {
        Presentation pres = preset_presentation(name, classify(7, 5));
        json j = presentation_to_json(pres);
        Presentation back = presentation_from_json(j);
        REQUIRE(back.ngens() == pres.ngens());
        for (size_t i = 0; i < pres.ngens(); ++i) {
            CHECK(back.generators()[i].name == pres.generators()[i].name);
            CHECK(back.generators()[i].degree == pres.generators()[i].degree);
            CHECK(back.generators()[i].filtration == pres.generators()[i].filtration);
            CHECK(back.generators()[i].kind == pres.generators()[i].kind);
        }
        CHECK(poincare(back, 80) == poincare(pres, 80));
    }
}

TEST_CASE("element strings parse back to the same element")
{
    Presentation om = omega_infinity(5);
    for (const Element& rel : om.relations()) {
        std::string s = element_to_string(om, rel);
        CHECK(element_from_string(om, s) == rel);
    }
    Element sum = element_from_string(om, "2*x + 3*e");
    CHECK(sum.size() == 2);
    CHECK(element_from_string(om, "0").is_zero());
    CHECK(element_from_string(om, "x^1").size() == 1);
    CHECK_THROWS_AS(element_from_string(om, "nope"), Error);
}

TEST_CASE("differential spec json round-trip")
{
    CaseParams params = classify(2, 5);
    Presentation page = brun_sset2_e2(params);
    DifferentialSpec spec = sset2_d_lambda1(page, params, 3);
    json j = differential_spec_to_json(page, spec);
    DifferentialSpec back = differential_spec_from_json(page, j);
    CHECK(back.page == spec.page);
    REQUIRE(back.assigns.size() == 1);
    CHECK(back.assigns[0].gen == spec.assigns[0].gen);
    CHECK(back.assigns[0].unit == 3);
    CHECK(back.assigns[0].target == spec.assigns[0].target);
}

TEST_CASE("report json carries the published fields")
{
    ScenarioReport rep = verify_theorem("v0ten", classify(49, 5), 40);
    json j = report_to_json(rep);
    CHECK(j.at("scenario") == "v0ten");
    CHECK(j.at("params").at("q") == 49);
    CHECK(j.at("params").at("case") == 3);
    REQUIRE(j.at("claims").is_array());
    for (const auto& c : j.at("claims")) {
        CHECK(c.contains("description"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("computed"));
        CHECK(c.contains("pass"));
    }
    CHECK(j.at("pass").get<bool>());
    /* text and csv renderings report the same verdicts */
    std::string text = report_to_text(rep);
    CHECK(text.find("PASS") != std::string::npos);
    std::string csv = report_to_csv(rep);
    CHECK(csv.find(",1") != std::string::npos);
}

TEST_CASE("page chart serialization")
{
    CaseParams params = classify(2, 5);
    PageState page(brun_sset2_e2(params), 30);
    json j = page_to_json(page);
    CHECK(j.at("page") == 2);
    CHECK(j.at("dims").is_array());
    std::string chart = page_dot_chart(page, 20);
    CHECK(chart.find('1') != std::string::npos);
}

TEST_CASE("comodule dump lists coaction triples")
{
    Comodule cm = homology_of_K_comodule(classify(7, 5), 1, 10);
    json j = comodule_to_json(cm);
    CHECK(j.at("p") == 5);
    REQUIRE(j.at("coactions").is_array());
    bool found_a_term = false;
    for (const auto& co : j.at("coactions"))
        if (co.at("generator") == "xi1")
            for (const auto& term : co.at("terms"))
                if (term[0].get<std::string>() == "tb0")
                    found_a_term = true;
    CHECK(found_a_term); /* the a·tau-bar_0 ⊗ x term with a = 1 */
}
