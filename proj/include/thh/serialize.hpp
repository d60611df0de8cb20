#pragma once

#include "thh/homological.hpp"
#include "thh/scenarios.hpp"
#include "thh/steenrod.hpp"

#include <json.hpp>

namespace thh {

using json = nlohmann::json;

/* schema: {"p": int, "generators": [{"name","degree","filtration","kind",
 * "height"?}], "relations": [string], "dims"?: [int]} */
json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const json& j);

json poincare_to_json(const Presentation& pres, const PoincareSeries& s);
json series_to_json(const PoincareSeries& s);

/* elements as strings: "3*x^2*y + 4*z"; parser accepts the same shape */
std::string element_to_string(const Presentation& pres, const Element& e);
Element element_from_string(const Presentation& pres, const std::string& s);

json differential_spec_to_json(const Presentation& pres, const DifferentialSpec& spec);
DifferentialSpec differential_spec_from_json(const Presentation& pres, const json& j);

json bigraded_dims_to_json(const std::map<Bidegree, i64>& dims);
json page_to_json(const PageState& page);
std::string page_dot_chart(const PageState& page, int D);

json complex_to_json(const ChainComplex& cx);
json comodule_to_json(const Comodule& cm);

json report_to_json(const ScenarioReport& rep);
std::string report_to_text(const ScenarioReport& rep);
std::string report_to_csv(const ScenarioReport& rep);

} // namespace thh
