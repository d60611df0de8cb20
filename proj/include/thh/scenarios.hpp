#pragma once

#include "thh/presets.hpp"

namespace thh {

struct Claim {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
    bool conjectural = false; /* reported, never asserted */
};

struct ScenarioReport {
    std::string scenario;
    CaseParams params;
    std::vector<Claim> claims;

    bool pass() const
    {
        for (const auto& c : claims)
            if (!c.pass && !c.conjectural)
                return false;
        return true;
    }
};

struct ScenarioInfo {
    std::string id;
    std::string description;
    int required_case = 0;        /* 0: any */
    bool needs_r_greater_1 = false;
    int default_degree = 60;
};

const std::vector<ScenarioInfo>& scenario_registry();

/* Reference parameter quadruple: (2,5) case 1, (7,5) case 2, (49,5) case 3,
 * (4,5) case 4; chosen minimal by direct search. */
std::vector<CaseParams> reference_params();
CaseParams reference_for_case(int case_id);

/* Runs a registered scenario; D <= 0 selects the scenario default. */
ScenarioReport verify_theorem(const std::string& id, const CaseParams& params, int D);

/* Every registered scenario on its supported reference pairs. */
std::vector<ScenarioReport> run_suite(int D = 0);

} // namespace thh
