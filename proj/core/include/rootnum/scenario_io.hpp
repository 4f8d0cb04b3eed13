#pragma once

#include <string>
#include <string_view>

#include "rootnum/epsilon_transfer.hpp"
#include "rootnum/existence.hpp"
#include "rootnum/prediction.hpp"

namespace rootnum {

Scenario parse_scenario(std::string_view json_text);

// Canonical serialisations: fixed key order, places sorted by id.
std::string report_to_json(const PredictionReport& r);
std::string report_to_text(const PredictionReport& r);
std::string error_to_json(std::string_view kind, std::string_view message);

std::string schedule_to_json(const CoefficientSchedule& s);
std::string schedule_to_text(const CoefficientSchedule& s);

Conductor parse_conductor_json(std::string_view json_text);
std::string conductor_to_json(const Conductor& c);

}  // namespace rootnum
