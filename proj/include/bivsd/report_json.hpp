#pragma once

#include <string_view>

#include <json.hpp>

#include "bivsd/dominance.hpp"

namespace bivsd {

// Enum <-> string mappings used by both the JSON reports and the CLI. The
// JSON field names and these spellings are the stable machine interface.
std::string_view to_string(Order v);
std::string_view to_string(StatClass v);
std::string_view to_string(Direction v);
std::string_view to_string(ModClass v);
std::string_view to_string(Adjustment v);
std::string_view to_string(Decision v);
std::string_view to_string(JointDecision v);

Order order_from_string(std::string_view s);
StatClass stat_class_from_string(std::string_view s);
Direction direction_from_string(std::string_view s);
ModClass mod_class_from_string(std::string_view s);
Adjustment adjustment_from_string(std::string_view s);

nlohmann::ordered_json json_statistic(const StatisticValue& v);
nlohmann::ordered_json json_condition(const ConditionResult& c);
nlohmann::ordered_json json_rescale(const RescaleTransform& t);
nlohmann::ordered_json json_report(const DominanceTestReport& rep);

}  // namespace bivsd
