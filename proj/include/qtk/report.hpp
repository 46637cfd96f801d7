#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace qtk {

struct CheckResult {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = false;
    std::string detail;
};

using Report = std::vector<CheckResult>;

[[nodiscard]] nlohmann::json to_json(const CheckResult& r);
[[nodiscard]] nlohmann::json to_json(const Report& report);
[[nodiscard]] Report report_from_json(const nlohmann::json& j);
[[nodiscard]] bool all_pass(const Report& report);
/// Sort by check name, then by the serialized parameters.
void sort_report(Report& report);

} // namespace qtk
