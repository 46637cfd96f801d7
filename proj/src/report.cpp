#include "qtk/report.hpp"

#include <algorithm>

namespace qtk {

nlohmann::json to_json(const CheckResult& r)
{
    return {{"check", r.check}, {"params", r.params}, {"status", r.pass ? "pass" : "fail"}, {"detail", r.detail}};
}

nlohmann::json to_json(const Report& report)
{
    auto arr = nlohmann::json::array();
    for (const auto& r : report) arr.push_back(to_json(r));
    return arr;
}

Report report_from_json(const nlohmann::json& j)
{
    Report out;
    for (const auto& e : j) {
        CheckResult r;
        r.check = e.at("check").get<std::string>();
        r.params = e.at("params");
        r.pass = e.at("status").get<std::string>() == "pass";
        r.detail = e.at("detail").get<std::string>();
        out.push_back(std::move(r));
    }
    return out;
}

bool all_pass(const Report& report)
{
    return std::all_of(report.begin(), report.end(), [](const CheckResult& r) { return r.pass; });
}

void sort_report(Report& report)
{
    std::stable_sort(report.begin(), report.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.params.dump() < b.params.dump();
    });
}

} // namespace qtk
