// End-to-end acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 on any failure.

#include "qtk/battery.hpp"
#include "qtk/error.hpp"
#include "qtk/macdonald.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>

using namespace qtk;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Identities between Hall-Littlewood operators; the rest of the suite compares expansions.
const std::set<std::string> kOperatorIdentities = {
    "comm1_barH_n_H_m", "comm2_H_m_H_m+1", "comm3_H_relation", "snake_rule_k_independence",
    "e1_on_HL_2x1y", "h2_on_HL_2x1y", "h1h1_on_HL_2x1y", "barH3_on_HL_2x1y",
    "barH3_on_HL_2x1y_exponent_2x+y+1_rejected", "barH4_on_HL_2a1b", "barH4_base_case", "e1_on_HL_32a1b",
    "H1_raises_two_column",
};

Report split_suite(bool operator_identities)
{
    Report out;
    for (auto& r : hl_identity_suite(8))
        if (kOperatorIdentities.count(r.check) == (operator_identities ? 1u : 0u)) out.push_back(std::move(r));
    return out;
}

Report expansion_checks()
{
    Report out = split_suite(false);
    for (auto& r : rational_prop_checks(8, 3, kSeed)) out.push_back(std::move(r));
    return out;
}

struct Criterion {
    const char* id;
    const char* title;
    std::function<Report()> run;
    double budget_s; // 0 means no time requirement
    std::size_t min_checks;
};

bool report_line(const Criterion& c)
{
    const auto start = std::chrono::steady_clock::now();
    Report r;
    std::string error;
    try {
        r = c.run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t failed = 0;
    for (const auto& x : r) failed += x.pass ? 0 : 1;
    const bool in_time = c.budget_s == 0 || secs < c.budget_s;
    const bool ok = error.empty() && failed == 0 && r.size() >= c.min_checks && in_time;

    std::printf("[%s] %s %s: %zu checks, %zu failed, %.2f s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, r.size(),
                failed, secs, in_time ? "" : " (over time budget)");
    if (!error.empty()) std::printf("       error: %s\n", error.c_str());
    if (r.size() < c.min_checks) std::printf("       expected at least %zu checks\n", c.min_checks);
    int shown = 0;
    for (const auto& x : r)
        if (!x.pass && shown++ < 5)
            std::printf("       %s %s: %s\n", x.check.c_str(), x.params.dump().c_str(), x.detail.c_str());
    return ok;
}

} // namespace

int main()
{
    set_macdonald_cache(true);
    const Criterion criteria[] = {
        {"AC1", "worked examples", [] { return worked_examples(); }, 1.0, 10},
        {"AC2", "statistics generate H_mu, coefficients positive, |mu| <= 8", [] { return main_theorem_checks(8); },
         60.0, 2},
        {"AC3", "head components, 2a+b+|S| <= 8", [] { return component_checks(8); }, 0, 1},
        {"AC4", "Hall-Littlewood operator identities", [] { return split_suite(true); }, 60.0, 13},
        {"AC5", "closed expansions and operator forms", [] { return expansion_checks(); }, 0, 10},
        {"AC6", "oracle equivalence, |mu| <= 6, 3 points", [] { return oracle_checks(6, 3, kSeed); }, 0, 1},
        {"AC7", "specializations, |mu| <= 8", [] { return specialization_checks(8); }, 0, 5},
        {"AC8", "structural lemmas by exhaustion, n <= 5", [] { return structural_checks(8); }, 0, 9},
        {"AC9", "printed sequences and unimodality, |mu| <= 8", [] { return unimodality_checks(8); }, 0, 18},
    };
    int failures = 0;
    for (const auto& c : criteria) failures += report_line(c) ? 0 : 1;
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
