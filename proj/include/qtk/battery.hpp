#pragma once

#include "qtk/report.hpp"

#include <cstdint>

namespace qtk {

struct BatteryOptions {
    int max_n = 8;         // largest |mu| for exact checks, at most 8
    int oracle_degree = 6; // largest |mu| compared against the Gram-Schmidt oracle, at most 6
    int points = 3;        // rational points per oracle or rational-coefficient check
    std::uint64_t seed = 20240601;
    int jobs = 1;
};

/// Every verification suite, merged and sorted by check name. Throws DomainError on bad bounds.
[[nodiscard]] Report run_battery(const BatteryOptions& opts);

/// The individual groups, each usable on its own.
[[nodiscard]] Report worked_examples();
[[nodiscard]] Report main_theorem_checks(int max_n);
[[nodiscard]] Report component_checks(int max_n);
[[nodiscard]] Report specialization_checks(int max_n);
[[nodiscard]] Report oracle_checks(int oracle_degree, int points, std::uint64_t seed);
[[nodiscard]] Report rational_prop_checks(int max_n, int points, std::uint64_t seed);
[[nodiscard]] Report structural_checks(int max_n);
[[nodiscard]] Report unimodality_checks(int max_n);

} // namespace qtk
