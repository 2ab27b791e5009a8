#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcfet/params.hpp"

namespace mcfet {

// One cross-check between a closed form and an independent oracle. The check
// passes when the measured discrepancy stays within tolerance.
struct CheckResult {
    std::string name;
    double measured;
    double tolerance;
    bool pass;
    std::string detail;
};

// Fast level: self-consistency and oracle agreement on the given parameters.
// Full level adds Blahut-Arimoto, Monte Carlo moments, the analytic binary
// channel sanity check, and randomized parameter draws.
std::vector<CheckResult> run_checks(const SystemParams& params, bool full, std::uint64_t seed);

bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace mcfet
