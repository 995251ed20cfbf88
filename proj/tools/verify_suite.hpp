#pragma once

#include "orbsurf/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbsurf::cli {

struct GroupReport {
    std::string name;
    long long checks = 0;
    long long failures = 0;
    std::vector<std::string> failure_notes; // capped, first few only
};

// Deterministic for a fixed seed; every group re-derives its expectations
// independently of the code paths it exercises.
std::vector<GroupReport> run_verify_suite(std::uint64_t seed);

Json to_json(const std::vector<GroupReport>& reports);

} // namespace orbsurf::cli
