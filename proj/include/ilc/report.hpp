#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ilc/certificate.hpp"

namespace ilc {

inline constexpr const char* tool_version = "ilc 0.1.0";

struct TargetOutcome {
    Certificate cert;
    std::optional<Status> expected;

    bool mismatch() const { return expected && cert.status != *expected; }
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<TargetOutcome> results;
    std::chrono::duration<double> total_elapsed{0.0};

    long count(Status s) const
    {
        long c = 0;
        for (const TargetOutcome& r : results)
            if (r.cert.status == s)
                ++c;
        return c;
    }
    long mismatches() const
    {
        long c = 0;
        for (const TargetOutcome& r : results)
            if (r.mismatch())
                ++c;
        return c;
    }
};

// Stable key order, integers as exact decimals, no floating point except the
// optional timing fields.
std::string serialize_report(const Report& rep, bool include_timings = false);

// 0 when every target matches its expectation, 1 otherwise.
int report_exit_code(const Report& rep);

} // namespace ilc
