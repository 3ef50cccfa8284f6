#pragma once

#include <cstdint>
#include <string>

#include "ilc/report.hpp"

namespace ilc {

// Bounds default to -1, meaning "use the command's desk-scale default".
struct CampaignConfig {
    std::string command;
    std::string subcommand;

    long max_n = -1;
    long max_k = -1;
    long max_r = -1;
    long max_m = -1;
    long max_u = -1;
    long max_v = -1;
    long k = -1;
    long window = -1;
    long count = -1;
    long max_deg = -1;
    long truncation_size = -1;
    long max_minor_order = -1;
    int max_depth = 12;
    std::string t_value; // rational as "p" or "p/q"

    std::uint64_t seed = 0;
    int jobs = 1;
    bool timings = false;
    std::string output;
};

Report run_campaign(const CampaignConfig& cfg);

ExactRat parse_rational(const std::string& text);

} // namespace ilc
