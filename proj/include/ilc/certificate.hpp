#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ilc {

enum class Status { certified, refuted, inconclusive };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::certified: return "certified";
    case Status::refuted: return "refuted";
    default: return "inconclusive";
    }
}

struct Failure {
    int level = 0;
    long index = 0;
};

// Outcome of one verification target.  `depth` is the last L-level examined;
// a certified target records the level at which the r0-factor (or analogous
// closing) condition fired, a refuted one records the first failing
// (level, index).  `notes` carries replay data (witness values, mint terms)
// as ordered key/value pairs so reports serialize deterministically.
struct Certificate {
    std::string target;
    Status status = Status::inconclusive;
    int depth = 0;
    std::optional<Failure> failure;
    std::optional<int> r0_level;
    std::chrono::duration<double> elapsed{0.0};
    std::vector<std::pair<std::string, std::string>> notes;

    void note(std::string key, std::string value)
    {
        notes.emplace_back(std::move(key), std::move(value));
    }
};

} // namespace ilc
