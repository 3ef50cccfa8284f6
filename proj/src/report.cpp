#include "ilc/report.hpp"

#include <json.hpp>

namespace ilc {

std::string serialize_report(const Report& rep, bool include_timings)
{
    using json = nlohmann::ordered_json;

    json root;
    root["tool"] = tool_version;
    root["command"] = rep.command;

    json cfg = json::object();
    for (const auto& [key, value] : rep.config_echo)
        cfg[key] = value;
    root["config"] = cfg;

    json certs = json::array();
    for (const TargetOutcome& r : rep.results) {
        json c;
        c["target"] = r.cert.target;
        c["status"] = to_string(r.cert.status);
        c["depth"] = r.cert.depth;
        if (r.cert.r0_level)
            c["r0_level"] = *r.cert.r0_level;
        if (r.cert.failure) {
            c["failure"] = json{{"level", r.cert.failure->level},
                                {"index", r.cert.failure->index}};
        }
        if (r.expected) {
            c["expected"] = to_string(*r.expected);
            c["match"] = !r.mismatch();
        }
        if (!r.cert.notes.empty()) {
            json notes = json::object();
            for (const auto& [key, value] : r.cert.notes)
                notes[key] = value;
            c["notes"] = notes;
        }
        if (include_timings)
            c["elapsed_seconds"] = r.cert.elapsed.count();
        certs.push_back(c);
    }
    root["certificates"] = certs;

    json summary;
    summary["targets"] = rep.results.size();
    summary["certified"] = rep.count(Status::certified);
    summary["refuted"] = rep.count(Status::refuted);
    summary["inconclusive"] = rep.count(Status::inconclusive);
    summary["expected_mismatches"] = rep.mismatches();
    root["summary"] = summary;
    if (include_timings)
        root["total_elapsed_seconds"] = rep.total_elapsed.count();

    return root.dump(2) + "\n";
}

int report_exit_code(const Report& rep)
{
    return rep.mismatches() == 0 ? 0 : 1;
}

} // namespace ilc
