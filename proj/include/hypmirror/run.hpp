#pragma once

#include "hypmirror/config.hpp"
#include "hypmirror/report.hpp"
#include "hypmirror/svg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypmirror {

struct TaskResult {
    std::string task;
    json report;
    bool pass = true; // informational tasks always pass
};

struct RunResult {
    int exitCode = 0;
    std::vector<TaskResult> results;

    json bundle() const {
        json out = json::object();
        for (const auto& r : results)
            out[r.task] = r.report;
        return out;
    }
};

// executes the requested tasks in order; shared structures are built once
inline RunResult run(const JobConfig& job) {
    RunResult out;
    HypertoricData h = load_and_normalize(job.input);

    std::optional<TropicalArrangement> arrCache;
    auto arrangement = [&]() -> const TropicalArrangement& {
        if (!arrCache)
            arrCache = build_tropical(h);
        return *arrCache;
    };
    std::optional<Atlas> atlasCache;
    auto atlas = [&]() -> const Atlas& {
        if (!atlasCache)
            atlasCache = build_atlas(h);
        return *atlasCache;
    };

    for (const std::string& task : job.tasks) {
        TaskResult r;
        r.task = task;
        if (task == "check")
            r.report = check_report(h);
        else if (task == "circuits")
            r.report = circuits_report(h);
        else if (task == "chambers")
            r.report = chambers_report(arrangement());
        else if (task == "strata")
            r.report = strata_report(h, arrangement());
        else if (task == "mirror")
            r.report = mirror_report(h, arrangement());
        else if (task == "atlas")
            r.report = atlas_report(atlas());
        else if (task == "verify")
            r.report = verify_report(atlas());
        else if (task == "multiplicative")
            r.report = multiplicative_report(h);
        else if (task == "periods")
            r.report = periods_report(h);
        else
            throw input_error("unknown task: " + task);
        if (r.report.contains("pass"))
            r.pass = r.report["pass"].get<bool>();
        out.results.push_back(std::move(r));
    }
    for (const auto& r : out.results)
        if (!r.pass)
            out.exitCode = 1;
    return out;
}

// plain-text rendering of a report, mirroring the JSON key order
inline void render_text(std::ostream& os, const json& v, int indent = 0) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (val.is_object() || val.is_array()) {
                os << pad << key << ":\n";
                render_text(os, val, indent + 1);
            } else {
                os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump())
                   << "\n";
            }
        }
    } else if (v.is_array()) {
        for (const auto& val : v) {
            if (val.is_object() || val.is_array()) {
                os << pad << "-\n";
                render_text(os, val, indent + 1);
            } else {
                os << pad << "- "
                   << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
        if (v.empty())
            os << pad << "(empty)\n";
    } else {
        os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace hypmirror
