#pragma once

#include "hypmirror/arrangement.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hypmirror {

using json = nlohmann::ordered_json;

struct RenderOptions {
    int width = 640;
    int height = 480;
    int margin = 40;
};

struct JobConfig {
    RawInput input;
    std::vector<std::string> tasks;
    std::string outDir;
    RenderOptions render;
};

inline const std::vector<std::string>& known_tasks() {
    static const std::vector<std::string> names{"check",  "circuits", "chambers",
                                                "strata", "mirror",   "atlas",
                                                "verify", "multiplicative", "periods"};
    return names;
}

namespace detail {

[[noreturn]] inline void config_error(const std::string& pointer, const std::string& what) {
    throw input_error("config error at " + pointer + ": " + what);
}

inline Rational parse_config_rational(const json& v, const std::string& pointer) {
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (v.is_number())
        config_error(pointer,
                     "non-exact numeric literal; write it as a string like \"1/10\" or \"0.1\"");
    if (!v.is_string())
        config_error(pointer, "expected an integer or a rational string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const parse_error& e) {
        config_error(pointer, e.what());
    }
}

inline std::vector<Rational> parse_rational_list(const json& v, const std::string& pointer) {
    if (!v.is_array())
        config_error(pointer, "expected an array");
    std::vector<Rational> out;
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_config_rational(v[i], pointer + "/" + std::to_string(i)));
    return out;
}

} // namespace detail

inline JobConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        detail::config_error("/", "expected an object");
    if (!doc.contains("input"))
        detail::config_error("/input", "missing required field");
    const json& in = doc["input"];
    if (!in.is_object())
        detail::config_error("/input", "expected an object");

    JobConfig job;
    if (!in.contains("d"))
        detail::config_error("/input/d", "missing required field");
    if (!in["d"].is_number_integer())
        detail::config_error("/input/d", "expected an integer");
    job.input.d = in["d"].get<int>();

    if (!in.contains("u"))
        detail::config_error("/input/u", "missing required field");
    if (!in["u"].is_array())
        detail::config_error("/input/u", "expected an array of integer rows");
    for (size_t i = 0; i < in["u"].size(); ++i) {
        const json& row = in["u"][i];
        std::string rp = "/input/u/" + std::to_string(i);
        if (!row.is_array())
            detail::config_error(rp, "expected an integer row");
        std::vector<Int> r;
        for (size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number_integer())
                detail::config_error(rp + "/" + std::to_string(j), "expected an integer");
            r.push_back(Int(row[j].get<long long>()));
        }
        job.input.u.push_back(std::move(r));
    }

    if (!in.contains("lambdaR"))
        detail::config_error("/input/lambdaR", "missing required field");
    job.input.lambdaR = detail::parse_rational_list(in["lambdaR"], "/input/lambdaR");

    if (in.contains("tropConst"))
        job.input.tropConst = detail::parse_rational_list(in["tropConst"], "/input/tropConst");

    if (in.contains("lambdaC")) {
        const json& lc = in["lambdaC"];
        if (!lc.is_object() || !lc.contains("re") || !lc.contains("im"))
            detail::config_error("/input/lambdaC", "expected an object with re and im arrays");
        job.input.lambdaCre = detail::parse_rational_list(lc["re"], "/input/lambdaC/re");
        job.input.lambdaCim = detail::parse_rational_list(lc["im"], "/input/lambdaC/im");
    }

    if (in.contains("kahler")) {
        const json& k = in["kahler"];
        if (!k.is_object() || !k.contains("mode") || !k["mode"].is_string())
            detail::config_error("/input/kahler", "expected an object with a mode string");
        std::string mode = k["mode"].get<std::string>();
        if (mode == "formal") {
            job.input.kahlerMode = KahlerMode::Formal;
        } else if (mode == "numeric") {
            job.input.kahlerMode = KahlerMode::Numeric;
            if (!k.contains("values"))
                detail::config_error("/input/kahler/values", "missing required field");
            job.input.kahlerValues = detail::parse_rational_list(k["values"], "/input/kahler/values");
            for (const Rational& q : job.input.kahlerValues)
                if (!(q > 0 && q < 1))
                    detail::config_error("/input/kahler/values",
                                         "numeric mode requires rational values strictly between 0 and 1");
        } else {
            detail::config_error("/input/kahler/mode", "expected \"formal\" or \"numeric\"");
        }
    }

    if (doc.contains("tasks")) {
        if (!doc["tasks"].is_array())
            detail::config_error("/tasks", "expected an array of task names");
        for (size_t i = 0; i < doc["tasks"].size(); ++i) {
            const json& t = doc["tasks"][i];
            std::string tp = "/tasks/" + std::to_string(i);
            if (!t.is_string())
                detail::config_error(tp, "expected a task name string");
            std::string name = t.get<std::string>();
            const auto& known = known_tasks();
            if (std::find(known.begin(), known.end(), name) == known.end())
                detail::config_error(tp, "unknown task \"" + name + "\"");
            job.tasks.push_back(name);
        }
    }

    if (doc.contains("output")) {
        if (!doc["output"].is_object())
            detail::config_error("/output", "expected an object");
        if (doc["output"].contains("dir")) {
            if (!doc["output"]["dir"].is_string())
                detail::config_error("/output/dir", "expected a string");
            job.outDir = doc["output"]["dir"].get<std::string>();
        }
    }

    if (doc.contains("render")) {
        const json& r = doc["render"];
        if (!r.is_object())
            detail::config_error("/render", "expected an object");
        auto geti = [&](const char* key, int fallback) {
            if (!r.contains(key))
                return fallback;
            if (!r[key].is_number_integer() || r[key].get<int>() <= 0)
                detail::config_error(std::string("/render/") + key, "expected a positive integer");
            return r[key].get<int>();
        };
        job.render.width = geti("width", job.render.width);
        job.render.height = geti("height", job.render.height);
        job.render.margin = geti("margin", job.render.margin);
    }
    return job;
}

} // namespace hypmirror
