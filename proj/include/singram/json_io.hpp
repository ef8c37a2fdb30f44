#pragma once

#include "singram/constructions.hpp"
#include "singram/graph6.hpp"
#include "singram/search.hpp"
#include "singram/turan.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace singram {

using ojson = nlohmann::ordered_json;

inline constexpr int certificate_schema = 1;

inline auto fnv1a64(std::string_view data) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline auto hex64(std::uint64_t v) -> std::string
{
    static const char * digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4)
        out[i] = digits[v & 15];
    return out;
}

inline auto class_json(const std::vector<ClassSpec> & classes) -> ojson
{
    ojson a = ojson::array();
    for (const auto & c : classes)
        a.push_back({{"size", c.size}, {"degree", c.degree}});
    return a;
}

inline auto to_json(const ConstructionReport & r) -> ojson
{
    ojson j;
    j["name"] = r.name;
    ojson params = ojson::object();
    for (const auto & [k, v] : r.params)
        params[k] = v;
    j["params"] = params;
    j["order"] = r.graph.order();
    j["edges"] = r.graph.edge_count();
    j["graph6"] = g6_encode(r.graph);
    j["expectedClasses"] = class_json(r.expected_classes);
    j["actualClasses"] = class_json(r.actual_classes);
    j["classesMatch"] = r.classes_match;
    j["patterns"] = r.f2_name.empty() ? ojson::array({r.f1_name}) : ojson::array({r.f1_name, r.f2_name});
    j["k"] = r.k;
    j["verifiedSr"] = r.verified_sr;
    return j;
}

/// Fixed field order; with `timing` false the millis fields are zeroed so reruns are byte-identical.
inline auto to_json(const Certificate & c, bool timing = true) -> ojson
{
    ojson j;
    j["schema"] = certificate_schema;
    j["claim"] = c.claim;
    j["patterns"] = {c.f1, c.f2};
    j["k"] = c.k;
    j["value"] = c.value;
    j["upper"] = c.upper;
    j["ramsey"] = c.ramsey;
    j["quadraticBound"] = c.quadratic_bound;
    ojson w = ojson::array();
    for (const auto & g : c.witnesses)
        w.push_back(g6_encode(g));
    j["witnesses"] = w;
    j["witnessSource"] = c.witness_source;
    ojson sweep = ojson::array();
    for (const auto & r : c.sweep)
        sweep.push_back({{"n", r.n}, {"method", r.method}, {"outcome", r.outcome}, {"nodes", r.nodes}, {"millis", timing ? r.millis : 0}, {"detail", r.detail}});
    j["sweep"] = sweep;
    ojson hosts = ojson::array();
    for (const auto & h : c.hosts)
        hosts.push_back({{"order", h.order}, {"graph6", g6_encode(h.graph)}, {"stable", h.stable}});
    j["hosts"] = hosts;
    j["complete"] = c.complete;
    j["toolVersion"] = c.tool;
    j["seed"] = c.seed;
    return j;
}

inline auto to_json(const TsResult & r) -> ojson
{
    ojson j;
    j["n"] = r.n;
    j["pattern"] = r.pattern;
    j["k"] = r.k;
    j["value"] = r.value;
    j["method"] = r.method;
    j["source"] = r.source;
    ojson w = ojson::array();
    for (const auto & g : r.witnesses)
        w.push_back(g6_encode(g));
    j["witnesses"] = w;
    return j;
}

/// Output directory: the SINGRAM_OUT environment variable, else the current directory.
inline auto default_output_dir() -> std::filesystem::path
{
    const char * env = std::getenv("SINGRAM_OUT");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path(".");
}

struct OutputFile
{
    std::string path;
    std::string digest;
};

struct RunManifest
{
    std::string command_line;
    std::string tool = tool_version;
    std::uint64_t seed = 1;
    long wall_millis = 0;
    int exit_code = 0;
    std::vector<OutputFile> outputs;
};

inline auto to_json(const RunManifest & m, bool timing = true) -> ojson
{
    ojson j;
    j["commandLine"] = m.command_line;
    j["toolVersion"] = m.tool;
    j["seed"] = m.seed;
    j["wallMillis"] = timing ? m.wall_millis : 0;
    j["exitCode"] = m.exit_code;
    ojson files = ojson::array();
    for (const auto & f : m.outputs)
        files.push_back({{"path", f.path}, {"fnv1a64", f.digest}});
    j["outputs"] = files;
    return j;
}

/// Writes text to a file (creating parent directories) and returns its digest.
inline auto write_output(const std::filesystem::path & path, const std::string & text) -> OutputFile
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream os(path, std::ios::binary);
    if (! os)
        throw std::runtime_error("cannot write " + path.string());
    os << text;
    if (! os)
        throw std::runtime_error("write failed: " + path.string());
    return {path.string(), hex64(fnv1a64(text))};
}

inline auto file_digest(const std::filesystem::path & path) -> std::string
{
    std::ifstream is(path, std::ios::binary);
    if (! is)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << is.rdbuf();
    return hex64(fnv1a64(ss.str()));
}

} // namespace singram
